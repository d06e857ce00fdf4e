#include "qgw/io.hpp"

#include "qgw/error.hpp"

namespace qgw {

namespace {

Json int_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class int_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw Error("ParseError", "io", "integer expected");
}

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(cyc_to_json(c));
    return a;
}

Vec vec_from_json(const Json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) throw Error("ParseError", "io", "vector of length " + std::to_string(n) + " expected");
    Vec v;
    for (const auto& c : j) v.push_back(cyc_from_json(c));
    return v;
}

Json mat_to_json(const Mat& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) a.push_back(Json::array({i, j, cyc_to_json(m(i, j))}));
    return a;
}

Mat mat_from_json(const Json& j, int n) {
    if (!j.is_array()) throw Error("ParseError", "io", "matrix entries expected");
    Mat m(n, n);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) throw Error("ParseError", "io", "matrix entry [row, col, coeff] expected");
        int r = e[0].get<int>(), c = e[1].get<int>();
        if (r < 0 || r >= n || c < 0 || c >= n) throw Error("ParseError", "io", "matrix index out of range");
        m(r, c) = cyc_from_json(e[2]);
    }
    return m;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw Error("ParseError", "io", std::string("missing field ") + name);
    return j.at(name);
}

} // namespace

Json cyc_to_json(const CycNum& c) {
    Json co = Json::array();
    for (const auto& q : c.coeffs()) co.push_back(Json::array({int_to_json(q.get_num()), int_to_json(q.get_den())}));
    Json j;
    j["order"] = c.order();
    j["coeffs"] = co;
    return j;
}

CycNum cyc_from_json(const Json& j) {
    try {
        int order = field(j, "order").get<int>();
        std::vector<mpq_class> co;
        for (const auto& p : field(j, "coeffs")) {
            if (!p.is_array() || p.size() != 2) throw Error("ParseError", "io", "[num, den] expected");
            mpq_class q(int_from_json(p[0]), int_from_json(p[1]));
            if (q.get_den() == 0) throw Error("ParseError", "io", "zero denominator");
            q.canonicalize();
            co.push_back(q);
        }
        return CycNum::from_coeffs(order, std::move(co));
    } catch (const Json::exception& e) {
        throw Error("ParseError", "io", e.what());
    }
}

Json hopf_to_json(const HopfAlgebraData& h) {
    Json j;
    j["format_version"] = "qgw-1";
    j["cyc_order"] = h.cyc_order;
    j["dim"] = h.dim;
    j["labels"] = h.labels;
    Json mult = Json::array();
    for (int a = 0; a < h.dim; ++a)
        for (int b = 0; b < h.dim; ++b)
            for (const auto& t : h.mult_of(a, b)) mult.push_back(Json::array({a, b, t.k, cyc_to_json(t.c)}));
    j["mult"] = mult;
    Json comult = Json::array();
    for (int a = 0; a < h.dim; ++a)
        for (const auto& t : h.comult[a]) comult.push_back(Json::array({a, t.j, t.k, cyc_to_json(t.c)}));
    j["comult"] = comult;
    j["unit"] = vec_to_json(h.unit);
    j["counit"] = vec_to_json(h.counit);
    j["antipode"] = mat_to_json(h.antipode);
    j["star"] = mat_to_json(h.star);
    return j;
}

HopfPtr hopf_from_json(const Json& j) {
    try {
        if (field(j, "format_version") != "qgw-1") throw Error("ParseError", "io", "unsupported format_version");
        auto h = std::make_shared<HopfAlgebraData>();
        h->cyc_order = field(j, "cyc_order").get<int>();
        h->dim = field(j, "dim").get<int>();
        int n = h->dim;
        if (n < 1) throw Error("ParseError", "io", "dim must be positive");
        h->labels = field(j, "labels").get<std::vector<std::string>>();
        if (static_cast<int>(h->labels.size()) != n) throw Error("ParseError", "io", "labels length");
        auto idx = [n](const Json& e) {
            int v = e.get<int>();
            if (v < 0 || v >= n) throw Error("ParseError", "io", "index out of range");
            return v;
        };
        h->mult.assign(static_cast<size_t>(n) * n, {});
        for (const auto& e : field(j, "mult")) {
            if (!e.is_array() || e.size() != 4) throw Error("ParseError", "io", "mult entry [i, j, k, coeff] expected");
            h->mult[static_cast<size_t>(idx(e[0])) * n + idx(e[1])].push_back({idx(e[2]), cyc_from_json(e[3])});
        }
        h->comult.assign(n, {});
        for (const auto& e : field(j, "comult")) {
            if (!e.is_array() || e.size() != 4) throw Error("ParseError", "io", "comult entry [i, j, k, coeff] expected");
            h->comult[idx(e[0])].push_back({idx(e[1]), idx(e[2]), cyc_from_json(e[3])});
        }
        h->unit = vec_from_json(field(j, "unit"), n);
        h->counit = vec_from_json(field(j, "counit"), n);
        h->antipode = mat_from_json(field(j, "antipode"), n);
        h->star = mat_from_json(field(j, "star"), n);
        return h;
    } catch (const Json::exception& e) {
        throw Error("ParseError", "io", e.what());
    }
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order;
    j["table"] = g.table;
    j["labels"] = g.labels;
    return j;
}

Json cocycle_to_json(const Cocycle& c) {
    Json j;
    j["table"] = mat_to_json(c.table);
    j["inverse_table"] = mat_to_json(c.inverse_table);
    return j;
}

Json coideal_to_json(const CoidealSubalgebra& c) {
    Json j;
    j["dim"] = c.dim();
    Json b = Json::array();
    for (const auto& v : c.basis()) b.push_back(vec_to_json(v));
    j["basis"] = b;
    return j;
}

std::string dump_qgw1(const Json& doc) { return doc.dump(1) + "\n"; }

Json parse_qgw1(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error("ParseError", "io", e.what());
    }
}

} // namespace qgw
