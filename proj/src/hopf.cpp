#include "qgw/hopf.hpp"

#include <map>
#include <sstream>

#include "qgw/error.hpp"

namespace qgw {

namespace {

std::string triple(int i, int j, int k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

using Tensor3 = std::map<std::tuple<int, int, int>, CycNum>;

void prune(Tensor3& t) {
    for (auto it = t.begin(); it != t.end();) {
        if (it->second.is_zero()) it = t.erase(it);
        else ++it;
    }
}

bool same_vec(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

Vec HopfAlgebraData::product(const Vec& a, const Vec& b) const {
    Vec out(dim);
    std::vector<int> na, nb;
    for (int i = 0; i < dim; ++i) {
        if (!a[i].is_zero()) na.push_back(i);
        if (!b[i].is_zero()) nb.push_back(i);
    }
    for (int i : na)
        for (int j : nb) {
            const auto& terms = mult_of(i, j);
            if (terms.empty()) continue;
            CycNum ab = a[i] * b[j];
            for (const auto& t : terms) out[t.k].add_mul(ab, t.c);
        }
    return out;
}

Vec HopfAlgebraData::basis_product(int i, int j) const {
    Vec out(dim);
    for (const auto& t : mult_of(i, j)) out[t.k] += t.c;
    return out;
}

void HopfAlgebraData::set_product(int i, int j, const Vec& v) {
    auto& terms = mult[static_cast<size_t>(i) * dim + j];
    terms.clear();
    for (int k = 0; k < dim; ++k)
        if (!v[k].is_zero()) terms.push_back({k, v[k]});
}

Mat HopfAlgebraData::coproduct(const Vec& a) const {
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& t : comult[i]) m(t.j, t.k).add_mul(a[i], t.c);
    }
    return m;
}

Vec HopfAlgebraData::apply_star(const Vec& a) const { return star * conj(a); }

CycNum HopfAlgebraData::counit_of(const Vec& a) const {
    CycNum s;
    for (int i = 0; i < dim; ++i)
        if (!a[i].is_zero()) s.add_mul(a[i], counit[i]);
    return s;
}

bool HopfAlgebraData::is_commutative() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (!same_vec(basis_product(i, j), basis_product(j, i))) return false;
    return true;
}

bool HopfAlgebraData::is_cocommutative() const {
    for (int i = 0; i < dim; ++i) {
        Mat d = coproduct(basis(i));
        if (d != d.transpose()) return false;
    }
    return true;
}

bool AxiomReport::ok() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
    for (const auto& it : items)
        if (it.name == name) return &it;
    return nullptr;
}

Mat tensor_product_elems(const HopfAlgebraData& h, const Mat& x, const Mat& y) {
    int n = h.dim;
    std::vector<std::tuple<int, int, CycNum>> xs, ys;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!x(a, b).is_zero()) xs.emplace_back(a, b, x(a, b));
            if (!y(a, b).is_zero()) ys.emplace_back(a, b, y(a, b));
        }
    Mat out(n, n);
    for (const auto& [a, b, cx] : xs)
        for (const auto& [c, d, cy] : ys) {
            const auto& left = h.mult_of(a, c);
            const auto& right = h.mult_of(b, d);
            if (left.empty() || right.empty()) continue;
            CycNum s = cx * cy;
            for (const auto& l : left) {
                CycNum sl = s * l.c;
                for (const auto& r : right) out(l.k, r.k).add_mul(sl, r.c);
            }
        }
    return out;
}

AxiomResult verify_star(const HopfAlgebraData& h) {
    int n = h.dim;
    AxiomResult r{"star", true, {}};
    for (int i = 0; i < n && r.pass; ++i) {
        Vec x = h.basis(i);
        if (!same_vec(h.apply_star(h.apply_star(x)), x)) r = {"star", false, "involution fails at " + std::to_string(i)};
    }
    for (int i = 0; i < n && r.pass; ++i)
        for (int j = 0; j < n && r.pass; ++j) {
            Vec lhs = h.apply_star(h.basis_product(i, j));
            Vec rhs = h.product(h.apply_star(h.basis(j)), h.apply_star(h.basis(i)));
            if (!same_vec(lhs, rhs)) r = {"star", false, "anti-multiplicativity fails at " + triple(i, j, -1)};
        }
    for (int i = 0; i < n && r.pass; ++i) {
        Vec s = h.apply_star(h.basis(i));
        Mat lhs = h.coproduct(s);
        Mat rhs(n, n);
        for (const auto& t : h.comult[i]) {
            Vec a = h.apply_star(h.basis(t.j)), b = h.apply_star(h.basis(t.k));
            CycNum c = t.c.conj();
            for (int p = 0; p < n; ++p) {
                if (a[p].is_zero()) continue;
                CycNum ca = c * a[p];
                for (int q = 0; q < n; ++q)
                    if (!b[q].is_zero()) rhs(p, q).add_mul(ca, b[q]);
            }
        }
        if (lhs != rhs) r = {"star", false, "comultiplication compatibility fails at " + std::to_string(i)};
    }
    return r;
}

AxiomReport verify_hopf(const HopfAlgebraData& h) {
    AxiomReport rep;
    int n = h.dim;
    bool shapes = static_cast<int>(h.mult.size()) == n * n && static_cast<int>(h.comult.size()) == n &&
                  static_cast<int>(h.unit.size()) == n && static_cast<int>(h.counit.size()) == n &&
                  h.antipode.rows() == n && h.antipode.cols() == n && h.star.rows() == n && h.star.cols() == n &&
                  static_cast<int>(h.labels.size()) == n;
    if (!shapes) throw Error("SchemaError", "hopf-core", "tensor shapes do not match dim " + std::to_string(n));
    for (const auto& terms : h.mult)
        for (const auto& t : terms)
            if (t.k < 0 || t.k >= n) throw Error("SchemaError", "hopf-core", "mult index out of range");
    for (const auto& terms : h.comult)
        for (const auto& t : terms)
            if (t.j < 0 || t.j >= n || t.k < 0 || t.k >= n)
                throw Error("SchemaError", "hopf-core", "comult index out of range");

    AxiomResult assoc{"associativity", true, {}};
    for (int i = 0; i < n && assoc.pass; ++i)
        for (int j = 0; j < n && assoc.pass; ++j) {
            Vec ij = h.basis_product(i, j);
            for (int k = 0; k < n; ++k) {
                Vec lhs = h.product(ij, h.basis(k));
                Vec rhs = h.product(h.basis(i), h.basis_product(j, k));
                if (!same_vec(lhs, rhs)) {
                    assoc = {"associativity", false, triple(i, j, k)};
                    break;
                }
            }
        }
    rep.items.push_back(assoc);

    AxiomResult unit{"unit", true, {}};
    for (int i = 0; i < n && unit.pass; ++i) {
        Vec x = h.basis(i);
        if (!same_vec(h.product(h.unit, x), x) || !same_vec(h.product(x, h.unit), x))
            unit = {"unit", false, std::to_string(i)};
    }
    rep.items.push_back(unit);

    AxiomResult coassoc{"coassociativity", true, {}};
    for (int i = 0; i < n && coassoc.pass; ++i) {
        Tensor3 l, r;
        for (const auto& t : h.comult[i]) {
            for (const auto& u : h.comult[t.j]) l[{u.j, u.k, t.k}].add_mul(t.c, u.c);
            for (const auto& u : h.comult[t.k]) r[{t.j, u.j, u.k}].add_mul(t.c, u.c);
        }
        prune(l);
        prune(r);
        if (l != r) coassoc = {"coassociativity", false, std::to_string(i)};
    }
    rep.items.push_back(coassoc);

    AxiomResult counit{"counit", true, {}};
    for (int i = 0; i < n && counit.pass; ++i) {
        Vec a(n), b(n);
        for (const auto& t : h.comult[i]) {
            a[t.k].add_mul(t.c, h.counit[t.j]);
            b[t.j].add_mul(t.c, h.counit[t.k]);
        }
        if (!same_vec(a, h.basis(i)) || !same_vec(b, h.basis(i))) counit = {"counit", false, std::to_string(i)};
    }
    rep.items.push_back(counit);

    AxiomResult dmul{"comult_multiplicative", true, {}};
    {
        std::vector<Mat> d(n);
        for (int i = 0; i < n; ++i) d[i] = h.coproduct(h.basis(i));
        Mat d1 = h.coproduct(h.unit);
        Mat one(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) one(a, b) = h.unit[a] * h.unit[b];
        if (d1 != one) dmul = {"comult_multiplicative", false, "Δ(1) != 1⊗1"};
        for (int i = 0; i < n && dmul.pass; ++i)
            for (int j = 0; j < n && dmul.pass; ++j)
                if (h.coproduct(h.basis_product(i, j)) != tensor_product_elems(h, d[i], d[j]))
                    dmul = {"comult_multiplicative", false, triple(i, j, -1)};
    }
    rep.items.push_back(dmul);

    AxiomResult emul{"counit_multiplicative", true, {}};
    if (h.counit_of(h.unit) != CycNum(1)) emul = {"counit_multiplicative", false, "ε(1) != 1"};
    for (int i = 0; i < n && emul.pass; ++i)
        for (int j = 0; j < n && emul.pass; ++j)
            if (h.counit_of(h.basis_product(i, j)) != h.counit[i] * h.counit[j])
                emul = {"counit_multiplicative", false, triple(i, j, -1)};
    rep.items.push_back(emul);

    AxiomResult anti{"antipode", true, {}};
    for (int i = 0; i < n && anti.pass; ++i) {
        Vec l(n), r(n);
        for (const auto& t : h.comult[i]) {
            axpy(l, t.c, h.product(h.antipode.col(t.j), h.basis(t.k)));
            axpy(r, t.c, h.product(h.basis(t.j), h.antipode.col(t.k)));
        }
        Vec e = scale(h.unit, h.counit[i]);
        if (!same_vec(l, e) || !same_vec(r, e)) anti = {"antipode", false, std::to_string(i)};
    }
    rep.items.push_back(anti);

    // x⊗y -> x1 ⊗ x2 y and x⊗y -> x1 y ⊗ x2 are bijective: their inverses
    // a⊗b -> a1 ⊗ S(a2) b and a⊗b -> b2 ⊗ S^{-1}(b1) a are checked on the basis.
    AxiomResult canc{"cancellation", true, {}};
    auto sinv = inverse(h.antipode);
    if (!sinv) canc = {"cancellation", false, "antipode not invertible"};
    std::vector<Vec> s_left, sinv_left;
    if (canc.pass) {
        s_left.resize(static_cast<size_t>(n) * n);
        sinv_left.resize(static_cast<size_t>(n) * n);
        for (int k = 0; k < n; ++k) {
            Vec sk = h.antipode.col(k), tk = sinv->col(k);
            for (int q = 0; q < n; ++q) {
                s_left[k * n + q] = h.product(sk, h.basis(q));
                sinv_left[k * n + q] = h.product(tk, h.basis(q));
            }
        }
    }
    for (int i = 0; i < n && canc.pass; ++i)
        for (int j = 0; j < n && canc.pass; ++j) {
            Mat t(n, n);
            for (const auto& c : h.comult[i])
                for (const auto& p : h.mult_of(c.k, j)) t(c.j, p.k).add_mul(c.c, p.c);
            Mat back(n, n);
            for (int a = 0; a < n; ++a)
                for (int q = 0; q < n; ++q) {
                    if (t(a, q).is_zero()) continue;
                    for (const auto& c : h.comult[a]) {
                        const Vec& v = s_left[c.k * n + q];
                        CycNum s = t(a, q) * c.c;
                        for (int p = 0; p < n; ++p)
                            if (!v[p].is_zero()) back(c.j, p).add_mul(s, v[p]);
                    }
                }
            Mat want(n, n);
            want(i, j) = CycNum(1);
            if (back != want) {
                canc = {"cancellation", false, "left map at " + triple(i, j, -1)};
                break;
            }
            Mat t2(n, n);
            for (const auto& c : h.comult[i])
                for (const auto& p : h.mult_of(c.j, j)) t2(p.k, c.k).add_mul(c.c, p.c);
            Mat back2(n, n);
            for (int p = 0; p < n; ++p)
                for (int b = 0; b < n; ++b) {
                    if (t2(p, b).is_zero()) continue;
                    for (const auto& c : h.comult[b]) {
                        const Vec& v = sinv_left[c.j * n + p];
                        CycNum s = t2(p, b) * c.c;
                        for (int q = 0; q < n; ++q)
                            if (!v[q].is_zero()) back2(c.k, q).add_mul(s, v[q]);
                    }
                }
            if (back2 != want) canc = {"cancellation", false, "right map at " + triple(i, j, -1)};
        }
    rep.items.push_back(canc);

    rep.items.push_back(verify_star(h));
    return rep;
}

CycNum Functional::operator()(const Vec& x) const {
    CycNum s;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) s.add_mul(x[i], coeffs[i]);
    return s;
}

Functional convolve(const Functional& a, const Functional& b) {
    if (a.parent != b.parent) throw Error("AlgebraMismatch", "hopf-core", "convolution of functionals on different algebras");
    const auto& h = *a.parent;
    Functional out{a.parent, Vec(h.dim)};
    for (int i = 0; i < h.dim; ++i)
        for (const auto& t : h.comult[i]) {
            if (a.coeffs[t.j].is_zero() || b.coeffs[t.k].is_zero()) continue;
            out.coeffs[i].add_mul(t.c, a.coeffs[t.j] * b.coeffs[t.k]);
        }
    return out;
}

Functional counit_functional(const HopfPtr& h) { return Functional{h, h->counit}; }

Mat gram_matrix(const HopfAlgebraData& h, const Vec& phi) {
    int n = h.dim;
    Mat g(n, n);
    std::vector<Vec> stars(n);
    for (int i = 0; i < n; ++i) stars[i] = h.apply_star(h.basis(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec p = h.product(stars[i], h.basis(j));
            CycNum s;
            for (int k = 0; k < n; ++k)
                if (!p[k].is_zero()) s.add_mul(p[k], phi[k]);
            g(i, j) = s;
        }
    return g;
}

Real positivity_threshold(unsigned bits) {
    PrecisionGuard g(bits);
    return pow(Real(2), -64);
}

HaarResult haar_state(const HopfPtr& hp, unsigned bits) {
    const auto& h = *hp;
    int n = h.dim;
    // (h⊗id)Δ(b_i) = h(b_i) 1 and (id⊗h)Δ(b_i) = h(b_i) 1, unknowns h_j
    Mat a(2 * n * n, n);
    for (int i = 0; i < n; ++i) {
        for (const auto& t : h.comult[i]) {
            a(i * n + t.k, t.j) += t.c;
            a(n * n + i * n + t.j, t.k) += t.c;
        }
        for (int m = 0; m < n; ++m) {
            if (h.unit[m].is_zero()) continue;
            a(i * n + m, i) -= h.unit[m];
            a(n * n + i * n + m, i) -= h.unit[m];
        }
    }
    auto ns = nullspace(a);
    if (ns.size() != 1) throw Error("NotCQG", "hopf-core", "invariance space has dimension " + std::to_string(ns.size()));
    CycNum norm;
    for (int j = 0; j < n; ++j) norm.add_mul(ns[0][j], h.unit[j]);
    if (norm.is_zero()) throw Error("NotCQG", "hopf-core", "invariant functional vanishes on 1");
    HaarResult r;
    r.h = Functional{hp, scale(ns[0], norm.inv())};
    Mat g = gram_matrix(h, r.h.coeffs);
    r.hermitian = is_hermitian(g);
    if (r.hermitian) {
        r.min_eigenvalue = min_eigenvalue_hermitian(g, bits);
        Real thr = positivity_threshold(bits);
        r.positive = r.min_eigenvalue > -thr;
        r.faithful = r.min_eigenvalue > thr;
    }
    return r;
}

bool is_kac(const HopfPtr& hp) {
    auto hr = haar_state(hp, 64);
    const auto& h = *hp;
    for (int i = 0; i < h.dim; ++i)
        for (int j = i + 1; j < h.dim; ++j)
            if (hr.h(h.basis_product(i, j)) != hr.h(h.basis_product(j, i))) return false;
    return true;
}

CqgCertificate check_cqg(const HopfPtr& hp, unsigned bits) {
    CqgCertificate c;
    c.hopf = verify_hopf(*hp);
    for (const auto& it : c.hopf.items)
        if (!it.pass) c.failures.push_back(it.name + ": " + it.witness);
    const auto* st = c.hopf.find("star");
    c.star_compatible = st && st->pass;
    try {
        auto hr = haar_state(hp, bits);
        c.haar_exists = true;
        c.haar_positive = hr.hermitian && hr.positive;
        c.haar_faithful = hr.hermitian && hr.faithful;
        c.min_eigenvalue = hr.min_eigenvalue;
        if (!hr.hermitian) c.failures.push_back("haar: Gram matrix not conjugate-symmetric");
        else if (!hr.positive) c.failures.push_back("haar: not positive");
        else if (!hr.faithful) c.failures.push_back("haar: not faithful");
        c.kac = is_kac(hp);
    } catch (const Error& e) {
        c.failures.push_back("haar: " + e.code() + " " + e.witness());
    }
    return c;
}

std::optional<Mat> solve_antipode(const HopfAlgebraData& h) {
    int n = h.dim;
    // unknown S_{m j} at index j*n+m; Σ c S(b_j) b_k = ε(b_i) 1
    Mat a(n * n, n * n);
    Vec rhs(n * n);
    for (int i = 0; i < n; ++i) {
        for (const auto& t : h.comult[i])
            for (int m = 0; m < n; ++m)
                for (const auto& p : h.mult_of(m, t.k)) a(i * n + p.k, t.j * n + m).add_mul(t.c, p.c);
        for (int p = 0; p < n; ++p) rhs[i * n + p] = h.counit[i] * h.unit[p];
    }
    if (rank(a) != n * n) return std::nullopt;
    auto x = solve(a, rhs);
    if (!x) return std::nullopt;
    Mat s(n, n);
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) s(m, j) = (*x)[j * n + m];
    return s;
}

} // namespace qgw
