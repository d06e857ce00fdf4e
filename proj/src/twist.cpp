#include "qgw/twist.hpp"

#include <map>

#include "qgw/error.hpp"

namespace qgw {

namespace {

using Terms = std::vector<std::pair<int, CycNum>>;

struct Entry {
    int i, j;
    CycNum c;
};

std::vector<Entry> nonzeros(const Mat& m) {
    std::vector<Entry> out;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out.push_back({i, j, m(i, j)});
    return out;
}

// by_first[i][p]: terms (k, c) of Δb_i = Σ c b_p ⊗ b_k
std::vector<std::vector<Terms>> index_first_leg(const HopfAlgebraData& h) {
    std::vector<std::vector<Terms>> out(h.dim, std::vector<Terms>(h.dim));
    for (int i = 0; i < h.dim; ++i)
        for (const auto& t : h.comult[i]) out[i][t.j].emplace_back(t.k, t.c);
    return out;
}

// Δ² b_i grouped by (first, third) leg.
using Delta2 = std::map<std::pair<int, int>, Terms>;

std::vector<Delta2> double_coproduct(const HopfAlgebraData& h) {
    std::vector<Delta2> out(h.dim);
    for (int i = 0; i < h.dim; ++i) {
        std::map<std::tuple<int, int, int>, CycNum> acc;
        for (const auto& t : h.comult[i])
            for (const auto& u : h.comult[t.j]) acc[{u.j, u.k, t.k}].add_mul(t.c, u.c);
        for (const auto& [key, c] : acc) {
            if (c.is_zero()) continue;
            auto [p, q, r] = key;
            out[i][{p, r}].emplace_back(q, c);
        }
    }
    return out;
}

Mat conj_entries(const Mat& m) {
    Mat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
    return r;
}

// X_ab = Σ λ(a1,b1) a2 b2
std::vector<Vec> half_twisted_products(const HopfAlgebraData& h, const Mat& table) {
    int n = h.dim;
    auto first = index_first_leg(h);
    auto nz = nonzeros(table);
    std::vector<Vec> x(static_cast<size_t>(n) * n, Vec(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec& out = x[static_cast<size_t>(a) * n + b];
            for (const auto& e : nz)
                for (const auto& [a2, ca] : first[a][e.i])
                    for (const auto& [b2, cb] : first[b][e.j]) {
                        CycNum s = e.c * ca * cb;
                        for (const auto& t : h.mult_of(a2, b2)) out[t.k].add_mul(s, t.c);
                    }
        }
    return x;
}

bool convolution_is_counit(const HopfAlgebraData& h, const Mat& l, const Mat& r) {
    int n = h.dim;
    auto first = index_first_leg(h);
    auto nz = nonzeros(l);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CycNum s;
            for (const auto& e : nz)
                for (const auto& [a2, ca] : first[a][e.i])
                    for (const auto& [b2, cb] : first[b][e.j])
                        if (!r(a2, b2).is_zero()) s.add_mul(e.c * ca * cb, r(a2, b2));
            if (s != h.counit[a] * h.counit[b]) return false;
        }
    return true;
}

bool antipode_holds(const HopfAlgebraData& h, const Mat& s) {
    int n = h.dim;
    for (int i = 0; i < n; ++i) {
        Vec l(n), r(n);
        for (const auto& t : h.comult[i]) {
            axpy(l, t.c, h.product(s.col(t.j), h.basis(t.k)));
            axpy(r, t.c, h.product(h.basis(t.j), s.col(t.k)));
        }
        Vec e = scale(h.unit, h.counit[i]);
        if (l != e || r != e) return false;
    }
    return true;
}

} // namespace

Cocycle trivial_cocycle(const HopfPtr& h) {
    int n = h->dim;
    Mat t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = h->counit[i] * h->counit[j];
    return Cocycle{h, t, t};
}

Cocycle klein_cocycle(bool nontrivial, int cyc_order) {
    auto h = group_algebra(make_klein(), cyc_order);
    if (!nontrivial) return trivial_cocycle(h);
    Mat t(4, 4);
    for (int g = 0; g < 4; ++g)
        for (int k = 0; k < 4; ++k) {
            int b = g >> 1, c = k & 1;
            t(g, k) = CycNum((b & c) ? -1 : 1);
        }
    return Cocycle{h, t, t};
}

AxiomReport verify_cocycle(const Cocycle& c) {
    const auto& h = *c.parent;
    int n = h.dim;
    AxiomReport rep;
    if (c.table.rows() != n || c.table.cols() != n || c.inverse_table.rows() != n || c.inverse_table.cols() != n)
        throw Error("SchemaError", "twist", "cocycle table shape");

    bool inv = convolution_is_counit(h, c.table, c.inverse_table) &&
               convolution_is_counit(h, c.inverse_table, c.table);
    rep.items.push_back({"convolution_inverse", inv, inv ? "" : "λ * λ^{-1} != ε⊗ε"});

    AxiomResult norm{"normalization", true, {}};
    for (const Mat* m : {&c.table, &c.inverse_table})
        for (int j = 0; j < n && norm.pass; ++j) {
            CycNum l, r;
            for (int i = 0; i < n; ++i) {
                if (h.unit[i].is_zero()) continue;
                l.add_mul(h.unit[i], (*m)(i, j));
                r.add_mul(h.unit[i], (*m)(j, i));
            }
            if (l != h.counit[j] || r != h.counit[j]) norm = {"normalization", false, std::to_string(j)};
        }
    rep.items.push_back(norm);

    AxiomResult ident{"cocycle_identity", true, {}};
    auto x = half_twisted_products(h, c.table);
    auto nz_rows = [&](const Vec& v) {
        std::vector<int> out;
        for (int k = 0; k < n; ++k)
            if (!v[k].is_zero()) out.push_back(k);
        return out;
    };
    // left[a,b][c] = Σ_k X_ab[k] λ(k,c);  right[b,c][a] = Σ_k λ(a,k) X_bc[k]
    std::vector<Vec> left(static_cast<size_t>(n) * n), right(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Vec& v = x[static_cast<size_t>(a) * n + b];
            Vec l(n), r(n);
            for (int k : nz_rows(v))
                for (int m = 0; m < n; ++m) {
                    if (!c.table(k, m).is_zero()) l[m].add_mul(v[k], c.table(k, m));
                    if (!c.table(m, k).is_zero()) r[m].add_mul(c.table(m, k), v[k]);
                }
            left[static_cast<size_t>(a) * n + b] = std::move(l);
            right[static_cast<size_t>(a) * n + b] = std::move(r);
        }
    for (int a = 0; a < n && ident.pass; ++a)
        for (int b = 0; b < n && ident.pass; ++b)
            for (int d = 0; d < n; ++d)
                if (left[static_cast<size_t>(a) * n + b][d] != right[static_cast<size_t>(b) * n + d][a]) {
                    ident = {"cocycle_identity", false,
                             "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + ")"};
                    break;
                }
    rep.items.push_back(ident);
    return rep;
}

std::optional<std::pair<int, int>> asymmetry_witness(const Cocycle& c) {
    for (int i = 0; i < c.table.rows(); ++i)
        for (int j = i + 1; j < c.table.cols(); ++j)
            if (c.table(i, j) != c.table(j, i)) return std::make_pair(i, j);
    return std::nullopt;
}

Cocycle pullback(const Cocycle& l, const HopfQuotient& q, bool reverify) {
    auto cert = verify_quotient(q);
    if (!cert.ok()) {
        std::string w;
        for (const auto& it : cert.items)
            if (!it.pass) w += it.name + " ";
        throw Error("InvalidQuotient", "twist", w);
    }
    if (q.target->dim != l.parent->dim) throw Error("InvalidQuotient", "twist", "cocycle lives on another algebra");
    Mat pt = q.map.transpose();
    Cocycle out{q.source, pt * l.table * q.map, pt * l.inverse_table * q.map};
    if (reverify) {
        auto r = verify_cocycle(out);
        if (!r.ok()) throw Error("InvalidQuotient", "twist", "pulled-back cocycle fails verification");
    }
    return out;
}

Cocycle inverse_cocycle(const Cocycle& c, HopfPtr twisted_parent) {
    return Cocycle{std::move(twisted_parent), c.inverse_table, c.table};
}

HopfPtr twist(const HopfPtr& hp, const Cocycle& c, TwistReport* report) {
    const auto& h = *hp;
    int n = h.dim;
    auto d2 = double_coproduct(h);
    auto lam = nonzeros(c.table);
    auto lin = nonzeros(c.inverse_table);
    auto out = std::make_shared<HopfAlgebraData>(h);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v(n);
            for (const auto& e : lam)
                for (const auto& f : lin) {
                    auto a = d2[i].find({e.i, f.i});
                    if (a == d2[i].end()) continue;
                    auto b = d2[j].find({e.j, f.j});
                    if (b == d2[j].end()) continue;
                    CycNum s = e.c * f.c;
                    for (const auto& [q1, c1] : a->second)
                        for (const auto& [q2, c2] : b->second) {
                            const auto& terms = h.mult_of(q1, q2);
                            if (terms.empty()) continue;
                            CycNum w = s * c1 * c2;
                            for (const auto& t : terms) v[t.k].add_mul(w, t.c);
                        }
                }
            out->set_product(i, j, v);
        }

    TwistReport rep;
    std::optional<Mat> s;
    if (n <= 16) {
        s = solve_antipode(*out);
        rep.antipode_solved = true;
    } else {
        // S^λ(a) = u(a1) S(a2) v(a3), u(x) = λ(x1, S x2), v(x) = λ^{-1}(S x1, x2)
        Vec u(n), w(n);
        for (int i = 0; i < n; ++i)
            for (const auto& t : h.comult[i])
                for (int m = 0; m < n; ++m) {
                    if (!h.antipode(m, t.k).is_zero() && !c.table(t.j, m).is_zero())
                        u[i].add_mul(t.c * h.antipode(m, t.k), c.table(t.j, m));
                    if (!h.antipode(m, t.j).is_zero() && !c.inverse_table(m, t.k).is_zero())
                        w[i].add_mul(t.c * h.antipode(m, t.j), c.inverse_table(m, t.k));
                }
        Mat sm(n, n);
        for (int i = 0; i < n; ++i)
            for (const auto& [pr, terms] : d2[i]) {
                CycNum uv = u[pr.first] * w[pr.second];
                if (uv.is_zero()) continue;
                for (const auto& [q, cq] : terms)
                    for (int m = 0; m < n; ++m)
                        if (!h.antipode(m, q).is_zero()) sm(m, i).add_mul(uv * cq, h.antipode(m, q));
            }
        s = sm;
    }
    if (!s || !antipode_holds(*out, *s)) throw Error("TwistFailure", "twist", "no antipode for the twisted product");
    out->antipode = *s;

    auto st = verify_star(*out);
    rep.inherited_star_ok = st.pass;
    rep.inherited_star_witness = st.witness;
    if (!st.pass) out->star = h.star * conj_entries(h.antipode * out->antipode);
    if (report) *report = rep;
    return out;
}

std::array<std::array<CycNum, 2>, 2> dihedral_matrix(int K, int a, int b) {
    int N = lcm4(K);
    CycNum z = CycNum::zeta(N, static_cast<long>(N / K) * a);
    CycNum zi = CycNum::zeta(N, -static_cast<long>(N / K) * a);
    CycNum i = CycNum::zeta(N, N / 4);
    CycNum half(1, 2);
    CycNum c = (z + zi) * half;
    CycNum s = (z - zi) * half * (-i);  // (z - z^{-1}) / 2i
    if (b & 1) return {{{c, s}, {s, -c}}};
    return {{{c, -s}, {s, c}}};
}

GeneratorSet dihedral_generators(const HopfPtr& fdk, int K) {
    GeneratorSet g;
    g.parent = fdk;
    for (auto& row : g.y)
        for (auto& v : row) v = Vec(2 * K);
    for (int x = 0; x < 2 * K; ++x) {
        auto m = dihedral_matrix(K, x % K, x / K);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) g.y[j][k][x] = m[j][k];
    }
    return g;
}

DihedralMinusOne dihedral_minus_one(int K) {
    if (K < 2 || K % 2 != 0) throw Error("NoKleinSubgroup", "twist", "K=" + std::to_string(K));
    DihedralMinusOne d;
    auto q = restriction_quotient(K);
    d.classical = q.source;
    d.cocycle = pullback(klein_cocycle(true, lcm4(K)), q);
    d.algebra = twist(d.classical, d.cocycle, &d.report);
    d.y = dihedral_generators(d.algebra, K);
    return d;
}

AxiomReport check_o2_relations(const GeneratorSet& g) {
    const auto& h = *g.parent;
    const auto& y = g.y;
    auto prod = [&](const Vec& a, const Vec& b) { return h.product(a, b); };
    AxiomReport rep;

    AxiomResult anti{"anticommutation", true, {}};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                if (k == l || !anti.pass) continue;
                std::string w = std::to_string(j + 1) + std::to_string(k + 1) + std::to_string(l + 1);
                if (add(prod(y[j][k], y[j][l]), prod(y[j][l], y[j][k])) != zero_vec(h.dim))
                    anti = {"anticommutation", false, "row " + w};
                else if (add(prod(y[k][j], y[l][j]), prod(y[l][j], y[k][j])) != zero_vec(h.dim))
                    anti = {"anticommutation", false, "column " + w};
            }
    rep.items.push_back(anti);

    AxiomResult comm{"commutation", true, {}};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            int l = 1 - j, m = 1 - k;
            if (prod(y[j][k], y[l][m]) != prod(y[l][m], y[j][k]))
                comm = {"commutation", false, std::to_string(j + 1) + std::to_string(k + 1)};
        }
    rep.items.push_back(comm);

    AxiomResult orth{"orthogonality", true, {}};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            Vec want = j == k ? h.unit : zero_vec(h.dim);
            Vec cols = add(prod(y[0][j], y[0][k]), prod(y[1][j], y[1][k]));
            Vec rows = add(prod(y[j][0], y[k][0]), prod(y[j][1], y[k][1]));
            if (cols != want) orth = {"orthogonality", false, "columns " + std::to_string(j + 1) + std::to_string(k + 1)};
            else if (rows != want) orth = {"orthogonality", false, "rows " + std::to_string(j + 1) + std::to_string(k + 1)};
        }
    rep.items.push_back(orth);

    AxiomResult co{"comultiplication", true, {}}, cu{"counit", true, {}}, an{"antipode", true, {}},
        sa{"self_adjoint", true, {}};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            std::string w = std::to_string(j + 1) + std::to_string(k + 1);
            Mat want(h.dim, h.dim);
            for (int i = 0; i < 2; ++i)
                for (int p = 0; p < h.dim; ++p) {
                    if (y[j][i][p].is_zero()) continue;
                    for (int q = 0; q < h.dim; ++q)
                        if (!y[i][k][q].is_zero()) want(p, q).add_mul(y[j][i][p], y[i][k][q]);
                }
            if (h.coproduct(y[j][k]) != want) co = {"comultiplication", false, w};
            if (h.counit_of(y[j][k]) != CycNum(j == k ? 1 : 0)) cu = {"counit", false, w};
            if (h.apply_antipode(y[j][k]) != y[k][j]) an = {"antipode", false, w};
            if (h.apply_star(y[j][k]) != y[j][k]) sa = {"self_adjoint", false, w};
        }
    rep.items.push_back(co);
    rep.items.push_back(cu);
    rep.items.push_back(an);
    rep.items.push_back(sa);
    return rep;
}

} // namespace qgw
