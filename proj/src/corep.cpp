#include "qgw/corep.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qgw/error.hpp"

namespace qgw {

namespace {

Mat scalar_mat(const CycNum& c) {
    Mat m(1, 1);
    m(0, 0) = c;
    return m;
}

Mat swap2() {
    Mat m(2, 2);
    m(0, 1) = CycNum(1);
    m(1, 0) = CycNum(1);
    return m;
}

Mat diag2(const CycNum& a, const CycNum& b) {
    Mat m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Vec mult_apply(const std::vector<std::vector<MultTerm>>& mult, int dim, const Vec& a, const Vec& b) {
    Vec out(dim);
    std::vector<int> na, nb;
    for (int i = 0; i < dim; ++i) {
        if (!a[i].is_zero()) na.push_back(i);
        if (!b[i].is_zero()) nb.push_back(i);
    }
    for (int i : na)
        for (int j : nb) {
            const auto& terms = mult[static_cast<size_t>(i) * dim + j];
            if (terms.empty()) continue;
            CycNum ab = a[i] * b[j];
            for (const auto& t : terms) out[t.k].add_mul(ab, t.c);
        }
    return out;
}

bool check_assoc_unit(int dim, const std::vector<std::vector<MultTerm>>& mult, const Vec& unit, AxiomReport& rep) {
    auto prod = [&](const Vec& a, const Vec& b) { return mult_apply(mult, dim, a, b); };
    AxiomResult as{"associativity", true, {}};
    for (int i = 0; i < dim && as.pass; ++i)
        for (int j = 0; j < dim && as.pass; ++j) {
            Vec ij = prod(unit_vec(dim, i), unit_vec(dim, j));
            for (int k = 0; k < dim; ++k) {
                Vec jk = prod(unit_vec(dim, j), unit_vec(dim, k));
                if (prod(ij, unit_vec(dim, k)) != prod(unit_vec(dim, i), jk)) {
                    as = {"associativity", false,
                          "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")"};
                    break;
                }
            }
        }
    rep.items.push_back(as);
    AxiomResult un{"unit", true, {}};
    for (int i = 0; i < dim && un.pass; ++i) {
        Vec x = unit_vec(dim, i);
        if (prod(unit, x) != x || prod(x, unit) != x) un = {"unit", false, std::to_string(i)};
    }
    rep.items.push_back(un);
    return as.pass && un.pass;
}

// Nullity of the intertwiner system B(x) T = T A(x) over the given generators.
int intertwiner_nullity(const std::vector<int>& gens, const std::vector<Mat>& a, const std::vector<Mat>& b) {
    if (gens.empty()) return a[0].rows() * b[0].rows();
    int da = a[gens[0]].rows(), db = b[gens[0]].rows();
    int cols = da * db;
    Mat sys(static_cast<int>(gens.size()) * cols, cols);
    int row = 0;
    for (int x : gens) {
        const Mat& A = a[x];
        const Mat& B = b[x];
        for (int p = 0; p < db; ++p)
            for (int q = 0; q < da; ++q, ++row) {
                for (int r = 0; r < db; ++r)
                    if (!B(p, r).is_zero()) sys(row, r * da + q) += B(p, r);
                for (int r = 0; r < da; ++r)
                    if (!A(r, q).is_zero()) sys(row, p * da + r) -= A(r, q);
            }
    }
    return cols - rank(sys);
}

} // namespace

std::vector<GroupRep> group_irreps(const FiniteGroup& g) {
    std::vector<GroupRep> out;
    int n = g.order;
    switch (g.spec.kind) {
    case GroupKind::dihedral: {
        int K = g.spec.n;
        int N = lcm4(K);
        struct Ch {
            const char* name;
            int r, s;
        };
        std::vector<Ch> chars{{"triv", 1, 1}, {"sgn", 1, -1}};
        if (K % 2 == 0) {
            chars.push_back({"c-+", -1, 1});
            chars.push_back({"c--", -1, -1});
        }
        for (const auto& c : chars) {
            GroupRep r{c.name, 1, {}};
            for (int x = 0; x < n; ++x) {
                int a = x % K, b = x / K;
                int v = ((c.r == -1 && (a & 1)) ? -1 : 1) * ((c.s == -1 && b) ? -1 : 1);
                r.rho.push_back(scalar_mat(CycNum(v)));
            }
            out.push_back(std::move(r));
        }
        for (int l = 1; 2 * l < K; ++l) {
            GroupRep r{"V" + std::to_string(l), 2, {}};
            for (int x = 0; x < n; ++x) {
                int a = x % K, b = x / K;
                long p = static_cast<long>(N / K) * l * a;
                Mat d = diag2(CycNum::zeta(N, p), CycNum::zeta(N, -p));
                r.rho.push_back(b ? d * swap2() : d);
            }
            out.push_back(std::move(r));
        }
        break;
    }
    case GroupKind::cyclic: {
        int k = g.spec.n;
        int N = std::lcm(4, k);
        for (int m = 0; m < k; ++m) {
            GroupRep r{"chi" + std::to_string(m), 1, {}};
            for (int a = 0; a < k; ++a) r.rho.push_back(scalar_mat(CycNum::zeta(N, static_cast<long>(N / k) * m * a)));
            out.push_back(std::move(r));
        }
        break;
    }
    case GroupKind::klein:
        for (int c1 = 0; c1 < 2; ++c1)
            for (int c0 = 0; c0 < 2; ++c0) {
                GroupRep r{"(" + std::to_string(c0) + "," + std::to_string(c1) + ")", 1, {}};
                for (int v = 0; v < 4; ++v) r.rho.push_back(scalar_mat(CycNum(klein_character(c0, c1, v & 1, v >> 1))));
                out.push_back(std::move(r));
            }
        break;
    }
    return out;
}

bool is_representation(const FiniteGroup& g, const GroupRep& r) {
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (r.rho[x] * r.rho[y] != r.rho[g.mul(x, y)]) return false;
    return true;
}

AxiomReport verify_comodule(const Comodule& v) {
    const auto& h = *v.parent;
    AxiomReport rep;
    AxiomResult co{"comultiplication", true, {}}, cu{"counit", true, {}};
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j) {
            Mat want(h.dim, h.dim);
            for (int k = 0; k < v.dim; ++k)
                for (int p = 0; p < h.dim; ++p) {
                    if (v.u[i][k][p].is_zero()) continue;
                    for (int q = 0; q < h.dim; ++q)
                        if (!v.u[k][j][q].is_zero()) want(p, q).add_mul(v.u[i][k][p], v.u[k][j][q]);
                }
            std::string w = std::to_string(i) + "," + std::to_string(j);
            if (co.pass && h.coproduct(v.u[i][j]) != want) co = {"comultiplication", false, w};
            if (cu.pass && h.counit_of(v.u[i][j]) != CycNum(i == j ? 1 : 0)) cu = {"counit", false, w};
        }
    rep.items.push_back(co);
    rep.items.push_back(cu);
    if (v.unitary) {
        AxiomResult un{"unitary", true, {}};
        for (int i = 0; i < v.dim && un.pass; ++i)
            for (int j = 0; j < v.dim && un.pass; ++j) {
                Vec s(h.dim);
                for (int k = 0; k < v.dim; ++k) s = add(s, h.product(h.apply_star(v.u[k][i]), v.u[k][j]));
                if (s != (i == j ? h.unit : zero_vec(h.dim)))
                    un = {"unitary", false, std::to_string(i) + "," + std::to_string(j)};
            }
        rep.items.push_back(un);
    }
    return rep;
}

Comodule rep_to_comodule(const HopfPtr& fg, const GroupRep& r) {
    Comodule c;
    c.parent = fg;
    c.dim = r.dim;
    c.label = r.label;
    c.unitary = true;
    c.u.assign(r.dim, std::vector<Vec>(r.dim, Vec(fg->dim)));
    for (int x = 0; x < static_cast<int>(r.rho.size()); ++x)
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < r.dim; ++j) c.u[i][j][x] = r.rho[x](i, j);
    return c;
}

GroupRep comodule_to_rep(const Comodule& v, const FiniteGroup& g) {
    GroupRep r{v.label, v.dim, {}};
    for (int x = 0; x < g.order; ++x) {
        Mat m(v.dim, v.dim);
        for (int i = 0; i < v.dim; ++i)
            for (int j = 0; j < v.dim; ++j) m(i, j) = v.u[i][j][x];
        r.rho.push_back(std::move(m));
    }
    return r;
}

std::vector<Comodule> irreducibles(const FiniteGroup& g, GroupKind kind, const HopfPtr& fg) {
    if (kind != g.spec.kind) throw Error("BadKind", "corep", "group kind mismatch");
    HopfPtr h = fg ? fg : function_algebra(g, g.spec.kind == GroupKind::dihedral ? lcm4(g.spec.n) : std::lcm(4, g.spec.n));
    std::vector<Comodule> out;
    for (const auto& r : group_irreps(g)) out.push_back(rep_to_comodule(h, r));
    return out;
}

Comodule regular_comodule(const HopfPtr& h) {
    Comodule c;
    c.parent = h;
    c.dim = h->dim;
    c.label = "regular";
    c.u.assign(c.dim, std::vector<Vec>(c.dim, Vec(h->dim)));
    for (int b = 0; b < h->dim; ++b)
        for (const auto& t : h->comult[b]) c.u[t.j][b][t.k] += t.c;
    return c;
}

Comodule trivial_comodule(const HopfPtr& h) {
    Comodule c;
    c.parent = h;
    c.dim = 1;
    c.label = "trivial";
    c.unitary = true;
    c.u = {{h->unit}};
    return c;
}

Comodule tensor_comodule(const Comodule& a, const Comodule& b) {
    Comodule c;
    c.parent = a.parent;
    c.dim = a.dim * b.dim;
    c.label = a.label + "⊗" + b.label;
    c.u.assign(c.dim, std::vector<Vec>(c.dim));
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < b.dim; ++k)
            for (int j = 0; j < a.dim; ++j)
                for (int l = 0; l < b.dim; ++l)
                    c.u[i * b.dim + k][j * b.dim + l] = a.parent->product(a.u[i][j], b.u[k][l]);
    return c;
}

int hom_dim(const FiniteGroup& g, const std::vector<Mat>& a, const std::vector<Mat>& b) {
    std::vector<int> all(g.order);
    std::iota(all.begin(), all.end(), 0);
    return intertwiner_nullity(generators(g, all), a, b);
}

int hom_dim_on(const FiniteGroup& g, const Subgroup& h, const std::vector<Mat>& a, const std::vector<Mat>& b) {
    auto gens = generators(g, h);
    if (gens.empty()) {
        int da = a[h[0]].rows(), db = b[h[0]].rows();
        return da * db;
    }
    return intertwiner_nullity(gens, a, b);
}

std::vector<int> decompose_rep(const FiniteGroup& g, const std::vector<Mat>& rho) {
    std::vector<int> out;
    for (const auto& irr : group_irreps(g)) out.push_back(hom_dim(g, irr.rho, rho));
    return out;
}

std::vector<int> decompose(const Comodule& v, const FiniteGroup& g) { return decompose_rep(g, comodule_to_rep(v, g).rho); }

std::vector<int> decompose_by_characters(const FiniteGroup& g, const std::vector<Mat>& rho) {
    std::vector<int> out;
    for (const auto& irr : group_irreps(g)) {
        CycNum s;
        for (int x = 0; x < g.order; ++x) {
            CycNum chi, tr;
            for (int i = 0; i < irr.dim; ++i) chi += irr.rho[x](i, i);
            for (int i = 0; i < rho[x].rows(); ++i) tr += rho[x](i, i);
            s.add_mul(chi.conj(), tr);
        }
        s *= CycNum(1, g.order);
        if (!s.is_rational() || s.rational().get_den() != 1)
            throw Error("NotRepresentable", "corep", "character inner product " + s.str());
        out.push_back(static_cast<int>(s.rational().get_num().get_si()));
    }
    return out;
}

bool compute_multiplier(const FiniteGroup& g, ProjectiveRep& p) {
    p.mu.clear();
    for (int x : p.domain)
        for (int y : p.domain) {
            Mat lhs = p.pi.at(x) * p.pi.at(y);
            const Mat& q = p.pi.at(g.mul(x, y));
            CycNum c;
            bool found = false;
            for (int i = 0; i < p.dim && !found; ++i)
                for (int j = 0; j < p.dim && !found; ++j)
                    if (!q(i, j).is_zero()) {
                        c = lhs(i, j) / q(i, j);
                        found = true;
                    }
            if (!found) return false;
            for (int i = 0; i < p.dim; ++i)
                for (int j = 0; j < p.dim; ++j)
                    if (lhs(i, j) != c * q(i, j)) return false;
            p.mu[{x, y}] = c;
        }
    return true;
}

Vec ModuleAlgebra::product(const Vec& a, const Vec& b) const { return mult_apply(mult, dim, a, b); }

std::vector<Mat> ModuleAlgebra::action_list() const {
    std::vector<Mat> out(group.order);
    for (const auto& [x, m] : action) out[x] = m;
    return out;
}

AxiomReport verify_module_algebra(const ModuleAlgebra& a) {
    AxiomReport rep;
    check_assoc_unit(a.dim, a.mult, a.unit, rep);
    auto basis = [&](int i) { return unit_vec(a.dim, i); };
    AxiomResult st{"star", true, {}};
    for (int i = 0; i < a.dim && st.pass; ++i) {
        if (a.apply_star(a.apply_star(basis(i))) != basis(i)) st = {"star", false, "involution " + std::to_string(i)};
        for (int j = 0; j < a.dim && st.pass; ++j)
            if (a.apply_star(a.product(basis(i), basis(j))) != a.product(a.apply_star(basis(j)), a.apply_star(basis(i))))
                st = {"star", false, "anti-multiplicative " + std::to_string(i) + "," + std::to_string(j)};
    }
    rep.items.push_back(st);
    AxiomResult hom{"homomorphism", true, {}};
    for (int x : a.domain)
        for (int y : a.domain)
            if (hom.pass && a.action.at(x) * a.action.at(y) != a.action.at(a.group.mul(x, y)))
                hom = {"homomorphism", false, a.group.labels[x] + "," + a.group.labels[y]};
    rep.items.push_back(hom);
    AxiomResult aut{"automorphism", true, {}};
    for (int x : a.domain) {
        const Mat& m = a.action.at(x);
        if (!aut.pass) break;
        if (m * a.unit != a.unit) aut = {"automorphism", false, "unit at " + a.group.labels[x]};
        for (int i = 0; i < a.dim && aut.pass; ++i) {
            Vec mi = m.col(i);
            if (m * a.apply_star(basis(i)) != a.apply_star(mi)) aut = {"automorphism", false, "star at " + a.group.labels[x]};
            for (int j = 0; j < a.dim && aut.pass; ++j)
                if (m * a.product(basis(i), basis(j)) != a.product(mi, m.col(j)))
                    aut = {"automorphism", false, "product at " + a.group.labels[x]};
        }
    }
    rep.items.push_back(aut);
    return rep;
}

ModuleAlgebra trivial_module(const FiniteGroup& g, const Subgroup& domain) {
    ModuleAlgebra a;
    a.group = g;
    a.domain = domain;
    a.dim = 1;
    a.mult = {{MultTerm{0, CycNum(1)}}};
    a.unit = {CycNum(1)};
    a.star = Mat::identity(1);
    for (int x : domain) a.action[x] = Mat::identity(1);
    a.blocks = {1};
    return a;
}

ModuleAlgebra adjoint_module(const FiniteGroup& g, const ProjectiveRep& p) {
    int m = p.dim;
    ModuleAlgebra a;
    a.group = g;
    a.domain = p.domain;
    a.dim = m * m;
    a.mult.assign(static_cast<size_t>(a.dim) * a.dim, {});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int l = 0; l < m; ++l) a.mult[static_cast<size_t>(i * m + j) * a.dim + (j * m + l)].push_back({i * m + l, CycNum(1)});
    a.unit = Vec(a.dim);
    for (int i = 0; i < m; ++i) a.unit[i * m + i] = CycNum(1);
    a.star = Mat(a.dim, a.dim);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a.star(j * m + i, i * m + j) = CycNum(1);
    for (int x : p.domain) {
        const Mat& u = p.pi.at(x);
        auto ui = inverse(u);
        if (!ui) throw Error("BadParams", "corep", "projective representation not invertible");
        Mat act(a.dim, a.dim);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c) act(r * m + c, i * m + j) = u(r, i) * (*ui)(j, c);
        a.action[x] = std::move(act);
    }
    a.blocks = {m};
    return a;
}

ProjectiveRep dihedral_m2_rep(int K, int k, int a, int l) {
    if (k < 1 || K % k != 0) throw Error("BadParams", "corep", "k must divide K");
    FiniteGroup g = make_dihedral(K);
    int step = K / k;
    int N = lcm4(K);
    ProjectiveRep p;
    p.dim = 2;
    p.domain = closure(g, {dih(K, step, 0), dih(K, a, 1)});
    for (int x : p.domain) {
        int c = x % K, b = x / K;
        int j = ((b ? c - a : c) % K + K) % K / step;
        Mat d = diag2(CycNum(1), CycNum::zeta(N, -static_cast<long>(N / k) * j * l));
        p.pi[x] = b ? d * swap2() : d;
    }
    return p;
}

ModuleAlgebra induce(const FiniteGroup& g, const Subgroup& h, const ModuleAlgebra& a) {
    if (!is_subgroup(g, h)) throw Error("NotSubgroup", "corep", "inducing set is not a subgroup");
    for (int x : h)
        if (!a.action.count(x)) throw Error("NotSubgroup", "corep", "module algebra not defined on the subgroup");
    auto reps = left_coset_reps(g, h);
    int m = static_cast<int>(reps.size()), d = a.dim;
    std::vector<int> coset(g.order), rest(g.order);
    for (int j = 0; j < m; ++j)
        for (int y : h) {
            int x = g.mul(reps[j], y);
            coset[x] = j;
            rest[x] = y;
        }
    ModuleAlgebra out;
    out.group = g;
    out.dim = m * d;
    out.domain.resize(g.order);
    std::iota(out.domain.begin(), out.domain.end(), 0);
    out.mult.assign(static_cast<size_t>(out.dim) * out.dim, {});
    out.unit = Vec(out.dim);
    out.star = Mat(out.dim, out.dim);
    for (int i = 0; i < m; ++i) {
        for (int p = 0; p < d; ++p) {
            for (int q = 0; q < d; ++q)
                for (const auto& t : a.mult[static_cast<size_t>(p) * d + q])
                    out.mult[static_cast<size_t>(i * d + p) * out.dim + (i * d + q)].push_back({i * d + t.k, t.c});
            out.unit[i * d + p] = a.unit[p];
            for (int q = 0; q < d; ++q) out.star(i * d + q, i * d + p) = a.star(q, p);
        }
        for (int b = 0; b < static_cast<int>(a.blocks.size()); ++b) out.blocks.push_back(a.blocks[b]);
    }
    // (x ▷ f)_i = α_{h^{-1}}(f_j) where x^{-1} t_i = t_j h
    for (int x = 0; x < g.order; ++x) {
        Mat act(out.dim, out.dim);
        for (int i = 0; i < m; ++i) {
            int y = g.mul(g.inv(x), reps[i]);
            int j = coset[y];
            const Mat& al = a.action.at(g.inv(rest[y]));
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) act(i * d + p, j * d + q) = al(p, q);
        }
        out.action[x] = std::move(act);
    }
    return out;
}

FrobeniusPair frobenius_dims(const FiniteGroup& g, const GroupRep& v, const Subgroup& h, const ModuleAlgebra& w) {
    FrobeniusPair r;
    auto ind = induce(g, h, w);
    r.lhs = hom_dim(g, v.rho, ind.action_list());
    r.rhs = hom_dim_on(g, h, v.rho, w.action_list());
    return r;
}

Vec ComoduleAlgebra::product(const Vec& a, const Vec& b) const { return mult_apply(mult, dim, a, b); }

bool ComoduleAlgebra::is_commutative() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (product(unit_vec(dim, i), unit_vec(dim, j)) != product(unit_vec(dim, j), unit_vec(dim, i))) return false;
    return true;
}

AxiomReport verify_comodule_algebra(const ComoduleAlgebra& a, bool check_star) {
    const auto& h = *a.parent;
    AxiomReport rep;
    check_assoc_unit(a.dim, a.mult, a.unit, rep);
    using T3 = std::map<std::tuple<int, int, int>, CycNum>;
    auto prune = [](T3& t) {
        for (auto it = t.begin(); it != t.end();) it = it->second.is_zero() ? t.erase(it) : std::next(it);
    };
    AxiomResult co{"coassociativity", true, {}}, cu{"counit", true, {}};
    for (int i = 0; i < a.dim; ++i) {
        T3 l, r;
        Vec e(a.dim);
        for (const auto& t : a.coaction[i]) {
            for (const auto& u : a.coaction[t.j]) l[{u.j, u.k, t.k}].add_mul(t.c, u.c);
            for (const auto& u : h.comult[t.k]) r[{t.j, u.j, u.k}].add_mul(t.c, u.c);
            e[t.j].add_mul(t.c, h.counit[t.k]);
        }
        prune(l);
        prune(r);
        if (co.pass && l != r) co = {"coassociativity", false, std::to_string(i)};
        if (cu.pass && e != unit_vec(a.dim, i)) cu = {"counit", false, std::to_string(i)};
    }
    rep.items.push_back(co);
    rep.items.push_back(cu);

    AxiomResult mu{"multiplicative", true, {}};
    auto rho = [&](const Vec& x) {
        std::map<std::pair<int, int>, CycNum> m;
        for (int i = 0; i < a.dim; ++i) {
            if (x[i].is_zero()) continue;
            for (const auto& t : a.coaction[i]) m[{t.j, t.k}].add_mul(x[i], t.c);
        }
        for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
        return m;
    };
    std::vector<std::map<std::pair<int, int>, CycNum>> rb(a.dim);
    for (int i = 0; i < a.dim; ++i) rb[i] = rho(unit_vec(a.dim, i));
    {
        auto ru = rho(a.unit);
        std::map<std::pair<int, int>, CycNum> want;
        for (int i = 0; i < a.dim; ++i)
            for (int k = 0; k < h.dim; ++k) {
                CycNum c = a.unit[i] * h.unit[k];
                if (!c.is_zero()) want[{i, k}] = c;
            }
        if (ru != want) mu = {"multiplicative", false, "unit"};
    }
    for (int i = 0; i < a.dim && mu.pass; ++i)
        for (int j = 0; j < a.dim && mu.pass; ++j) {
            auto lhs = rho(a.product(unit_vec(a.dim, i), unit_vec(a.dim, j)));
            std::map<std::pair<int, int>, CycNum> rhs;
            for (const auto& [pk, c1] : rb[i])
                for (const auto& [ql, c2] : rb[j]) {
                    const auto& am = a.mult[static_cast<size_t>(pk.first) * a.dim + ql.first];
                    if (am.empty()) continue;
                    const auto& hm = h.mult_of(pk.second, ql.second);
                    if (hm.empty()) continue;
                    CycNum c = c1 * c2;
                    for (const auto& s : am)
                        for (const auto& t : hm) rhs[{s.k, t.k}].add_mul(c * s.c, t.c);
                }
            for (auto it = rhs.begin(); it != rhs.end();) it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
            if (lhs != rhs) mu = {"multiplicative", false, std::to_string(i) + "," + std::to_string(j)};
        }
    rep.items.push_back(mu);

    if (check_star) {
        AxiomResult st{"star", true, {}};
        for (int i = 0; i < a.dim && st.pass; ++i) {
            Vec si = a.star * conj(unit_vec(a.dim, i));
            auto lhs = rho(si);
            std::map<std::pair<int, int>, CycNum> rhs;
            for (const auto& [pk, c] : rb[i]) {
                Vec x = a.star.col(pk.first);
                Vec y = h.star.col(pk.second);
                for (int p = 0; p < a.dim; ++p) {
                    if (x[p].is_zero()) continue;
                    for (int q = 0; q < h.dim; ++q)
                        if (!y[q].is_zero()) rhs[{p, q}].add_mul(c.conj() * x[p], y[q]);
                }
            }
            for (auto it = rhs.begin(); it != rhs.end();) it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
            if (lhs != rhs) st = {"star", false, std::to_string(i)};
        }
        rep.items.push_back(st);
    }
    return rep;
}

ComoduleAlgebra module_to_comodule(const ModuleAlgebra& a, const HopfPtr& fg) {
    if (static_cast<int>(a.action.size()) != a.group.order)
        throw Error("BadParams", "corep", "action must be defined on the whole group");
    ComoduleAlgebra c;
    c.parent = fg;
    c.dim = a.dim;
    c.mult = a.mult;
    c.unit = a.unit;
    c.star = a.star;
    c.coaction.assign(a.dim, {});
    for (int i = 0; i < a.dim; ++i)
        for (int g = 0; g < a.group.order; ++g) {
            const Mat& m = a.action.at(g);
            for (int j = 0; j < a.dim; ++j)
                if (!m(j, i).is_zero()) c.coaction[i].push_back({j, g, m(j, i)});
        }
    return c;
}

ModuleAlgebra comodule_to_module(const ComoduleAlgebra& a, const FiniteGroup& g) {
    ModuleAlgebra m;
    m.group = g;
    m.dim = a.dim;
    m.mult = a.mult;
    m.unit = a.unit;
    m.star = a.star;
    m.domain.resize(g.order);
    std::iota(m.domain.begin(), m.domain.end(), 0);
    for (int x = 0; x < g.order; ++x) m.action[x] = Mat(a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (const auto& t : a.coaction[i]) m.action[t.k](t.j, i) += t.c;
    return m;
}

ComoduleAlgebra transport(const ComoduleAlgebra& a, const Cocycle& c, const HopfPtr& twisted, bool certify) {
    ComoduleAlgebra out;
    out.parent = twisted;
    out.dim = a.dim;
    out.unit = a.unit;
    out.star = a.star;
    out.coaction = a.coaction;
    int d = a.dim;
    out.mult.assign(static_cast<size_t>(d) * d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec v(d);
            for (const auto& t : a.coaction[i])
                for (const auto& u : a.coaction[j]) {
                    const CycNum& l = c.inverse_table(t.k, u.k);
                    if (l.is_zero()) continue;
                    const auto& terms = a.mult[static_cast<size_t>(t.j) * d + u.j];
                    if (terms.empty()) continue;
                    CycNum s = t.c * u.c * l;
                    for (const auto& m : terms) v[m.k].add_mul(s, m.c);
                }
            for (int k = 0; k < d; ++k)
                if (!v[k].is_zero()) out.mult[static_cast<size_t>(i) * d + j].push_back({k, v[k]});
        }
    if (certify) {
        auto rep = verify_comodule_algebra(out);
        if (!rep.ok()) {
            std::string w;
            for (const auto& it : rep.items)
                if (!it.pass) w += it.name + " " + it.witness + "; ";
            throw Error("TransportError", "corep", w);
        }
    }
    return out;
}

std::vector<int> comodule_multiplicities(const ComoduleAlgebra& a, const FiniteGroup& g) {
    return decompose_rep(g, comodule_to_module(a, g).action_list());
}

std::vector<int> module_multiplicities(const ModuleAlgebra& a) { return decompose_rep(a.group, a.action_list()); }

ComoduleAlgebra subalgebra_comodule(const HopfPtr& hp, const std::vector<Vec>& gens) {
    const auto& h = *hp;
    Subspace s(h.dim, gens);
    const auto& b = s.basis();
    int d = s.dim();
    ComoduleAlgebra c;
    c.parent = hp;
    c.dim = d;
    c.mult.assign(static_cast<size_t>(d) * d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec p = h.product(b[i], b[j]);
            if (!s.contains(p)) throw Error("NotClosed", "corep", "subspace not closed under the product");
            Vec co = s.coords(p);
            for (int k = 0; k < d; ++k)
                if (!co[k].is_zero()) c.mult[static_cast<size_t>(i) * d + j].push_back({k, co[k]});
        }
    if (!s.contains(h.unit)) throw Error("NotClosed", "corep", "subspace does not contain the unit");
    c.unit = s.coords(h.unit);
    c.star = Mat(d, d);
    for (int i = 0; i < d; ++i) {
        Vec st = h.apply_star(b[i]);
        if (!s.contains(st)) throw Error("NotClosed", "corep", "subspace not closed under the star");
        Vec co = s.coords(st);
        for (int k = 0; k < d; ++k) c.star(k, i) = co[k];
    }
    c.coaction.assign(d, {});
    for (int i = 0; i < d; ++i) {
        Mat m = h.coproduct(b[i]);
        for (int k = 0; k < h.dim; ++k) {
            Vec col = m.col(k);
            if (is_zero(col)) continue;
            if (!s.contains(col)) throw Error("NotClosed", "corep", "subspace is not a right coideal");
            Vec co = s.coords(col);
            for (int j = 0; j < d; ++j)
                if (!co[j].is_zero()) c.coaction[i].push_back({j, k, co[j]});
        }
    }
    return c;
}

} // namespace qgw
