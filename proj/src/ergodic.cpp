#include "qgw/ergodic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qgw/error.hpp"

namespace qgw {

namespace {

std::vector<int> divisors(int K) {
    std::vector<int> d;
    for (int k = 1; k <= K; ++k)
        if (K % k == 0) d.push_back(k);
    return d;
}

bool nonstandard_class(int K, int k, int shift) { return (K / k) % 2 == 0 && shift % 2 != 0; }

// Generators of the subgroup acting on a module algebra.
std::vector<int> domain_generators(const ModuleAlgebra& a) { return generators(a.group, a.domain); }

// Candidate scalars c with c^2 = d.
std::vector<CycNum> square_roots_of_unity_multiple(const CycNum& d, int N) {
    std::vector<CycNum> out;
    for (int j = 0; j < N; ++j) {
        CycNum z = CycNum::zeta(N, j);
        if (z * z == d) out.push_back(z);
    }
    return out;
}

} // namespace

std::string alpha_label(int k) { return "alpha^(" + std::to_string(k) + ")"; }

std::string beta_label(int k, int l) {
    return "beta^(" + std::to_string(k) + ")_" + (l == 0 ? std::string("0") : std::to_string(l) + "/2");
}

ErgodicCertificate is_ergodic(const ModuleAlgebra& a, unsigned bits) {
    ErgodicCertificate c;
    auto gens = domain_generators(a);
    int n = a.dim;
    Mat fix(static_cast<int>(gens.size()) * n, n), inv(static_cast<int>(gens.size()) * n + 1, n);
    for (size_t g = 0; g < gens.size(); ++g) {
        const Mat& m = a.action.at(gens[g]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CycNum v = m(i, j);
                if (i == j) v -= CycNum(1);
                fix(static_cast<int>(g) * n + i, j) = v;
                inv(static_cast<int>(g) * n + j, i) = v;  // φ∘α_g = φ
            }
    }
    c.fixed_dim = static_cast<int>(nullspace(fix).size());
    c.ergodic = c.fixed_dim == 1;
    if (!c.ergodic) return c;
    int last = static_cast<int>(gens.size()) * n;
    for (int j = 0; j < n; ++j) inv(last, j) = a.unit[j];
    Vec rhs(last + 1);
    rhs[last] = CycNum(1);
    auto phi = solve(inv, rhs);
    if (!phi) return c;
    c.invariant_state = *phi;
    Mat gram(n, n);
    std::vector<Vec> stars(n);
    for (int i = 0; i < n; ++i) stars[i] = a.apply_star(unit_vec(n, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec p = a.product(stars[i], unit_vec(n, j));
            CycNum s;
            for (int k = 0; k < n; ++k)
                if (!p[k].is_zero()) s.add_mul(p[k], (*phi)[k]);
            gram(i, j) = s;
        }
    if (is_hermitian(gram)) {
        c.min_eigenvalue = min_eigenvalue_hermitian(gram, bits);
        c.state_positive = c.min_eigenvalue > -positivity_threshold(bits);
    }
    return c;
}

ModuleAlgebra alpha_explicit(int K, int k) {
    if (k < 1 || K % k != 0) throw Error("BadDivisor", "ergodic", std::to_string(k) + " does not divide " + std::to_string(K));
    int m = K / k;
    ModuleAlgebra a;
    a.group = make_dihedral(K);
    a.domain.resize(a.group.order);
    std::iota(a.domain.begin(), a.domain.end(), 0);
    a.dim = 2 * m;
    a.mult.assign(static_cast<size_t>(a.dim) * a.dim, {});
    for (int i = 0; i < a.dim; ++i) a.mult[static_cast<size_t>(i) * a.dim + i].push_back({i, CycNum(1)});
    a.unit.assign(a.dim, CycNum(1));
    a.star = Mat::identity(a.dim);
    a.blocks.assign(a.dim, 1);
    for (int x = 0; x < a.group.order; ++x) {
        int j = x % K, b = x / K;
        Mat act(a.dim, a.dim);
        for (int c = 0; c < 2; ++c)
            for (int p = 0; p < m; ++p) {
                int c1 = b ? 1 - c : c;
                int q = ((c1 == 0 ? p + j : p - j) % m + m) % m;
                act(c1 * m + q, c * m + p) = CycNum(1);
            }
        a.action[x] = std::move(act);
    }
    return a;
}

ErgodicActionData alpha_action(int K, int k) {
    if (k < 1 || K % k != 0) throw Error("BadDivisor", "ergodic", std::to_string(k) + " does not divide " + std::to_string(K));
    FiniteGroup g = make_dihedral(K);
    ErgodicActionData d;
    d.label = d.family_label = alpha_label(k);
    d.family = ActionFamily::alpha;
    d.K = K;
    d.k = k;
    Provenance p;
    p.subgroup = closure(g, {dih(K, K / k, 0)});
    d.realization = induce(g, p.subgroup, trivial_module(g, p.subgroup));
    d.provenance = p;
    d.invariant_state = is_ergodic(d.realization).invariant_state;
    return d;
}

ErgodicActionData beta_action(int K, int k, int l, int shift) {
    if (k < 1 || K % k != 0) throw Error("BadDivisor", "ergodic", std::to_string(k) + " does not divide " + std::to_string(K));
    if (l < 0 || 2 * l > k)
        throw Error("BadParams", "ergodic", "beta(" + std::to_string(K) + "," + std::to_string(k) + "," + std::to_string(l) + ")");
    FiniteGroup g = make_dihedral(K);
    ErgodicActionData d;
    d.family_label = beta_label(k, l);
    d.label = d.family_label + (nonstandard_class(K, k, shift) ? "'" : "");
    d.family = ActionFamily::beta;
    d.K = K;
    d.k = k;
    d.l = l;
    Provenance p;
    p.dihedral = true;
    p.shift = ((shift % K) + K) % K;
    p.subgroup = closure(g, {dih(K, K / k, 0), dih(K, shift, 1)});
    if (l == 0) {
        d.realization = induce(g, p.subgroup, trivial_module(g, p.subgroup));
    } else {
        p.m2 = dihedral_m2_rep(K, k, p.shift, l);
        d.realization = induce(g, p.subgroup, adjoint_module(g, *p.m2));
    }
    d.provenance = p;
    d.invariant_state = is_ergodic(d.realization).invariant_state;
    return d;
}

bool is_equivariant_isomorphism(const ModuleAlgebra& a, const ModuleAlgebra& b, const Mat& phi) {
    if (a.dim != b.dim || phi.rows() != b.dim || phi.cols() != a.dim) return false;
    if (rank(phi) != a.dim) return false;
    if (phi * a.unit != b.unit) return false;
    for (int i = 0; i < a.dim; ++i) {
        Vec pi = phi.col(i);
        if (phi * a.apply_star(unit_vec(a.dim, i)) != b.apply_star(pi)) return false;
        for (int j = 0; j < a.dim; ++j)
            if (phi * a.product(unit_vec(a.dim, i), unit_vec(a.dim, j)) != b.product(pi, phi.col(j))) return false;
    }
    for (int x : a.domain) {
        if (!b.action.count(x)) return false;
        if (phi * a.action.at(x) != b.action.at(x) * phi) return false;
    }
    return true;
}

IsoWitness are_isomorphic(const ErgodicActionData& a, const ErgodicActionData& b) {
    if (!a.provenance || !b.provenance) throw Error("NeedsProvenance", "ergodic", a.label + " / " + b.label);
    IsoWitness w;
    if (a.K != b.K) {
        w.reason = "different groups";
        return w;
    }
    if (a.realization.dim != b.realization.dim) {
        w.reason = "dimensions " + std::to_string(a.realization.dim) + " vs " + std::to_string(b.realization.dim);
        return w;
    }
    const auto& pa = *a.provenance;
    const auto& pb = *b.provenance;
    if (pa.m2.has_value() != pb.m2.has_value()) {
        w.reason = "inducing module algebras of different dimension";
        return w;
    }
    FiniteGroup g = make_dihedral(a.K);
    int N = lcm4(a.K);
    for (int x = 0; x < g.order; ++x) {
        if (conjugate(g, g.inv(x), pa.subgroup) != pb.subgroup) continue;
        if (!pa.m2) {
            w.isomorphic = true;
            w.g = x;
            w.map = Mat::identity(1);
            w.reason = "conjugate subgroups, trivial modules";
            return w;
        }
        // T π1(h) = c_h π2(x^{-1} h x) T on generators of H1
        auto gens = generators(g, pa.subgroup);
        std::vector<std::vector<CycNum>> cands;
        for (int h : gens) {
            const Mat& p1 = pa.m2->pi.at(h);
            const Mat& p2 = pb.m2->pi.at(g.mul(g.mul(g.inv(x), h), x));
            cands.push_back(square_roots_of_unity_multiple(det(p1) / det(p2), N));
        }
        std::vector<size_t> idx(gens.size(), 0);
        bool done = gens.empty();
        for (const auto& c : cands)
            if (c.empty()) done = true;
        while (!done) {
            Mat sys(4 * static_cast<int>(gens.size()), 4);
            for (size_t s = 0; s < gens.size(); ++s) {
                int h = gens[s];
                const Mat& p1 = pa.m2->pi.at(h);
                Mat p2 = pb.m2->pi.at(g.mul(g.mul(g.inv(x), h), x));
                const CycNum& c = cands[s][idx[s]];
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        int row = 4 * static_cast<int>(s) + 2 * i + j;
                        for (int r = 0; r < 2; ++r) {
                            sys(row, 2 * i + r) += p1(r, j);
                            sys(row, 2 * r + j) -= c * p2(i, r);
                        }
                    }
            }
            for (const auto& v : nullspace(sys)) {
                Mat t(2, 2);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) t(i, j) = v[2 * i + j];
                if (det(t).is_zero()) continue;
                Mat ti = *inverse(t);
                Mat phi(4, 4);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int r = 0; r < 2; ++r)
                            for (int c = 0; c < 2; ++c) phi(r * 2 + c, i * 2 + j) = t(r, i) * ti(j, c);
                w.isomorphic = true;
                w.g = x;
                w.map = phi;
                w.reason = "conjugate subgroups, intertwined projective representations";
                return w;
            }
            size_t s = 0;
            while (s < idx.size() && ++idx[s] == cands[s].size()) idx[s++] = 0;
            done = s == idx.size();
        }
    }
    w.reason = "no conjugating element gives isomorphic inducing data";
    return w;
}

ActionInvariants action_invariants(const ModuleAlgebra& a) {
    ActionInvariants inv;
    int n = a.dim;
    inv.dim = n;
    inv.mult = module_multiplicities(a);
    // centre: Σ x_i (b_i b_j - b_j b_i) = 0 for all j
    Mat sys(n * n, n);
    bool comm = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec d = sub(a.product(unit_vec(n, i), unit_vec(n, j)), a.product(unit_vec(n, j), unit_vec(n, i)));
            for (int k = 0; k < n; ++k)
                if (!d[k].is_zero()) {
                    sys(j * n + k, i) = d[k];
                    comm = false;
                }
        }
    inv.commutative = comm;
    if (comm) {
        inv.center_dim = n;
        inv.center_mult = inv.mult;
        return inv;
    }
    auto z = nullspace(sys);
    inv.center_dim = static_cast<int>(z.size());
    Subspace zs(n, z);
    std::vector<Mat> rho(a.group.order);
    for (int x : a.domain) {
        Mat m(zs.dim(), zs.dim());
        for (int c = 0; c < zs.dim(); ++c) {
            Vec img = zs.coords(a.action.at(x) * zs.basis()[c]);
            for (int r = 0; r < zs.dim(); ++r) m(r, c) = img[r];
        }
        rho[x] = std::move(m);
    }
    inv.center_mult = decompose_rep(a.group, rho);
    return inv;
}

Census classify_ergodic(int K, bool with_invariants) {
    Census c;
    c.K = K;
    FiniteGroup g = make_dihedral(K);
    for (int k : divisors(K)) {
        c.standard.push_back(alpha_action(K, k));
        for (int l = 0; 2 * l <= k; ++l) c.standard.push_back(beta_action(K, k, l));
    }
    std::vector<ErgodicActionData> raw;
    for (const auto& [h, size] : subgroup_conjugacy_classes(g)) {
        int refl = -1;
        for (int x : h)
            if (x >= K) {
                refl = x - K;
                break;
            }
        if (refl < 0) {
            raw.push_back(alpha_action(K, static_cast<int>(h.size())));
            continue;
        }
        int k = static_cast<int>(h.size()) / 2;
        for (int l = 0; 2 * l <= k; ++l) raw.push_back(beta_action(K, k, l, refl));
    }
    for (size_t i = 0; i < raw.size(); ++i) {
        bool dup = false;
        for (const auto& kept : c.raw)
            if (are_isomorphic(kept, raw[i]).isomorphic) {
                dup = true;
                c.flags.push_back("duplicate class " + raw[i].label + " ~ " + kept.label);
                break;
            }
        if (!dup) c.raw.push_back(std::move(raw[i]));
    }
    std::set<std::string> family_labels;
    for (const auto& p : c.standard) family_labels.insert(p.label);
    for (const auto& r : c.raw)
        if (!family_labels.count(r.label))
            c.flags.push_back("raw class " + r.label + " is induced from a subgroup not conjugate to the standard one");
    if (with_invariants) {
        std::map<ActionInvariants, std::string> seen;
        for (auto& r : c.raw) {
            r.invariants = action_invariants(r.realization);
            auto [it, fresh] = seen.emplace(r.invariants, r.label);
            if (!fresh) {
                c.invariants_injective = false;
                c.flags.push_back("invariants do not separate " + it->second + " and " + r.label);
            }
        }
        for (auto& p : c.standard)
            for (const auto& r : c.raw)
                if (r.label == p.label) p.invariants = r.invariants;
    }
    return c;
}

} // namespace qgw
