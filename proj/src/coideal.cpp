#include "qgw/coideal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "qgw/error.hpp"

namespace qgw {

namespace {

using Poly = std::vector<CycNum>;  // low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mod(Poly a, const Poly& b) {
    trim(a);
    CycNum lead = b.back().inv();
    while (degree(a) >= degree(b)) {
        CycNum f = a.back() * lead;
        int shift = degree(a) - degree(b);
        for (int i = 0; i <= degree(b); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    CycNum lead = a.back().inv();
    for (auto& c : a) c *= lead;
    return a;
}

bool rational_square(const mpq_class& q, mpq_class& root) {
    if (sgn(q) < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = mpq_class(rn, rd);
    root.canonicalize();
    return true;
}

// Square roots of the form q·√m·ζ_M^j, m ∈ {1, 2, 3}.
std::optional<CycNum> cyc_sqrt(const CycNum& d, int M) {
    if (d.is_zero()) return CycNum(0);
    struct Surd {
        int m, needs;
        CycNum value;
    };
    std::vector<Surd> surds{{1, 1, CycNum(1)}};
    if (M % 8 == 0) surds.push_back({2, 8, CycNum::zeta(8, 1) + CycNum::zeta(8, 7)});
    if (M % 12 == 0) surds.push_back({3, 12, CycNum::zeta(12, 1) + CycNum::zeta(12, 11)});
    for (int j = 0; j < M; ++j) {
        CycNum r = d * CycNum::zeta(M, -2L * j);
        if (!r.is_rational()) continue;
        for (const auto& s : surds) {
            mpq_class root;
            if (rational_square(r.rational() / s.m, root)) return CycNum(root) * s.value * CycNum::zeta(M, j);
        }
    }
    return std::nullopt;
}

// Roots of p in Q(ζ_M); nullopt when they could not be found exactly.
std::optional<std::vector<CycNum>> poly_roots(const Poly& p, int M) {
    std::vector<CycNum> out;
    if (degree(p) <= 0) return out;
    if (degree(p) == 1) {
        out.push_back(-p[0] / p[1]);
        return out;
    }
    if (degree(p) == 2) {
        CycNum disc = p[1] * p[1] - CycNum(4) * p[2] * p[0];
        auto s = cyc_sqrt(disc, M);
        if (!s) return std::nullopt;
        CycNum den = (CycNum(2) * p[2]).inv();
        out.push_back((-p[1] + *s) * den);
        if (!s->is_zero()) out.push_back((-p[1] - *s) * den);
        return out;
    }
    return std::nullopt;
}

std::string subgroup_str(const FiniteGroup& g, const Subgroup& h) {
    std::string s = "{";
    for (size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + g.labels[h[i]];
    return s + "}";
}

Subspace complement_span(int n, const Subgroup& m) {
    std::vector<Vec> gens;
    for (int x = 0; x < n; ++x)
        if (!std::binary_search(m.begin(), m.end(), x)) gens.push_back(unit_vec(n, x));
    return Subspace(n, gens);
}

std::vector<std::pair<Subgroup, HopfQuotient>> restriction_quotients_of(const HopfPtr& h, const FiniteGroup& g) {
    std::vector<std::pair<Subgroup, HopfQuotient>> out;
    for (const auto& m : all_subgroups(g)) {
        Subspace ideal = complement_span(h->dim, m);
        if (!is_ideal(*h, ideal)) continue;
        auto q = quotient_by_ideal(h, ideal);
        if (verify_quotient(q).ok()) out.emplace_back(m, std::move(q));
    }
    return out;
}

// Invariants of the D_K-module algebra carried by c.
ActionInvariants carried_invariants(const CoidealSubalgebra& c, const FiniteGroup& g, const DihedralMinusOne* twisted,
                                    const Cocycle& back) {
    ComoduleAlgebra ca = subalgebra_comodule(c.parent, c.basis());
    if (twisted) ca = transport(ca, back, twisted->classical, true);
    return action_invariants(comodule_to_module(ca, g));
}

} // namespace

AxiomReport verify_coideal(const HopfAlgebraData& h, const Subspace& c) {
    AxiomReport rep;
    rep.items.push_back({"unital", c.contains(h.unit), {}});
    AxiomResult st{"star_closed", true, {}};
    for (size_t i = 0; i < c.basis().size() && st.pass; ++i)
        if (!c.contains(h.apply_star(c.basis()[i]))) st = {"star_closed", false, "basis " + std::to_string(i)};
    rep.items.push_back(st);
    AxiomResult pr{"product_closed", true, {}};
    for (size_t i = 0; i < c.basis().size() && pr.pass; ++i)
        for (size_t j = 0; j < c.basis().size() && pr.pass; ++j)
            if (!c.contains(h.product(c.basis()[i], c.basis()[j])))
                pr = {"product_closed", false, std::to_string(i) + "," + std::to_string(j)};
    rep.items.push_back(pr);
    AxiomResult co{"coideal", true, {}};
    for (size_t i = 0; i < c.basis().size() && co.pass; ++i) {
        Mat m = h.coproduct(c.basis()[i]);
        for (int k = 0; k < h.dim && co.pass; ++k)
            if (!c.contains(m.col(k))) co = {"coideal", false, "basis " + std::to_string(i)};
    }
    rep.items.push_back(co);
    return rep;
}

CoidealSubalgebra make_coideal(const HopfPtr& hp, const std::vector<Vec>& gens, const FiniteGroup* coalgebra_group) {
    const auto& h = *hp;
    CoidealSubalgebra c;
    c.parent = hp;
    c.space = Subspace(h.dim, gens);
    c.certificates = verify_coideal(h, c.space);
    if (!c.certificates.ok()) return c;
    const auto& b = c.basis();
    int d = c.dim(), n = h.dim;
    Mat sys(d * n, d);
    c.commutative = true;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            Vec cm = sub(h.product(b[i], b[j]), h.product(b[j], b[i]));
            for (int k = 0; k < n; ++k)
                if (!cm[k].is_zero()) {
                    sys(j * n + k, i) = cm[k];
                    c.commutative = false;
                }
        }
    c.center_dim = c.commutative ? d : static_cast<int>(nullspace(sys).size());
    if (coalgebra_group) c.mult = comodule_multiplicities(subalgebra_comodule(hp, b), *coalgebra_group);
    return c;
}

CoidealSubalgebra quotient_coideal(const HopfQuotient& q, const FiniteGroup* coalgebra_group) {
    const auto& h = *q.source;
    int n = h.dim, t = q.target->dim;
    Mat sys(t * n, n);
    for (int i = 0; i < n; ++i) {
        for (const auto& term : h.comult[i])
            for (int a = 0; a < t; ++a) {
                const CycNum& p = q.map(a, term.j);
                if (!p.is_zero()) sys(a * n + term.k, i) += term.c * p;
            }
        for (int a = 0; a < t; ++a)
            if (!q.target->unit[a].is_zero()) sys(a * n + i, i) -= q.target->unit[a];
    }
    return make_coideal(q.source, nullspace(sys), coalgebra_group);
}

bool is_ideal(const HopfAlgebraData& h, const Subspace& s) {
    for (const auto& v : s.basis())
        for (int i = 0; i < h.dim; ++i) {
            Vec e = h.basis(i);
            if (!s.contains(h.product(e, v)) || !s.contains(h.product(v, e))) return false;
        }
    return true;
}

Subspace ideal_generated(const HopfAlgebraData& h, const std::vector<Vec>& gens) {
    Subspace s(h.dim);
    std::vector<Vec> queue;
    for (const auto& g : gens)
        if (s.add(g)) queue.push_back(g);
    for (size_t q = 0; q < queue.size() && s.dim() < h.dim; ++q)
        for (int i = 0; i < h.dim; ++i) {
            Vec e = h.basis(i);
            for (Vec p : {h.product(e, queue[q]), h.product(queue[q], e)})
                if (s.add(p)) queue.push_back(std::move(p));
        }
    return s;
}

HopfQuotient quotient_by_ideal(const HopfPtr& hp, const Subspace& ideal) {
    const auto& h = *hp;
    int n = h.dim;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!std::binary_search(ideal.pivots().begin(), ideal.pivots().end(), i)) keep.push_back(i);
    int d = static_cast<int>(keep.size());
    auto proj = [&](const Vec& v) {
        Vec r = ideal.reduce(v), out(d);
        for (int a = 0; a < d; ++a) out[a] = r[keep[a]];
        return out;
    };
    HopfQuotient q;
    q.source = hp;
    q.map = Mat(d, n);
    std::vector<Vec> pb(n);
    for (int i = 0; i < n; ++i) {
        pb[i] = proj(h.basis(i));
        for (int a = 0; a < d; ++a) q.map(a, i) = pb[i][a];
    }
    auto t = std::make_shared<HopfAlgebraData>();
    t->dim = d;
    t->cyc_order = h.cyc_order;
    for (int i : keep) t->labels.push_back(h.labels[i]);
    t->mult.assign(static_cast<size_t>(d) * d, {});
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) t->set_product(a, b, proj(h.basis_product(keep[a], keep[b])));
    t->comult.assign(d, {});
    for (int a = 0; a < d; ++a) {
        Mat acc(d, d);
        for (const auto& term : h.comult[keep[a]])
            for (int x = 0; x < d; ++x) {
                if (pb[term.j][x].is_zero()) continue;
                CycNum f = term.c * pb[term.j][x];
                for (int y = 0; y < d; ++y)
                    if (!pb[term.k][y].is_zero()) acc(x, y).add_mul(f, pb[term.k][y]);
            }
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                if (!acc(x, y).is_zero()) t->comult[a].push_back({x, y, acc(x, y)});
    }
    t->unit = proj(h.unit);
    t->counit.resize(d);
    t->antipode = Mat(d, d);
    t->star = Mat(d, d);
    for (int a = 0; a < d; ++a) {
        t->counit[a] = h.counit[keep[a]];
        Vec s = proj(h.antipode.col(keep[a])), st = proj(h.apply_star(h.basis(keep[a])));
        for (int x = 0; x < d; ++x) {
            t->antipode(x, a) = s[x];
            t->star(x, a) = st[x];
        }
    }
    q.target = t;
    return q;
}

std::pair<IdempotentState, CoidealSubalgebra> tame_coideal(const GroupAlgebraQuotient& gq, const Subgroup& omega,
                                                           const FiniteGroup* coalgebra_group, unsigned bits) {
    const auto& h = *gq.q.source;
    if (!is_subgroup(gq.gamma, omega)) throw Error("NotSubgroup", "coideal", subgroup_str(gq.gamma, omega));
    IdempotentState s;
    s.parent = gq.q.source;
    s.quotient = gq.name;
    s.omega = omega;
    s.phi = Functional{gq.q.source, Vec(h.dim)};
    for (int i = 0; i < h.dim; ++i)
        for (int g : omega) s.phi.coeffs[i] += gq.q.map(g, i);
    if (convolve(s.phi, s.phi).coeffs != s.phi.coeffs) throw Error("NotIdempotent", "coideal", gq.name + " " + subgroup_str(gq.gamma, omega));
    Mat gram = gram_matrix(h, s.phi.coeffs);
    if (s.phi(h.unit) != CycNum(1) || !is_hermitian(gram))
        throw Error("NotAState", "coideal", "not normalized or not hermitian");
    s.min_eigenvalue = min_eigenvalue_hermitian(gram, bits);
    if (s.min_eigenvalue < -positivity_threshold(bits))
        throw Error("NotAState", "coideal", "Gram eigenvalue " + s.min_eigenvalue.str(20));
    std::vector<Vec> image(h.dim, Vec(h.dim));
    for (int i = 0; i < h.dim; ++i)
        for (const auto& t : h.comult[i])
            if (!s.phi.coeffs[t.j].is_zero()) image[i][t.k].add_mul(t.c, s.phi.coeffs[t.j]);
    return {s, make_coideal(gq.q.source, image, coalgebra_group)};
}

bool is_conditional_expectation(const IdempotentState& s, const CoidealSubalgebra& c) {
    const auto& h = *s.parent;
    for (const auto& v : c.basis()) {
        Mat m = h.coproduct(v);
        Vec e(h.dim);
        for (int j = 0; j < h.dim; ++j)
            if (!s.phi.coeffs[j].is_zero())
                for (int k = 0; k < h.dim; ++k)
                    if (!m(j, k).is_zero()) e[k].add_mul(m(j, k), s.phi.coeffs[j]);
        if (e != v) return false;
    }
    return true;
}

std::vector<std::pair<Subgroup, HopfQuotient>> restriction_quotients(const DihedralMinusOne& d, const FiniteGroup& g) {
    return restriction_quotients_of(d.algebra, g);
}

std::vector<GroupAlgebraQuotient> group_algebra_quotients(const DihedralMinusOne& d) {
    const auto& h = *d.algebra;
    int n = h.dim;
    int N = h.cyc_order;
    CycNum i = CycNum::zeta(4, 1);
    struct Named {
        std::string name;
        std::array<std::array<CycNum, 2>, 2> p;
    };
    std::vector<Named> ps{{"P=1", {{{CycNum(1), CycNum(0)}, {CycNum(0), CycNum(1)}}}},
                          {"P=[[1,1],[1,-1]]", {{{CycNum(1), CycNum(1)}, {CycNum(1), CycNum(-1)}}}},
                          {"P=[[1,1],[i,-i]]", {{{CycNum(1), CycNum(1)}, {i, -i}}}},
                          {"P=[[1,1],[-i,i]]", {{{CycNum(1), CycNum(1)}, {-i, i}}}}};
    std::vector<GroupAlgebraQuotient> out;
    std::vector<Subspace> seen;
    for (const auto& [name, p] : ps) {
        Mat pm(2, 2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) pm(a, b) = p[a][b];
        Mat pi = *inverse(pm);
        std::array<std::array<Vec, 2>, 2> v;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                v[a][b] = Vec(n);
                for (int c = 0; c < 2; ++c)
                    for (int e = 0; e < 2; ++e) axpy(v[a][b], pm(a, c) * pi(e, b), d.y.y[c][e]);
            }
        Subspace ideal = ideal_generated(h, {v[0][1], v[1][0], h.apply_star(v[0][1]), h.apply_star(v[1][0])});
        if (ideal.dim() == n || std::find(seen.begin(), seen.end(), ideal) != seen.end()) continue;
        seen.push_back(ideal);
        HopfQuotient q0 = quotient_by_ideal(d.algebra, ideal);
        const auto& qa = *q0.target;
        int qd = qa.dim;
        Vec g1 = q0.map * v[0][0], g2 = q0.map * v[1][1];
        std::vector<Vec> elems{qa.unit};
        std::vector<std::string> words{"e"};
        std::vector<std::array<int, 2>> step;  // right multiplication by g1, g2
        bool ok = true;
        for (size_t e = 0; e < elems.size() && ok; ++e) {
            std::array<int, 2> st{};
            for (int s = 0; s < 2; ++s) {
                Vec pr = qa.product(elems[e], s ? g2 : g1);
                auto it = std::find(elems.begin(), elems.end(), pr);
                if (it == elems.end()) {
                    if (static_cast<int>(elems.size()) == qd) {
                        ok = false;
                        break;
                    }
                    elems.push_back(pr);
                    words.push_back((words[e] == "e" ? std::string() : words[e]) + (s ? "g2" : "g1"));
                    st[s] = static_cast<int>(elems.size()) - 1;
                } else {
                    st[s] = static_cast<int>(it - elems.begin());
                }
            }
            step.push_back(st);
        }
        if (!ok || static_cast<int>(elems.size()) != qd) continue;
        Mat w = Mat::from_cols(elems, qd);
        auto winv = inverse(w);
        if (!winv) continue;
        // identify Γ with a dihedral or cyclic group through the images of g1, g2
        bool t1 = step[0][0] != 0, t2 = step[0][1] != 0;
        FiniteGroup target;
        int img1 = 0, img2 = 0;
        if (t1 && t2 && step[0][0] != step[0][1]) {
            int m = 1, x = step[step[0][0]][1];
            while (x != 0 && m <= qd) {
                x = step[step[x][0]][1];
                ++m;
            }
            target = make_dihedral(m);
            img1 = dih(m, 0, 1);
            img2 = dih(m, -1, 1);
        } else if (t1 || t2) {
            target = make_cyclic(2);
            img1 = t1 ? 1 : 0;
            img2 = t2 ? 1 : 0;
        } else {
            target = make_cyclic(1);
        }
        if (target.order != qd) continue;
        std::vector<int> img(qd, -1);
        img[0] = target.identity;
        for (int e = 0; e < qd && ok; ++e)
            for (int s = 0; s < 2; ++s) {
                int nxt = step[e][s], val = target.mul(img[e], s ? img2 : img1);
                if (img[nxt] < 0) img[nxt] = val;
                else if (img[nxt] != val) ok = false;
            }
        if (!ok) continue;
        GroupAlgebraQuotient gq;
        gq.gamma = target;
        gq.name = name;
        gq.q.source = d.algebra;
        gq.q.target = group_algebra(target, N);
        gq.q.map = Mat(qd, n);
        for (int c = 0; c < n; ++c) {
            Vec co = *winv * q0.map.col(c);
            for (int e = 0; e < qd; ++e) gq.q.map(img[e], c) = co[e];
        }
        if (!verify_quotient(gq.q).ok()) continue;
        gq.name += target.spec.kind == GroupKind::dihedral ? " onto CD_" + std::to_string(target.spec.n)
                                                             : " onto CZ_" + std::to_string(target.order);
        out.push_back(std::move(gq));
    }
    return out;
}

std::string identify_coideal(const CoidealSubalgebra& c, const Census& census, const DihedralMinusOne* twisted) {
    FiniteGroup g = make_dihedral(census.K);
    Cocycle back;
    if (twisted) back = inverse_cocycle(twisted->cocycle, twisted->algebra);
    ActionInvariants inv = carried_invariants(c, g, twisted, back);
    for (const auto& a : census.raw)
        if (a.invariants == inv) return a.label;
    return {};
}

int EmbeddableResult::count() const { return static_cast<int>(family_labels().size()); }

std::set<std::string> EmbeddableResult::labels() const {
    std::set<std::string> s;
    for (const auto& e : entries) s.insert(e.label);
    return s;
}

std::set<std::string> EmbeddableResult::family_labels() const {
    std::set<std::string> s;
    for (const auto& e : entries) s.insert(e.family_label);
    return s;
}

EmbeddableResult embeddable_classification(int K, bool twisted) {
    if (twisted && K % 2 != 0) throw Error("BadParams", "coideal", "twisted classification needs even K");
    return embeddable_classification(classify_ergodic(K), twisted);
}

EmbeddableResult embeddable_classification(const Census& census, bool twisted) {
    int K = census.K;
    if (twisted && K % 2 != 0) throw Error("BadParams", "coideal", "twisted classification needs even K");
    EmbeddableResult res;
    res.K = K;
    res.twisted = twisted;
    FiniteGroup g = make_dihedral(K);
    std::optional<DihedralMinusOne> dm;
    HopfPtr h;
    Cocycle back;
    if (twisted) {
        dm = dihedral_minus_one(K);
        h = dm->algebra;
        back = inverse_cocycle(dm->cocycle, h);
    } else {
        h = function_algebra(g, lcm4(K));
    }

    std::map<ActionInvariants, size_t> lookup;
    for (size_t i = 0; i < census.raw.size(); ++i) lookup.emplace(census.raw[i].invariants, i);
    std::vector<Subspace> seen;
    std::map<size_t, EmbeddableEntry> found;
    auto consider = [&](CoidealSubalgebra c, const std::string& source) {
        ++res.candidates;
        if (!c.certificates.ok()) {
            res.findings.push_back("candidate from " + source + " failed its certificates");
            return;
        }
        if (std::find(seen.begin(), seen.end(), c.space) != seen.end()) return;
        seen.push_back(c.space);
        auto it = lookup.find(carried_invariants(c, g, dm ? &*dm : nullptr, back));
        if (it == lookup.end()) {
            res.findings.push_back("unmatched coideal of dimension " + std::to_string(c.dim()) + " from " + source);
            return;
        }
        if (found.count(it->second)) return;
        const auto& act = census.raw[it->second];
        found.emplace(it->second, EmbeddableEntry{std::move(c), act.label, act.family_label, source});
    };

    for (auto& [m, q] : restriction_quotients_of(h, g))
        consider(quotient_coideal(q, &g), "restriction to " + subgroup_str(g, m));
    if (twisted) {
        // coset-space subcoalgebras of F(D_K) that stay closed under the twisted product
        for (auto& [m, q] : restriction_quotients_of(dm->classical, g)) {
            auto cc = quotient_coideal(q);
            if (!verify_coideal(*h, cc.space).ok()) continue;
            consider(make_coideal(h, cc.basis(), &g), "coset space of " + subgroup_str(g, m));
        }
        for (const auto& gq : group_algebra_quotients(*dm)) {
            consider(quotient_coideal(gq.q, &g), gq.name);
            for (const auto& omega : all_subgroups(gq.gamma)) {
                try {
                    consider(tame_coideal(gq, omega, &g).second, gq.name + " tame " + subgroup_str(gq.gamma, omega));
                } catch (const Error& e) {
                    res.findings.push_back(gq.name + " " + subgroup_str(gq.gamma, omega) + ": " + e.what());
                }
            }
        }
    }
    if (!census.invariants_injective) res.findings.push_back("census invariants are not injective; matches may merge classes");
    for (auto& [idx, e] : found) res.entries.push_back(std::move(e));
    return res;
}

std::vector<CountRow> count_comparison(const std::vector<int>& Ks, int jobs) {
    for (int K : Ks)
        if (K < 2 || K % 2 != 0) throw Error("BadParams", "coideal", "K must be even, got " + std::to_string(K));
    std::vector<CountRow> rows(Ks.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (size_t i = next++; i < Ks.size(); i = next++) {
            try {
                int K = Ks[i];
                Census c = classify_ergodic(K);
                auto cl = embeddable_classification(c, false);
                auto tw = embeddable_classification(c, true);
                CountRow& r = rows[i];
                r.K = K;
                r.classical = cl.count();
                r.twisted = tw.count();
                r.classical_raw = static_cast<int>(cl.entries.size());
                r.twisted_raw = static_cast<int>(tw.entries.size());
                for (int k = 1; k <= K; ++k)
                    if (K % k == 0) ++r.tau;
            } catch (...) {
                std::lock_guard<std::mutex> lk(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    int n = std::max(1, std::min<int>(jobs, static_cast<int>(Ks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

double loglog_slope(const std::vector<CountRow>& rows, bool twisted) {
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        double x = std::log(r.tau), y = std::log(twisted ? r.twisted : r.classical);
        n += 1;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double den = n * sxx - sx * sx;
    return den == 0 ? 0 : (n * sxy - sx * sy) / den;
}

OracleResult brute_force_coideals(const HopfPtr& hp, const CoalgebraShape& shape) {
    const auto& h = *hp;
    int n = h.dim;
    if (n > 8) throw Error("OracleLimit", "coideal", "dimension " + std::to_string(n));
    if (shape.group.order != n) throw Error("OracleLimit", "coideal", "coalgebra group does not match the dimension");
    struct Block {
        std::vector<Vec> all;
        bool family = false;
        std::vector<Vec> r1, r2;
    };
    std::vector<Block> blocks;
    if (shape.kind == CoalgebraShape::Kind::functions) {
        for (const auto& r : group_irreps(shape.group)) {
            if (r.dim > 2) throw Error("OracleLimit", "coideal", "irreducible of dimension " + std::to_string(r.dim));
            std::vector<std::vector<Vec>> f(r.dim, std::vector<Vec>(r.dim, Vec(n)));
            for (int x = 0; x < n; ++x)
                for (int i = 0; i < r.dim; ++i)
                    for (int j = 0; j < r.dim; ++j) f[i][j][x] = r.rho[x](i, j);
            Block b;
            for (int i = 0; i < r.dim; ++i)
                for (int j = 0; j < r.dim; ++j) b.all.push_back(f[i][j]);
            if (r.dim == 2) {
                b.family = true;
                b.r1 = f[0];
                b.r2 = f[1];
            }
            blocks.push_back(std::move(b));
        }
    } else {
        for (int x = 0; x < n; ++x) blocks.push_back(Block{{unit_vec(n, x)}, false, {}, {}});
    }
    std::vector<Vec> cols;
    std::vector<int> offset;
    for (const auto& b : blocks) {
        offset.push_back(static_cast<int>(cols.size()));
        if (b.family) {
            for (const auto& v : b.r1) cols.push_back(v);
            for (const auto& v : b.r2) cols.push_back(v);
        } else {
            for (const auto& v : b.all) cols.push_back(v);
        }
    }
    auto binv = inverse(Mat::from_cols(cols, n));
    if (static_cast<int>(cols.size()) != n || !binv) throw Error("OracleLimit", "coideal", "isotypic blocks do not span H");
    int unit_block = -1, families = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].family) ++families;
        else if (Subspace(n, blocks[b].all).contains(h.unit)) unit_block = static_cast<int>(b);
    }
    if (unit_block < 0) throw Error("OracleLimit", "coideal", "unit is not a block");
    if (families > 1) throw Error("OracleLimit", "coideal", "more than one projective family");

    const FiniteGroup* cg = shape.kind == CoalgebraShape::Kind::functions ? &shape.group : nullptr;
    OracleResult res;
    std::vector<CoidealSubalgebra> found;
    auto try_gens = [&](const std::vector<Vec>& gens) {
        Subspace s(n, gens);
        if (!verify_coideal(h, s).ok()) return;
        found.push_back(make_coideal(hp, gens, cg));
    };
    size_t nb = blocks.size();
    std::vector<int> choice(nb, 0);
    std::vector<int> options(nb);
    for (size_t b = 0; b < nb; ++b) options[b] = static_cast<int>(b) == unit_block ? 1 : (blocks[b].family ? 3 : 2);
    for (size_t b = 0; b < nb; ++b) choice[b] = static_cast<int>(b) == unit_block ? 1 : 0;
    int M = std::lcm(4, h.cyc_order);
    while (true) {
        std::vector<Vec> fixed;
        int fam = -1;
        for (size_t b = 0; b < nb; ++b) {
            if (choice[b] == 1)
                for (const auto& v : blocks[b].all) fixed.push_back(v);
            if (choice[b] == 2) fam = static_cast<int>(b);
        }
        if (fam < 0) {
            try_gens(fixed);
        } else {
            ++res.families_checked;
            const auto& fb = blocks[fam];
            std::vector<Vec> at_inf = fixed;
            for (const auto& v : fb.r2) at_inf.push_back(v);
            try_gens(at_inf);
            // generators as polynomials c0 + t c1
            std::vector<std::array<Vec, 2>> gens;
            for (const auto& v : fixed) gens.push_back({v, Vec(n)});
            for (size_t j = 0; j < fb.r1.size(); ++j) gens.push_back({fb.r1[j], fb.r2[j]});
            Poly g;
            int d2 = static_cast<int>(fb.r1.size());
            for (const auto& x : gens)
                for (const auto& y : gens) {
                    std::array<Vec, 3> p{h.product(x[0], y[0]), add(h.product(x[0], y[1]), h.product(x[1], y[0])),
                                         h.product(x[1], y[1])};
                    std::array<Vec, 3> c{*binv * p[0], *binv * p[1], *binv * p[2]};
                    for (size_t b = 0; b < nb; ++b) {
                        if (choice[b] == 1) continue;
                        int off = offset[b];
                        if (static_cast<int>(b) == fam) {
                            for (int j = 0; j < d2; ++j) {
                                // β_j(t) - t α_j(t)
                                Poly cond(4);
                                for (int e = 0; e < 3; ++e) {
                                    cond[e] += c[e][off + d2 + j];
                                    cond[e + 1] -= c[e][off + j];
                                }
                                g = poly_gcd(g, cond);
                            }
                        } else {
                            int len = static_cast<int>(blocks[b].all.size());
                            for (int j = 0; j < len; ++j) g = poly_gcd(g, Poly{c[0][off + j], c[1][off + j], c[2][off + j]});
                        }
                    }
                }
            if (g.empty()) {
                res.unresolved.push_back("continuous family of candidate subalgebras");
            } else if (auto roots = poly_roots(g, M)) {
                for (const auto& t : *roots) {
                    std::vector<Vec> gs = fixed;
                    for (int j = 0; j < d2; ++j) gs.push_back(add(fb.r1[j], scale(fb.r2[j], t)));
                    try_gens(gs);
                }
            } else {
                res.unresolved.push_back("closure polynomial of degree " + std::to_string(degree(g)) + " without exact roots");
            }
        }
        size_t b = 0;
        while (b < nb && ++choice[b] >= options[b]) {
            choice[b] = static_cast<int>(b) == unit_block ? 1 : 0;
            ++b;
        }
        if (b == nb) break;
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.space < b.space; });
    for (auto& c : found)
        if (res.coideals.empty() || !(res.coideals.back().space == c.space)) res.coideals.push_back(std::move(c));
    return res;
}

} // namespace qgw
