#include "qgw/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qgw/error.hpp"

namespace qgw {

int lcm4(int K) { return std::lcm(4, K); }

bool FiniteGroup::verify_axioms() const {
    int n = order;
    for (int a = 0; a < n; ++a) {
        if (mul(identity, a) != a || mul(a, identity) != a) return false;
        if (mul(a, inverse[a]) != identity || mul(inverse[a], a) != identity) return false;
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    }
    std::set<std::string> l(labels.begin(), labels.end());
    return static_cast<int>(l.size()) == n;
}

int FiniteGroup::element_order(int a) const {
    int k = 1, x = a;
    while (x != identity) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

namespace {

void fill_inverse(FiniteGroup& g) {
    g.inverse.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.mul(a, b) == g.identity) g.inverse[a] = b;
}

std::string power_label(const std::string& gen, int p) {
    if (p == 0) return "";
    if (p == 1) return gen;
    return gen + "^" + std::to_string(p);
}

} // namespace

FiniteGroup make_dihedral(int K) {
    if (K < 1) throw Error("BadParams", "groups", "dihedral K must be >= 1");
    FiniteGroup g;
    g.order = 2 * K;
    g.spec = {GroupKind::dihedral, K};
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            int a = x % K, b = x / K, c = y % K, d = y / K;
            g.table[static_cast<size_t>(x) * g.order + y] = dih(K, b ? a - c : a + c, b + d);
        }
    g.labels.resize(g.order);
    for (int x = 0; x < g.order; ++x) {
        std::string l = power_label("r", x % K) + (x / K ? "s" : "");
        g.labels[x] = l.empty() ? "e" : l;
    }
    fill_inverse(g);
    return g;
}

FiniteGroup make_cyclic(int k) {
    if (k < 1) throw Error("BadParams", "groups", "cyclic k must be >= 1");
    FiniteGroup g;
    g.order = k;
    g.spec = {GroupKind::cyclic, k};
    g.table.resize(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) g.table[static_cast<size_t>(a) * k + b] = (a + b) % k;
    g.labels.resize(k);
    for (int a = 0; a < k; ++a) g.labels[a] = a == 0 ? "e" : power_label("g", a);
    fill_inverse(g);
    return g;
}

FiniteGroup make_klein() {
    FiniteGroup g;
    g.order = 4;
    g.spec = {GroupKind::klein, 4};
    g.table.resize(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) g.table[a * 4 + b] = a ^ b;
    g.labels = {"(0,0)", "(1,0)", "(0,1)", "(1,1)"};
    fill_inverse(g);
    return g;
}

FiniteGroup make_group(GroupSpec spec) {
    switch (spec.kind) {
    case GroupKind::dihedral: return make_dihedral(spec.n);
    case GroupKind::cyclic: return make_cyclic(spec.n);
    case GroupKind::klein: return make_klein();
    }
    throw Error("BadKind", "groups", "unknown group kind");
}

Subgroup closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(g.order, false);
    std::vector<int> elems{g.identity};
    in[g.identity] = true;
    for (size_t i = 0; i < elems.size(); ++i)
        for (int s : gens) {
            int x = g.mul(elems[i], s);
            if (!in[x]) {
                in[x] = true;
                elems.push_back(x);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
    std::vector<bool> in(g.order, false);
    for (int x : h) in[x] = true;
    if (!in[g.identity]) return false;
    for (int a : h)
        for (int b : h)
            if (!in[g.mul(a, g.inv(b))]) return false;
    return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    if (g.order > 10000) throw Error("BadParams", "groups", "group too large for subgroup enumeration");
    std::set<Subgroup> seen;
    std::vector<Subgroup> queue;
    for (int x = 0; x < g.order; ++x) {
        Subgroup c = closure(g, {x});
        if (seen.insert(c).second) queue.push_back(c);
    }
    for (size_t i = 0; i < queue.size(); ++i)
        for (int x = 0; x < g.order; ++x) {
            if (std::binary_search(queue[i].begin(), queue[i].end(), x)) continue;
            std::vector<int> gens = queue[i];
            gens.push_back(x);
            Subgroup c = closure(g, gens);
            if (seen.insert(c).second) queue.push_back(c);
        }
    std::vector<Subgroup> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

Subgroup conjugate(const FiniteGroup& g, int x, const Subgroup& h) {
    Subgroup c;
    c.reserve(h.size());
    for (int y : h) c.push_back(g.conj(x, y));
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<std::pair<Subgroup, int>> subgroup_conjugacy_classes(const FiniteGroup& g) {
    auto subs = all_subgroups(g);
    std::set<Subgroup> done;
    std::vector<std::pair<Subgroup, int>> out;
    for (const auto& s : subs) {
        if (done.count(s)) continue;
        std::set<Subgroup> cls;
        for (int x = 0; x < g.order; ++x) cls.insert(conjugate(g, x, s));
        for (const auto& c : cls) done.insert(c);
        out.emplace_back(*cls.begin(), static_cast<int>(cls.size()));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
    });
    return out;
}

std::vector<int> generators(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> gens;
    Subgroup cur = closure(g, gens);
    // prefer elements of large order, then small index
    std::vector<int> cand(h.begin(), h.end());
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
    for (int x : cand) {
        if (cur.size() == h.size()) break;
        if (std::binary_search(cur.begin(), cur.end(), x)) continue;
        gens.push_back(x);
        cur = closure(g, gens);
    }
    return gens;
}

std::vector<int> left_coset_reps(const FiniteGroup& g, const Subgroup& h) {
    std::vector<bool> covered(g.order, false);
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (int y : h) covered[g.mul(x, y)] = true;
    }
    return reps;
}

HopfPtr function_algebra(const FiniteGroup& g, int cyc_order) {
    auto h = std::make_shared<HopfAlgebraData>();
    int n = g.order;
    h->dim = n;
    h->cyc_order = cyc_order;
    for (int x = 0; x < n; ++x) h->labels.push_back("d[" + g.labels[x] + "]");
    h->mult.assign(static_cast<size_t>(n) * n, {});
    for (int x = 0; x < n; ++x) h->mult[static_cast<size_t>(x) * n + x].push_back({x, CycNum(1)});
    h->comult.assign(n, {});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) h->comult[x].push_back({y, g.mul(g.inv(y), x), CycNum(1)});
    h->unit.assign(n, CycNum(1));
    h->counit = unit_vec(n, g.identity);
    h->antipode = Mat(n, n);
    for (int x = 0; x < n; ++x) h->antipode(g.inv(x), x) = CycNum(1);
    h->star = Mat::identity(n);
    return h;
}

HopfPtr group_algebra(const FiniteGroup& g, int cyc_order) {
    auto h = std::make_shared<HopfAlgebraData>();
    int n = g.order;
    h->dim = n;
    h->cyc_order = cyc_order;
    h->labels = g.labels;
    h->mult.assign(static_cast<size_t>(n) * n, {});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) h->mult[static_cast<size_t>(x) * n + y].push_back({g.mul(x, y), CycNum(1)});
    h->comult.assign(n, {});
    for (int x = 0; x < n; ++x) h->comult[x].push_back({x, x, CycNum(1)});
    h->unit = unit_vec(n, g.identity);
    h->counit.assign(n, CycNum(1));
    h->antipode = Mat(n, n);
    h->star = Mat(n, n);
    for (int x = 0; x < n; ++x) {
        h->antipode(g.inv(x), x) = CycNum(1);
        h->star(g.inv(x), x) = CycNum(1);
    }
    return h;
}

AxiomReport verify_quotient(const HopfQuotient& q) {
    const auto& s = *q.source;
    const auto& t = *q.target;
    AxiomReport rep;
    const Mat& p = q.map;
    auto img = [&](const Vec& x) { return p * x; };
    rep.items.push_back({"surjective", rank(p) == t.dim, {}});

    AxiomResult alg{"algebra_hom", true, {}};
    if (img(s.unit) != t.unit) alg = {"algebra_hom", false, "unit"};
    std::vector<Vec> pb(s.dim);
    for (int i = 0; i < s.dim; ++i) pb[i] = p.col(i);
    for (int i = 0; i < s.dim && alg.pass; ++i)
        for (int j = 0; j < s.dim && alg.pass; ++j)
            if (img(s.basis_product(i, j)) != t.product(pb[i], pb[j]))
                alg = {"algebra_hom", false, std::to_string(i) + "," + std::to_string(j)};
    rep.items.push_back(alg);

    AxiomResult co{"comult", true, {}};
    Mat pt = p.transpose();
    for (int i = 0; i < s.dim && co.pass; ++i) {
        Mat lhs = p * s.coproduct(s.basis(i)) * pt;
        if (lhs != t.coproduct(pb[i])) co = {"comult", false, std::to_string(i)};
    }
    rep.items.push_back(co);

    AxiomResult cu{"counit", true, {}};
    for (int i = 0; i < s.dim && cu.pass; ++i)
        if (t.counit_of(pb[i]) != s.counit[i]) cu = {"counit", false, std::to_string(i)};
    rep.items.push_back(cu);

    AxiomResult an{"antipode", true, {}};
    for (int i = 0; i < s.dim && an.pass; ++i)
        if (img(s.antipode.col(i)) != t.apply_antipode(pb[i])) an = {"antipode", false, std::to_string(i)};
    rep.items.push_back(an);

    AxiomResult st{"star", true, {}};
    for (int i = 0; i < s.dim && st.pass; ++i)
        if (img(s.apply_star(s.basis(i))) != t.apply_star(pb[i])) st = {"star", false, std::to_string(i)};
    rep.items.push_back(st);
    return rep;
}

Subgroup klein_in_dihedral(int K) {
    if (K % 2 != 0) throw Error("NoKleinSubgroup", "groups", "K=" + std::to_string(K) + " is odd");
    Subgroup v{dih(K, 0, 0), dih(K, K / 2, 0), dih(K, 0, 1), dih(K, K / 2, 1)};
    std::sort(v.begin(), v.end());
    return v;
}

int klein_character(int c0, int c1, int v0, int v1) {
    int e = (c0 * v0 + c1 * (v0 + v1)) & 1;
    return e ? -1 : 1;
}

HopfQuotient restriction_quotient(int K) {
    if (K % 2 != 0) throw Error("NoKleinSubgroup", "groups", "K=" + std::to_string(K) + " is odd");
    FiniteGroup g = make_dihedral(K);
    int N = lcm4(K);
    HopfQuotient q;
    q.source = function_algebra(g, N);
    q.target = group_algebra(make_klein(), N);
    q.map = Mat(4, g.order);
    // V4 coordinates: z = r^{K/2} -> (1,0), s -> (0,1)
    for (int v0 = 0; v0 < 2; ++v0)
        for (int v1 = 0; v1 < 2; ++v1) {
            int x = dih(K, v0 * (K / 2), v1);
            for (int c0 = 0; c0 < 2; ++c0)
                for (int c1 = 0; c1 < 2; ++c1)
                    q.map(c0 + 2 * c1, x) = CycNum(klein_character(c0, c1, v0, v1), 4);
        }
    return q;
}

HopfQuotient restriction_to_subgroup(const HopfPtr& source, const FiniteGroup& g, const Subgroup& m,
                                     HopfPtr target) {
    HopfQuotient q;
    q.source = source;
    q.target = std::move(target);
    q.map = Mat(static_cast<int>(m.size()), g.order);
    for (size_t i = 0; i < m.size(); ++i) q.map(static_cast<int>(i), m[i]) = CycNum(1);
    return q;
}

} // namespace qgw
