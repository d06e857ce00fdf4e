#include <doctest.h>

#include <algorithm>
#include <set>

#include "qgw/groups.hpp"
#include "support.hpp"

using namespace qgw;

TEST_CASE("group constructions") {
    auto d4 = make_dihedral(4);
    CHECK(d4.order == 8);
    CHECK(d4.verify_axioms());
    CHECK(generators(d4, all_subgroups(d4).back()).size() == 2);
    auto v = make_klein();
    CHECK(v.order == 4);
    for (int x = 0; x < 4; ++x)
        if (x != v.identity) CHECK(v.element_order(x) == 2);
    CHECK(make_cyclic(1).order == 1);
    CHECK(make_group({GroupKind::cyclic, 5}).order == 5);
    CHECK_QGW_THROWS(make_dihedral(0), "BadParams");
    // r s = s r^{-1}
    CHECK(d4.mul(dih(4, 1, 0), dih(4, 0, 1)) == d4.mul(dih(4, 0, 1), dih(4, -1, 0)));
}

TEST_CASE("subgroup lattices") {
    auto d4 = make_dihedral(4);
    CHECK(all_subgroups(d4).size() == 10);
    CHECK(subgroup_conjugacy_classes(d4).size() == 8);
    auto v = make_klein();
    CHECK(all_subgroups(v).size() == 5);
    CHECK(subgroup_conjugacy_classes(v).size() == 5);
    std::set<size_t> orders;
    for (const auto& h : all_subgroups(make_cyclic(6))) orders.insert(h.size());
    CHECK(orders == std::set<size_t>{1, 2, 3, 6});
    CHECK(all_subgroups(make_cyclic(6)).size() == 4);
    for (const auto& h : all_subgroups(make_dihedral(6))) CHECK(is_subgroup(make_dihedral(6), h));
    CHECK(all_subgroups(make_dihedral(6)).size() == 16);
}

TEST_CASE("cosets and conjugation") {
    auto d6 = make_dihedral(6);
    Subgroup h = closure(d6, {dih(6, 3, 0), dih(6, 0, 1)});
    CHECK(h.size() == 4);
    CHECK(left_coset_reps(d6, h).size() == 3);
    Subgroup c = conjugate(d6, dih(6, 1, 0), h);
    CHECK(is_subgroup(d6, c));
    CHECK(c != h);
}

TEST_CASE("function and group algebra shapes") {
    auto fv = function_algebra(make_klein());
    CHECK(fv->dim == 4);
    CHECK(fv->is_commutative());
    CHECK(fv->is_cocommutative());
    auto cd3 = group_algebra(make_dihedral(3), 12);
    CHECK(cd3->dim == 6);
    CHECK(cd3->is_cocommutative());
    CHECK_FALSE(cd3->is_commutative());
    CHECK(function_algebra(make_cyclic(1))->dim == 1);
}

TEST_CASE("restriction to the Klein subgroup") {
    auto q2 = restriction_quotient(2);
    CHECK(verify_quotient(q2).ok());
    CHECK(rank(q2.map) == 4);
    CHECK(q2.source->dim == 4);
    auto q4 = restriction_quotient(4);
    CHECK(verify_quotient(q4).ok());
    CHECK(q4.source->dim - rank(q4.map) == 4);
    CHECK_QGW_THROWS(restriction_quotient(3), "NoKleinSubgroup");
    CHECK(klein_in_dihedral(4).size() == 4);
    CHECK(is_subgroup(make_dihedral(4), klein_in_dihedral(4)));
}

namespace {
// The subgroup m as a group in its own right, elements in sorted order.
FiniteGroup as_group(const FiniteGroup& g, const Subgroup& m) {
    FiniteGroup h;
    h.order = static_cast<int>(m.size());
    auto pos = [&](int x) { return static_cast<int>(std::lower_bound(m.begin(), m.end(), x) - m.begin()); };
    h.table.resize(static_cast<size_t>(h.order) * h.order);
    h.inverse.resize(h.order);
    h.labels.resize(h.order);
    for (int a = 0; a < h.order; ++a) {
        for (int b = 0; b < h.order; ++b) h.table[static_cast<size_t>(a) * h.order + b] = pos(g.mul(m[a], m[b]));
        h.inverse[a] = pos(g.inv(m[a]));
        h.labels[a] = g.labels[m[a]];
    }
    h.identity = pos(g.identity);
    return h;
}
} // namespace

TEST_CASE("restriction to any subgroup is a quotient") {
    auto g = make_dihedral(6);
    auto f = function_algebra(g, 12);
    for (const auto& m : all_subgroups(g)) {
        FiniteGroup h = as_group(g, m);
        REQUIRE(h.verify_axioms());
        auto q = restriction_to_subgroup(f, g, m, function_algebra(h, 12));
        CHECK(verify_quotient(q).ok());
        CHECK(rank(q.map) == static_cast<int>(m.size()));
    }
}
