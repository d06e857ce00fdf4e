#include <doctest.h>

#include <algorithm>
#include <set>

#include "qgw/coideal.hpp"
#include "support.hpp"

using namespace qgw;

namespace {
std::vector<Vec> all_basis(const HopfAlgebraData& h) {
    std::vector<Vec> e;
    for (int i = 0; i < h.dim; ++i) e.push_back(h.basis(i));
    return e;
}
HopfQuotient counit_quotient(const HopfPtr& h) {
    HopfQuotient q{h, function_algebra(make_cyclic(1), h->cyc_order), Mat(1, h->dim)};
    for (int i = 0; i < h->dim; ++i) q.map(0, i) = h->counit[i];
    return q;
}
HopfQuotient identity_quotient(const HopfPtr& h) { return {h, h, Mat::identity(h->dim)}; }
} // namespace

TEST_CASE("quotient-type coideals") {
    auto g = make_dihedral(6);
    auto f = function_algebra(g, 12);
    auto one = quotient_coideal(identity_quotient(f), &g);
    CHECK(one.dim() == 1);
    CHECK(one.space.contains(f->unit));
    auto all = quotient_coideal(counit_quotient(f), &g);
    CHECK(all.dim() == f->dim);
    for (const auto& [m, q] : restriction_quotients(dihedral_minus_one(6), g)) (void)m, (void)q;
    for (const auto& m : all_subgroups(g)) {
        Subspace comp(f->dim);
        for (int x = 0; x < g.order; ++x)
            if (!std::binary_search(m.begin(), m.end(), x)) comp.add(f->basis(x));
        auto q = quotient_by_ideal(f, comp);
        REQUIRE(verify_quotient(q).ok());
        auto c = quotient_coideal(q, &g);
        CHECK(c.certificates.ok());
        CHECK(c.dim() == 2 * 6 / static_cast<int>(m.size()));
        CHECK(c.commutative);
    }
}

TEST_CASE("coideal certificates") {
    auto g = make_dihedral(4);
    auto f = function_algebra(g, 4);
    Subspace bad(f->dim, {f->basis(0)});
    auto rep = verify_coideal(*f, bad);
    CHECK_FALSE(rep.find("unital")->pass);
    auto c = make_coideal(f, {f->unit, add(f->basis(0), f->basis(1))}, &g);
    CHECK_FALSE(c.certificates.ok());
    Subspace s(f->dim);
    CHECK(ideal_generated(*f, {f->basis(3)}).dim() == 1);
    CHECK(is_ideal(*f, Subspace(f->dim, {f->basis(3), f->basis(5)})));
}

TEST_CASE("ideals of a noncommutative algebra") {
    auto c = group_algebra(make_dihedral(3), 12);
    auto i = ideal_generated(*c, {sub(c->basis(dih(3, 1, 0)), c->unit)});
    CHECK(is_ideal(*c, i));
    auto q = quotient_by_ideal(c, i);
    CHECK(verify_quotient(q).ok());
    CHECK(q.target->dim == 2);
}

TEST_CASE("tame coideals from idempotent states") {
    auto d = dihedral_minus_one(4);
    auto g = make_dihedral(4);
    auto qs = group_algebra_quotients(d);
    REQUIRE_FALSE(qs.empty());
    bool intermediate = false;
    for (const auto& q : qs) {
        CHECK(verify_quotient(q.q).ok());
        auto subs = all_subgroups(q.gamma);
        auto [s_all, c_all] = tame_coideal(q, subs.back(), &g);
        CHECK(c_all.dim() == d.algebra->dim);
        auto [s_e, c_e] = tame_coideal(q, subs.front(), &g);
        CHECK(c_e.space == quotient_coideal(q.q, &g).space);
        CHECK(is_conditional_expectation(s_e, c_e));
        for (const auto& om : subs) {
            auto [s, c] = tame_coideal(q, om, &g);
            CHECK(c.certificates.ok());
            CHECK(is_conditional_expectation(s, c));
            if (c.dim() > 1 && c.dim() < d.algebra->dim && om.size() > 1 && static_cast<int>(om.size()) < q.gamma.order)
                intermediate = true;
        }
        if (q.gamma.order == 4) {
            Subgroup not_sub{q.gamma.identity == 0 ? 1 : 0};
            CHECK_QGW_THROWS(tame_coideal(q, not_sub, &g), "NotSubgroup");
        }
    }
    CHECK(intermediate);
}

TEST_CASE("embeddable classification at K = 4") {
    auto cl = embeddable_classification(4, false);
    CHECK(cl.family_labels() == std::set<std::string>{"alpha^(1)", "alpha^(2)", "alpha^(4)", "beta^(1)_0",
                                                     "beta^(2)_0", "beta^(4)_0"});
    CHECK(cl.count() == 6);
    CHECK(cl.entries.size() == 8);
    CHECK(cl.findings.empty());
    auto tw = embeddable_classification(4, true);
    CHECK(tw.family_labels() == std::set<std::string>{"alpha^(2)", "alpha^(4)", "beta^(1)_0", "beta^(2)_0",
                                                     "beta^(2)_1/2", "beta^(4)_0", "beta^(4)_1/2"});
    CHECK(tw.count() == 7);
    CHECK(tw.findings.empty());
    for (const auto& e : tw.entries) CHECK(e.coideal.certificates.ok());
    CHECK_QGW_THROWS(embeddable_classification(3, true), "BadParams");
}

TEST_CASE("count comparison") {
    auto rows = count_comparison({2, 4, 6});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].classical == 4);
    CHECK(rows[0].twisted == 4);
    CHECK(rows[1].classical == 6);
    CHECK(rows[1].twisted == 7);
    CHECK(rows[2].classical == 8);
    CHECK(rows[2].twisted == 9);
    CHECK(rows[2].tau == 4);
    CHECK_FALSE(rows[0].differ());
    CHECK(rows[1].differ());
    auto par = count_comparison({6, 2, 4}, 3);
    CHECK(par[0].twisted_raw == rows[2].twisted_raw);
    CHECK(par[1].classical_raw == rows[0].classical_raw);
    CHECK(par[2].twisted == rows[1].twisted);
    CHECK_QGW_THROWS(count_comparison({5}), "BadParams");
    std::vector<CountRow> lin{{2, 4, 4, 0, 0, 2}, {6, 8, 16, 0, 0, 4}};
    CHECK(loglog_slope(lin, false) == doctest::Approx(1.0));
    CHECK(loglog_slope(lin, true) == doctest::Approx(2.0));
}

TEST_CASE("coideal oracle on classical algebras") {
    auto v = make_klein();
    auto rv = brute_force_coideals(function_algebra(v, 4), {CoalgebraShape::Kind::functions, v});
    CHECK(rv.coideals.size() == 5);
    CHECK(rv.unresolved.empty());
    auto c4 = make_cyclic(4);
    auto cz4 = group_algebra(c4, 4);
    auto rc = brute_force_coideals(cz4, {CoalgebraShape::Kind::group_likes, c4});
    std::set<Subspace> expect;
    for (const auto& l : all_subgroups(c4)) {
        std::vector<Vec> gens;
        for (int x : l) gens.push_back(cz4->basis(x));
        expect.insert(Subspace(4, gens));
    }
    std::set<Subspace> got;
    for (const auto& c : rc.coideals) got.insert(c.space);
    CHECK(got == expect);
    auto d2 = make_dihedral(2);
    CHECK(brute_force_coideals(function_algebra(d2, 4), {CoalgebraShape::Kind::functions, d2}).coideals.size() == 5);
    auto d4 = make_dihedral(4);
    auto r4 = brute_force_coideals(function_algebra(d4, 4), {CoalgebraShape::Kind::functions, d4});
    CHECK(r4.coideals.size() == all_subgroups(d4).size());
    CHECK(r4.unresolved.empty());
    auto d6 = make_dihedral(6);
    CHECK_QGW_THROWS(brute_force_coideals(function_algebra(d6, 12), {CoalgebraShape::Kind::functions, d6}), "OracleLimit");
}

TEST_CASE("coideal oracle on the twisted algebras") {
    auto d = dihedral_minus_one(4);
    auto r = brute_force_coideals(d.algebra, {CoalgebraShape::Kind::functions, make_dihedral(4)});
    CHECK(r.unresolved.empty());
    CHECK(r.coideals.size() == 10);
    auto census = classify_ergodic(4);
    std::set<std::string> labels;
    for (const auto& c : r.coideals) {
        CHECK(c.certificates.ok());
        labels.insert(identify_coideal(c, census, &d));
    }
    CHECK(labels == embeddable_classification(census, true).labels());
    auto d2 = dihedral_minus_one(2);
    CHECK(brute_force_coideals(d2.algebra, {CoalgebraShape::Kind::functions, make_dihedral(2)}).coideals.size() == 5);
}
