#include <doctest.h>

#include "qgw/groups.hpp"
#include "qgw/hopf.hpp"
#include "qgw/twist.hpp"
#include "support.hpp"

using namespace qgw;

namespace {
bool all_pass(const AxiomReport& r) {
    for (const auto& it : r.items)
        if (!it.pass) return false;
    return !r.items.empty();
}
} // namespace

TEST_CASE("function and group algebras are Hopf *-algebras") {
    auto f = function_algebra(make_dihedral(4), 4);
    auto c = group_algebra(make_dihedral(4), 4);
    CHECK(all_pass(verify_hopf(*f)));
    CHECK(all_pass(verify_hopf(*c)));
    CHECK(f->is_commutative());
    CHECK_FALSE(f->is_cocommutative());
    CHECK(c->is_cocommutative());
    CHECK_FALSE(c->is_commutative());
}

TEST_CASE("corrupted multiplication is caught with a witness") {
    HopfAlgebraData bad = *function_algebra(make_dihedral(4), 4);
    bad.set_product(1, 1, bad.basis(2));
    auto rep = verify_hopf(bad);
    const auto* a = rep.find("associativity");
    REQUIRE(a);
    CHECK_FALSE(a->pass);
    CHECK_FALSE(a->witness.empty());
}

TEST_CASE("malformed tensors are rejected") {
    HopfAlgebraData bad = *function_algebra(make_cyclic(2));
    bad.mult.pop_back();
    CHECK_QGW_THROWS(verify_hopf(bad), "SchemaError");
}

TEST_CASE("convolution unit") {
    auto f = function_algebra(make_dihedral(3), 12);
    Functional phi{f, zero_vec(f->dim)};
    for (int i = 0; i < f->dim; ++i) phi.coeffs[i] = CycNum(i + 1, 7);
    CHECK(convolve(counit_functional(f), phi).coeffs == phi.coeffs);
    CHECK(convolve(phi, counit_functional(f)).coeffs == phi.coeffs);
    Functional other{function_algebra(make_dihedral(3), 12), phi.coeffs};
    CHECK_QGW_THROWS(convolve(phi, other), "AlgebraMismatch");
}

TEST_CASE("Haar states") {
    auto f = function_algebra(make_dihedral(4), 4);
    auto hf = haar_state(f);
    for (const auto& c : hf.h.coeffs) CHECK(c == CycNum(1, 8));
    CHECK(hf.faithful);
    auto g = make_dihedral(4);
    auto hc = haar_state(group_algebra(g, 4));
    for (int x = 0; x < g.order; ++x) CHECK(hc.h.coeffs[x] == CycNum(x == g.identity ? 1 : 0));
    auto tw = dihedral_minus_one(4);
    CHECK(haar_state(tw.algebra).h.coeffs == hf.h.coeffs);
}

TEST_CASE("Kac type") {
    CHECK(is_kac(function_algebra(make_dihedral(6), 12)));
    CHECK(is_kac(group_algebra(make_dihedral(6), 12)));
    CHECK(is_kac(dihedral_minus_one(4).algebra));
}

TEST_CASE("compact quantum group certificates") {
    for (int K : {2, 4, 6, 8}) {
        auto cert = check_cqg(function_algebra(make_dihedral(K), lcm4(K)));
        CHECK_MESSAGE(cert.ok(), "K=" << K);
        CHECK(cert.min_eigenvalue > positivity_threshold(128));
    }
    CHECK(check_cqg(dihedral_minus_one(4).algebra).ok());
}

TEST_CASE("inherited star on a noncommutative twist fails compatibility") {
    auto d = dihedral_minus_one(6);
    REQUIRE_FALSE(d.algebra->is_commutative());
    CHECK(check_cqg(d.algebra).ok());
    HopfAlgebraData bad = *d.algebra;
    bad.star = Mat::identity(bad.dim);
    auto cert = check_cqg(std::make_shared<const HopfAlgebraData>(bad));
    CHECK_FALSE(cert.star_compatible);
    CHECK_FALSE(cert.ok());
}

TEST_CASE("antipode as convolution inverse") {
    auto c = group_algebra(make_dihedral(5), 20);
    auto s = solve_antipode(*c);
    REQUIRE(s);
    CHECK(*s == c->antipode);
}
