#include <doctest.h>

#include <random>

#include "qgw/cyclo.hpp"
#include "support.hpp"

using namespace qgw;

TEST_CASE("cyclotomic arithmetic") {
    CHECK(CycNum::zeta(4) * CycNum::zeta(4) == CycNum(-1));
    CHECK(CycNum::zeta(8).conj() == CycNum::zeta(8, 7));
    CHECK((CycNum(1) + CycNum::zeta(3) + CycNum::zeta(3, 2)).is_zero());
    CHECK(CycNum(3, 6) == CycNum(1, 2));
    CHECK((CycNum::zeta(12, 5) * CycNum::zeta(12, 7)).is_one());
    CHECK(CycNum::zeta(6) * CycNum::zeta(6).inv() == CycNum(1));
    CHECK_QGW_THROWS(CycNum(0).inv(), "DivisionByZero");
}

TEST_CASE("mixed orders promote to the common field") {
    CycNum a = CycNum::zeta(4) + CycNum::zeta(3);
    CHECK(a.order() == 12);
    CycNum i = CycNum::zeta(12, 3);
    CHECK(i == CycNum::zeta(4));
    CHECK(i.demote(4) == CycNum::zeta(4));
    CHECK_FALSE(CycNum::zeta(12).representable_at(4));
    CHECK_QGW_THROWS(CycNum::zeta(12).demote(4), "NotRepresentable");
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(24) == 8);
    CHECK(cyclotomic_poly(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(8) == std::vector<long>{1, 0, 0, 0, 1});
}

TEST_CASE("order limit") {
    int saved = order_limit();
    set_order_limit(16);
    CHECK_QGW_THROWS(CycNum::zeta(24), "OrderLimit");
    set_order_limit(saved);
    CHECK(CycNum::zeta(24).order() == 24);
}

TEST_CASE("numerical embedding") {
    auto z4 = cyc_embed(CycNum::zeta(4), 128);
    CHECK(abs(z4.re) < Real(1e-15));
    CHECK(abs(z4.im - 1) < Real(1e-15));
    auto z6 = cyc_embed(CycNum::zeta(6), 128);
    CHECK(abs(z6.re - Real(0.5)) < Real(1e-15));
    CHECK(abs(z6.im - sqrt(Real(3)) / 2) < Real(1e-15));
    CHECK(to_double(CycNum(-1)) == -1.0);
    CHECK_QGW_THROWS(cyc_embed(CycNum(1), 32), "BadPrecision");
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(qgw_test::seed);
    std::uniform_int_distribution<long> coef(-5, 5);
    const int orders[] = {1, 3, 4, 8, 12, 24};
    auto random_elem = [&](int n) {
        CycNum x(0);
        for (int p = 0; p < n; ++p) x += CycNum(coef(rng), 1 + std::abs(coef(rng))) * CycNum::zeta(n, p);
        return x;
    };
    for (int trial = 0; trial < 60; ++trial) {
        int n = orders[trial % 6];
        CycNum a = random_elem(n), b = random_elem(n), c = random_elem(orders[(trial + 2) % 6]);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero()) CHECK(a * a.inv() == CycNum(1));
        auto e = cyc_embed(a * b, 128), ea = cyc_embed(a, 128), eb = cyc_embed(b, 128);
        CHECK(abs(e.re - (ea.re * eb.re - ea.im * eb.im)) < Real(1e-30));
    }
}
