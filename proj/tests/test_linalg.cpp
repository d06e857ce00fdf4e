#include <doctest.h>

#include <random>

#include "qgw/linalg.hpp"
#include "support.hpp"

using namespace qgw;

TEST_CASE("echelon, nullspace and solve") {
    Mat m = Mat::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(m * ns[0]));
    auto x = solve(m, {CycNum(4), CycNum(8), CycNum(2)});
    REQUIRE(x);
    CHECK(m * *x == Vec{CycNum(4), CycNum(8), CycNum(2)});
    CHECK_FALSE(solve(m, {CycNum(1), CycNum(0), CycNum(0)}));
    CHECK_FALSE(inverse(m));
}

TEST_CASE("inverse and determinant over Q(i)") {
    CycNum i = CycNum::zeta(4);
    Mat p = Mat::from_rows({{1, 1}, {i, -i}}, 2);
    CHECK(det(p) == CycNum(-2) * i);
    auto q = inverse(p);
    REQUIRE(q);
    CHECK(p * *q == Mat::identity(2));
}

TEST_CASE("subspace canonical form") {
    Subspace a(3, {{1, 1, 0}, {0, 1, 1}});
    Subspace b(3, {{1, 2, 1}, {1, 0, -1}});
    CHECK(a == b);
    CHECK(a.contains({2, 3, 1}));
    CHECK_FALSE(a.contains({1, 0, 0}));
    auto c = a.coords({2, 3, 1});
    Vec back = zero_vec(3);
    for (int k = 0; k < a.dim(); ++k) axpy(back, c[k], a.basis()[k]);
    CHECK(back == Vec{2, 3, 1});
    CHECK(Subspace(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).contains_space(a));
}

TEST_CASE("hermitian eigenvalues") {
    Mat h = Mat::from_rows({{2, 1}, {1, 2}}, 2);
    CHECK(is_hermitian(h));
    Real lam = min_eigenvalue_hermitian(h, 128);
    CHECK(abs(lam - 1) < Real(1e-30));
    CycNum i = CycNum::zeta(4);
    Mat g = Mat::from_rows({{1, i}, {-i, 1}}, 2);
    CHECK(is_hermitian(g));
    CHECK(abs(min_eigenvalue_hermitian(g, 128)) < Real(1e-30));
    CHECK_FALSE(is_hermitian(Mat::from_rows({{1, i}, {i, 1}}, 2)));
}

TEST_CASE("random systems solve exactly") {
    std::mt19937_64 rng(qgw_test::seed + 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    CycNum w = CycNum::zeta(8);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 4;
        Mat m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = CycNum(coef(rng)) + CycNum(coef(rng)) * w;
        Vec x(n);
        for (auto& e : x) e = CycNum(coef(rng), 2);
        Vec b = m * x;
        auto y = solve(m, b);
        REQUIRE(y);
        CHECK(m * *y == b);
        if (auto inv = inverse(m)) CHECK(*inv * m == Mat::identity(n));
        else CHECK(det(m).is_zero());
    }
}
