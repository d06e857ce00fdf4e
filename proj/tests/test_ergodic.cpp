#include <doctest.h>

#include <set>

#include "qgw/ergodic.hpp"
#include "support.hpp"

using namespace qgw;

namespace {
std::set<std::string> labels(const std::vector<ErgodicActionData>& v) {
    std::set<std::string> s;
    for (const auto& a : v) s.insert(a.label);
    return s;
}
} // namespace

TEST_CASE("alpha actions") {
    auto a = alpha_action(6, 6);
    CHECK(a.realization.dim == 2);
    auto acts = a.realization.action_list();
    CHECK(acts[dih(6, 1, 0)] == Mat::identity(2));
    CHECK(acts[dih(6, 0, 1)] != Mat::identity(2));
    CHECK(acts[dih(6, 0, 1)] * acts[dih(6, 0, 1)] == Mat::identity(2));
    auto reg = alpha_action(4, 1);
    CHECK(reg.realization.dim == 8);
    CHECK(action_invariants(reg.realization).mult == std::vector<int>{1, 1, 1, 1, 2});
    auto e = is_ergodic(reg.realization);
    CHECK(e.ergodic);
    for (const auto& c : e.invariant_state) CHECK(c == CycNum(1, 8));
    auto a62 = alpha_action(6, 2);
    CHECK(a62.realization.dim == 6);
    CHECK(is_ergodic(a62.realization).ergodic);
    CHECK_QGW_THROWS(alpha_action(6, 4), "BadDivisor");
}

TEST_CASE("explicit alpha realization") {
    for (auto [K, k] : {std::pair{4, 1}, {6, 2}, {8, 4}, {6, 3}}) {
        auto x = alpha_explicit(K, k);
        CHECK(verify_module_algebra(x).ok());
        CHECK(is_ergodic(x).ergodic);
        CHECK(action_invariants(x) == action_invariants(alpha_action(K, k).realization));
    }
}

TEST_CASE("beta actions") {
    auto t = beta_action(5, 5, 0);
    CHECK(t.realization.dim == 1);
    auto b = beta_action(4, 2, 1);
    CHECK(b.realization.dim == 8);
    CHECK_FALSE(action_invariants(b.realization).commutative);
    auto e = is_ergodic(b.realization);
    CHECK(e.ergodic);
    CHECK(e.state_positive);
    CHECK(e.min_eigenvalue > positivity_threshold(128));
    auto b63 = beta_action(6, 3, 1);
    CHECK(b63.realization.dim == 8);
    CHECK(is_ergodic(b63.realization).ergodic);
    CHECK_QGW_THROWS(beta_action(4, 2, 2), "BadParams");
    CHECK_QGW_THROWS(beta_action(6, 4, 0), "BadDivisor");
}

TEST_CASE("ergodicity negative control") {
    ModuleAlgebra two = alpha_action(4, 4).realization;
    for (auto& [x, m] : two.action) m = Mat::identity(2);
    auto e = is_ergodic(two);
    CHECK_FALSE(e.ergodic);
    CHECK(e.fixed_dim == 2);
}

TEST_CASE("isomorphism test") {
    auto b = beta_action(4, 2, 1);
    auto self = are_isomorphic(b, b);
    CHECK(self.isomorphic);
    CHECK(is_equivariant_isomorphism(b.realization, b.realization, Mat::identity(8)));
    // the two Klein subgroups of D_4 are not conjugate
    CHECK_FALSE(are_isomorphic(beta_action(4, 2, 0, 0), beta_action(4, 2, 0, 1)).isomorphic);
    // r^2 s generates a subgroup conjugate to the one of s
    CHECK(are_isomorphic(beta_action(4, 1, 0, 0), beta_action(4, 1, 0, 2)).isomorphic);
    CHECK_FALSE(are_isomorphic(alpha_action(6, 2), beta_action(6, 2, 1)).isomorphic);
    auto bare = b;
    bare.provenance.reset();
    CHECK_QGW_THROWS(are_isomorphic(bare, b), "NeedsProvenance");
}

TEST_CASE("small censuses") {
    auto c1 = classify_ergodic(1);
    CHECK(labels(c1.raw) == std::set<std::string>{"alpha^(1)", "beta^(1)_0"});
    auto c2 = classify_ergodic(2);
    CHECK(labels(c2.standard) ==
          std::set<std::string>{"alpha^(1)", "alpha^(2)", "beta^(1)_0", "beta^(2)_0", "beta^(2)_1/2"});
    CHECK(c2.raw.size() == 6);
    CHECK(c2.invariants_injective);
}

TEST_CASE("census sizes") {
    // one alpha and 1 + ⌊k/2⌋ betas per divisor k
    auto standard_count = [](int K) {
        int n = 0;
        for (int k = 1; k <= K; ++k)
            if (K % k == 0) n += 2 + k / 2;
        return n;
    };
    const std::pair<int, int> raw[] = {{4, 12}, {6, 16}, {8, 21}};
    for (auto [K, r] : raw) {
        auto c = classify_ergodic(K);
        CHECK(static_cast<int>(c.standard.size()) == standard_count(K));
        CHECK(static_cast<int>(c.raw.size()) == r);
        CHECK(c.invariants_injective);
        for (const auto& a : c.raw) {
            CHECK(is_ergodic(a.realization).ergodic);
            CHECK(verify_module_algebra(a.realization).ok());
        }
    }
    CHECK(standard_count(6) == 13);
}
