#include <doctest.h>

#include "qgw/o2sym.hpp"
#include "support.hpp"

using namespace qgw;

namespace {
using Counts = std::map<std::string, int>;
}

TEST_CASE("branching rules") {
    CHECK(branch(IrrO2::V(3), {O2Subgroup::Kind::cyclic, 3}) == Counts{{"chi0", 2}});
    auto d2 = branch(IrrO2::V(1), {O2Subgroup::Kind::dihedral, 2});
    CHECK(d2 == Counts{{"c-+", 1}, {"c--", 1}});
    CHECK(branch(IrrO2::V(1), {O2Subgroup::Kind::dihedral, 5}) == Counts{{"V1", 1}});
    CHECK(branch(IrrO2::V(4), {O2Subgroup::Kind::dihedral, 0}) == Counts{{"V4", 1}});
    CHECK(branch(IrrO2::sgn(), {O2Subgroup::Kind::cyclic, 4}) == Counts{{"chi0", 1}});
    CHECK_QGW_THROWS(IrrO2::V(0), "BadParams");
}

TEST_CASE("branching agrees with exact decompositions") {
    for (int K : {4, 6, 8, 12}) CHECK(verify_branching(K).empty());
}

TEST_CASE("induced multiplicities") {
    int cut = 20;
    CHECK(induced_mult({O2Subgroup::Kind::cyclic, 1}, {}, cut) == regular_mult(cut));
    for (int k = 2; k <= 8; ++k) CHECK(induced_mult({O2Subgroup::Kind::cyclic, k}, {}, cut).of(IrrO2::V(1)) == 0);
    CHECK(induced_mult({O2Subgroup::Kind::dihedral, 2}, {InducingModule::Kind::m2, {}, 1}, cut) == regular_mult(cut));
    CHECK(induced_mult({O2Subgroup::Kind::dihedral, 2}, {InducingModule::Kind::m2, {}, 1}, 60) == regular_mult(60));
    auto mv = regular_mult(4);
    CHECK(mv.str() == "1,1;2,2,2,2");
    CHECK_QGW_THROWS(mv.of(IrrO2::V(5)), "BeyondCutoff");
    CHECK_QGW_THROWS(induced_mult({O2Subgroup::Kind::cyclic, 2}, {InducingModule::Kind::m2, {}, 1}, 8), "BadParams");
}

TEST_CASE("regular candidates") {
    const std::vector<std::string> two{"alpha^(1)", "beta^(2)_1/2"};
    CHECK(scan_regular_candidates(12, 6, 24) == two);
    CHECK(scan_regular_candidates(3, 1, 8) == two);
    CHECK_QGW_THROWS(scan_regular_candidates(12, 6, 10), "CutoffTooSmall");
}

TEST_CASE("embeddable table") {
    auto t = embeddable_table(8, 4);
    auto find = [&](const std::string& label) {
        for (const auto& v : t)
            if (v.label == label) return v;
        FAIL("missing " << label);
        return EmbeddableVerdict{};
    };
    CHECK_FALSE(find("alpha^(3)").embeddable);
    CHECK(find("alpha^(3)").reason == "commutative-onto-W");
    CHECK_FALSE(find("beta^(4)_2/2").embeddable);
    CHECK(find("beta^(4)_2/2").reason == "invariant-dimension");
    CHECK(find("beta^(6)_3/2").embeddable);
    CHECK(find("beta^(6)_3/2").reason == "tame");
    CHECK(find("alpha^(4)").reason == "quotient-type");
    CHECK(find("alpha^(inf)").embeddable);
    CHECK(find("beta^(inf)_1/2").embeddable);
}

TEST_CASE("tame actions of the infinite dihedral group") {
    CHECK(dinf_tame_mult(2, 1, 16) == regular_mult(16));
    for (auto [k, l] : {std::pair{4, 1}, {6, 3}, {6, 1}, {8, 1}, {8, 3}, {2, 1}})
        CHECK(dinf_tame_mult(k, l, 16) ==
              induced_mult({O2Subgroup::Kind::dihedral, k}, {InducingModule::Kind::m2, {}, l}, 16));
    CHECK_QGW_THROWS(dinf_tame_mult(3, 1, 16), "BadParams");
    CHECK_QGW_THROWS(dinf_tame_mult(4, 2, 16), "BadParams");
    CHECK(DInfWord::g1() * DInfWord::g1() == DInfWord{});
    CHECK(DInfWord::g2() * DInfWord::g2() == DInfWord{});
    DInfWord x = DInfWord::g1() * DInfWord::g2();
    CHECK(x * x.inverse() == DInfWord{});
    CHECK(dinf_contains(4, 1, DInfWord::g1()));
    CHECK_FALSE(dinf_contains(4, 1, x));
    CHECK(dinf_contains(4, 1, x * x));
}

TEST_CASE("quotient branching axioms") {
    CHECK(ane_consistency(1, 12));
    CHECK(ane_consistency(3, 24));
    CHECK_FALSE(ane_consistency(3, 24, true));
}
