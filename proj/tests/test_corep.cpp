#include <doctest.h>

#include "qgw/corep.hpp"
#include "qgw/ergodic.hpp"
#include "support.hpp"

using namespace qgw;

namespace {
int index_of(const std::vector<GroupRep>& irr, const std::string& label) {
    for (size_t i = 0; i < irr.size(); ++i)
        if (irr[i].label == label) return static_cast<int>(i);
    FAIL("no irreducible " << label);
    return -1;
}
std::vector<int> dims(const std::vector<GroupRep>& irr) {
    std::vector<int> d;
    for (const auto& r : irr) d.push_back(r.dim);
    return d;
}
} // namespace

TEST_CASE("irreducible representations in closed form") {
    auto count = [](const FiniteGroup& g, int d) {
        int n = 0;
        for (const auto& r : group_irreps(g)) n += r.dim == d;
        return n;
    };
    CHECK(count(make_dihedral(4), 1) == 4);
    CHECK(count(make_dihedral(4), 2) == 1);
    CHECK(count(make_klein(), 1) == 4);
    CHECK(count(make_dihedral(6), 1) == 4);
    CHECK(count(make_dihedral(6), 2) == 2);
    CHECK(count(make_dihedral(5), 1) == 2);
    for (const auto& g : {make_dihedral(6), make_dihedral(5), make_cyclic(6), make_klein()}) {
        int sq = 0;
        for (const auto& r : group_irreps(g)) {
            CHECK(is_representation(g, r));
            sq += r.dim * r.dim;
        }
        CHECK(sq == g.order);
    }
}

TEST_CASE("comodules over F(G)") {
    auto g = make_dihedral(6);
    auto f = function_algebra(g, 12);
    auto comods = irreducibles(g, GroupKind::dihedral, f);
    auto reps = group_irreps(g);
    REQUIRE(comods.size() == reps.size());
    for (size_t i = 0; i < comods.size(); ++i) {
        CHECK(verify_comodule(comods[i]).ok());
        CHECK(comodule_to_rep(comods[i], g).rho == reps[i].rho);
    }
    CHECK_QGW_THROWS(irreducibles(g, GroupKind::cyclic, f), "BadKind");
    auto irr = group_irreps(g);
    CHECK(decompose(regular_comodule(f), g) == dims(irr));
    auto t = decompose(trivial_comodule(f), g);
    for (size_t i = 0; i < t.size(); ++i) CHECK(t[i] == (irr[i].label == "triv" ? 1 : 0));
    auto v1 = rep_to_comodule(f, irr[index_of(irr, "V1")]);
    auto vv = decompose(tensor_comodule(v1, v1), g);
    CHECK(vv[index_of(irr, "triv")] == 1);
    CHECK(verify_comodule(tensor_comodule(v1, v1)).ok());
}

TEST_CASE("regular comodule of F(D_4) follows Peter-Weyl") {
    auto g = make_dihedral(4);
    CHECK(decompose(regular_comodule(function_algebra(g, 4)), g) == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("intertwiner and character decompositions agree") {
    for (const auto& g : {make_dihedral(4), make_dihedral(6), make_dihedral(8), make_cyclic(5)}) {
        auto irr = group_irreps(g);
        for (size_t a = 0; a < irr.size(); ++a)
            for (size_t b = a; b < irr.size(); ++b) {
                std::vector<Mat> rho(g.order);
                for (int x = 0; x < g.order; ++x) {
                    const Mat &p = irr[a].rho[x], &q = irr[b].rho[x];
                    Mat s(p.rows() * q.rows(), p.cols() * q.cols());
                    for (int i = 0; i < p.rows(); ++i)
                        for (int j = 0; j < p.cols(); ++j)
                            for (int k = 0; k < q.rows(); ++k)
                                for (int l = 0; l < q.cols(); ++l) s(i * q.rows() + k, j * q.cols() + l) = p(i, j) * q(k, l);
                    rho[x] = s;
                }
                CHECK(decompose_rep(g, rho) == decompose_by_characters(g, rho));
            }
    }
}

TEST_CASE("induction") {
    auto d4 = make_dihedral(4);
    Subgroup c4 = closure(d4, {dih(4, 1, 0)});
    auto a = induce(d4, c4, trivial_module(d4, c4));
    CHECK(a.dim == 2);
    CHECK(verify_module_algebra(a).ok());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(a.product(unit_vec(2, i), unit_vec(2, j)) == a.product(unit_vec(2, j), unit_vec(2, i)));
    auto p = dihedral_m2_rep(4, 2, 1, 1);
    REQUIRE(compute_multiplier(d4, p));
    auto m2 = adjoint_module(d4, p);
    CHECK(verify_module_algebra(m2).ok());
    auto b = induce(d4, p.domain, m2);
    CHECK(b.dim == 8);
    CHECK(verify_module_algebra(b).ok());
    auto whole = all_subgroups(d4).back();
    auto r = beta_action(4, 4, 1).realization;
    auto same = induce(d4, whole, r);
    CHECK(same.dim == r.dim);
    CHECK(module_multiplicities(same) == module_multiplicities(r));
    CHECK_QGW_THROWS(induce(d4, Subgroup{0, 1}, trivial_module(d4, Subgroup{0, 1})), "NotSubgroup");
}

TEST_CASE("Frobenius reciprocity pairs") {
    auto d8 = make_dihedral(8);
    auto irr = group_irreps(d8);
    const auto& v1 = irr[index_of(irr, "V1")];
    Subgroup c8 = closure(d8, {dih(8, 1, 0)});
    auto f1 = frobenius_dims(d8, v1, c8, trivial_module(d8, c8));
    CHECK(f1.lhs == 0);
    CHECK(f1.rhs == 0);
    auto p = dihedral_m2_rep(8, 2, 0, 1);
    REQUIRE(compute_multiplier(d8, p));
    auto w = adjoint_module(d8, p);
    auto f2 = frobenius_dims(d8, irr[index_of(irr, "sgn")], p.domain, w);
    CHECK(f2.lhs == 1);
    CHECK(f2.rhs == 1);
    auto f3 = frobenius_dims(d8, v1, p.domain, w);
    CHECK(f3.lhs == 2);
    CHECK(f3.rhs == 2);
}

TEST_CASE("module and comodule algebras") {
    auto g = make_dihedral(4);
    auto f = function_algebra(g, 4);
    for (const auto& act : classify_ergodic(4, false).raw) {
        auto ca = module_to_comodule(act.realization, f);
        CHECK(verify_comodule_algebra(ca).ok());
        auto back = comodule_to_module(ca, g);
        CHECK(back.action_list() == act.realization.action_list());
        CHECK(comodule_multiplicities(ca, g) == module_multiplicities(act.realization));
    }
}

TEST_CASE("transport along the Klein cocycle") {
    for (int K : {4, 6}) {
        auto d = dihedral_minus_one(K);
        auto g = make_dihedral(K);
        auto reg = subalgebra_comodule(d.classical, Subspace(d.classical->dim, [&] {
                                           std::vector<Vec> e;
                                           for (int i = 0; i < d.classical->dim; ++i) e.push_back(d.classical->basis(i));
                                           return e;
                                       }()).basis());
        auto t = transport(reg, d.cocycle, d.algebra);
        CHECK(verify_comodule_algebra(t).ok());
        CHECK(comodule_multiplicities(t, g) == dims(group_irreps(g)));
        auto same = transport(reg, trivial_cocycle(d.classical), d.classical);
        for (int i = 0; i < reg.dim; ++i)
            for (int j = 0; j < reg.dim; ++j)
                CHECK(same.product(unit_vec(reg.dim, i), unit_vec(reg.dim, j)) ==
                      reg.product(unit_vec(reg.dim, i), unit_vec(reg.dim, j)));
    }
}
