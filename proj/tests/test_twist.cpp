#include <doctest.h>

#include "qgw/twist.hpp"
#include "support.hpp"

using namespace qgw;

namespace {
bool same_products(const HopfAlgebraData& a, const HopfAlgebraData& b) {
    if (a.dim != b.dim) return false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
    return true;
}
bool item(const AxiomReport& r, const char* name) {
    const auto* it = r.find(name);
    REQUIRE(it);
    return it->pass;
}
} // namespace

TEST_CASE("Klein cocycles") {
    auto triv = klein_cocycle(false);
    CHECK(verify_cocycle(triv).ok());
    CHECK_FALSE(asymmetry_witness(triv));
    auto lam = klein_cocycle(true);
    auto rep = verify_cocycle(lam);
    CHECK(rep.ok());
    CHECK(item(rep, "cocycle_identity"));
    CHECK(item(rep, "convolution_inverse"));
    CHECK(item(rep, "normalization"));
    auto w = asymmetry_witness(lam);
    REQUIRE(w);
    CHECK(lam.table(w->first, w->second) != lam.table(w->second, w->first));
}

TEST_CASE("trivial twist is the identity") {
    auto klein = klein_cocycle(false);
    auto h = twist(klein.parent, klein);
    CHECK(same_products(*h, *klein.parent));
    auto f = function_algebra(make_dihedral(4), 4);
    auto tf = twist(f, trivial_cocycle(f));
    CHECK(same_products(*tf, *f));
    CHECK(tf->antipode == f->antipode);
}

TEST_CASE("twisting a group algebra") {
    // on group-likes a•b = λ(a,b) ab λ^{-1}(a,b) = ab
    auto lam = klein_cocycle(true);
    auto h = twist(lam.parent, lam);
    CHECK(h->dim == 4);
    CHECK(h->is_commutative());
    CHECK(same_products(*h, *lam.parent));
    CHECK(check_cqg(h).ok());
    // the one-sided deformation λ(g,h) gh is the noncommutative one
    auto w = asymmetry_witness(lam);
    REQUIRE(w);
    CHECK(lam.table(w->first, w->second) * lam.inverse_table(w->second, w->first) != CycNum(1));
}

TEST_CASE("twisting back by the inverse cocycle") {
    auto d = dihedral_minus_one(6);
    auto back = twist(d.algebra, inverse_cocycle(d.cocycle, d.algebra));
    CHECK(same_products(*back, *d.classical));
}

TEST_CASE("pullbacks") {
    auto q = restriction_quotient(4);
    auto pt = pullback(klein_cocycle(false, 4), q);
    CHECK(pt.table == trivial_cocycle(q.source).table);
    auto pl = pullback(klein_cocycle(true, 4), q);
    CHECK(verify_cocycle(pl).ok());
    auto id = pullback(klein_cocycle(true, 4), {klein_cocycle(true, 4).parent, klein_cocycle(true, 4).parent,
                                                Mat::identity(4)});
    CHECK(id.table == klein_cocycle(true, 4).table);
}

TEST_CASE("the twisted dihedral algebras") {
    auto d4 = dihedral_minus_one(4);
    CHECK(d4.algebra->dim == 8);
    CHECK(check_cqg(d4.algebra).ok());
    CHECK(is_kac(d4.algebra));
    CHECK_FALSE(d4.algebra->is_cocommutative());
    // the twist by the Klein cocycle leaves F(D_4) commutative
    CHECK(d4.algebra->is_commutative());
    CHECK(d4.report.inherited_star_ok);
    auto d2 = dihedral_minus_one(2);
    CHECK(d2.algebra->dim == 4);
    CHECK(d2.algebra->is_commutative());
    for (int K : {6, 8}) {
        auto d = dihedral_minus_one(K);
        CHECK_FALSE(d.algebra->is_commutative());
        CHECK(check_cqg(d.algebra).ok());
        CHECK(is_kac(d.algebra));
    }
    CHECK_QGW_THROWS(dihedral_minus_one(3), "NoKleinSubgroup");
}

TEST_CASE("O(2)_-1 relations") {
    for (int K : {4, 8}) CHECK(check_o2_relations(dihedral_minus_one(K).y).ok());
    // on F(D_4) the products y11 y12 vanish pointwise, so anticommutation holds
    auto f4 = function_algebra(make_dihedral(4), 4);
    CHECK(item(check_o2_relations(dihedral_generators(f4, 4)), "anticommutation"));
    auto f8 = function_algebra(make_dihedral(8), 8);
    auto rep = check_o2_relations(dihedral_generators(f8, 8));
    CHECK_FALSE(item(rep, "anticommutation"));
    CHECK(item(rep, "commutation"));
    CHECK(item(rep, "orthogonality"));
}

TEST_CASE("dihedral matrices are orthogonal") {
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 2; ++b) {
            auto m = dihedral_matrix(8, a, b);
            CHECK(m[0][0] * m[0][0] + m[1][0] * m[1][0] == CycNum(1));
            CHECK(m[0][0] * m[0][1] + m[1][0] * m[1][1] == CycNum(0));
        }
}
