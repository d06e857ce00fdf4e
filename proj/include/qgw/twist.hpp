#pragma once
#include <array>
#include <optional>
#include <string>
#include <utility>

#include "qgw/groups.hpp"
#include "qgw/hopf.hpp"

namespace qgw {

// Bilinear functional λ on H⊗H with its convolution inverse.
struct Cocycle {
    HopfPtr parent;
    Mat table;          // λ(b_i, b_j)
    Mat inverse_table;  // λ^{-1}(b_i, b_j)
};

Cocycle trivial_cocycle(const HopfPtr& h);
// On CZ2^2 in the group-like basis (a,b) -> index a + 2b.
Cocycle klein_cocycle(bool nontrivial, int cyc_order = 1);

// Items: convolution_inverse, normalization, cocycle_identity.
// Identity checked: λ(a1,b1) λ(a2 b2, c) = λ(b1,c1) λ(a, b2 c2).
AxiomReport verify_cocycle(const Cocycle& c);

// For a cocycle on an abelian group algebra: a pair (g,h) with
// λ(g,h) != λ(h,g).  Coboundaries on abelian groups are symmetric, so a
// witness certifies that the class is nontrivial.
std::optional<std::pair<int, int>> asymmetry_witness(const Cocycle& c);

Cocycle pullback(const Cocycle& l, const HopfQuotient& q, bool reverify = true);

// λ^{-1} seen as a cocycle on the twisted algebra; twisting by it undoes the twist.
Cocycle inverse_cocycle(const Cocycle& c, HopfPtr twisted_parent);

struct TwistReport {
    bool inherited_star_ok = true;
    std::string inherited_star_witness;
    bool antipode_solved = false;  // linear system rather than closed form
};

// a•b = λ(a1,b1) a2 b2 λ^{-1}(a3,b3).  Throws TwistFailure when no antipode exists.
HopfPtr twist(const HopfPtr& h, const Cocycle& c, TwistReport* report = nullptr);

struct GeneratorSet {
    HopfPtr parent;
    std::array<std::array<Vec, 2>, 2> y;
};

// y_jk(g) = entries of the standard 2x2 orthogonal matrix of g in D_K.
GeneratorSet dihedral_generators(const HopfPtr& fdk, int K);
// 2x2 orthogonal matrix of r^a s^b with entries in Q(ζ_N), N = lcm(4,K).
std::array<std::array<CycNum, 2>, 2> dihedral_matrix(int K, int a, int b);

struct DihedralMinusOne {
    HopfPtr classical;  // F(D_K)
    HopfPtr algebra;    // (D_K)_{-1}
    Cocycle cocycle;    // pulled back to F(D_K)
    GeneratorSet y;
    TwistReport report;
};

DihedralMinusOne dihedral_minus_one(int K);

// Items: anticommutation, commutation, orthogonality, comultiplication,
// counit, antipode, self_adjoint.
AxiomReport check_o2_relations(const GeneratorSet& y);

} // namespace qgw
