#pragma once
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qgw/corep.hpp"

namespace qgw {

enum class ActionFamily { alpha, beta };

// Inducing datum: subgroup plus the module algebra placed on it.
struct Provenance {
    Subgroup subgroup;
    bool dihedral = false;
    int shift = 0;  // reflection r^shift s generates the dihedral subgroup with the rotations
    std::optional<ProjectiveRep> m2;  // absent for the one-dimensional module
};

// dim, multiplicity vector, commutativity, centre dimension, centre multiplicities
struct ActionInvariants {
    int dim = 0;
    std::vector<int> mult;
    bool commutative = false;
    int center_dim = 0;
    std::vector<int> center_mult;
    auto operator<=>(const ActionInvariants&) const = default;
};

struct ErgodicActionData {
    std::string label;        // census label; a trailing ' marks the non-standard subgroup class
    std::string family_label;  // label without the variant mark
    ActionFamily family = ActionFamily::alpha;
    int K = 1, k = 1, l = 0;
    std::optional<Provenance> provenance;
    ModuleAlgebra realization;
    Vec invariant_state;
    ActionInvariants invariants;  // filled by classify_ergodic
};

std::string alpha_label(int k);
std::string beta_label(int k, int l);

struct ErgodicCertificate {
    bool ergodic = false;
    int fixed_dim = 0;
    Vec invariant_state;
    bool state_positive = false;
    Real min_eigenvalue;
};

ErgodicCertificate is_ergodic(const ModuleAlgebra& a, unsigned bits = 128);

// Induced from C_k with the trivial module.  Throws BadDivisor.
ErgodicActionData alpha_action(int K, int k);
// F(C_K/C_k) ⊕ F(C_K/C_k): r^j translates the first summand by j and the
// second by -j, s swaps the summands.
ModuleAlgebra alpha_explicit(int K, int k);
// l = 0: F(D_K/D_k); l > 0: induced from the M2 action.  shift picks the
// reflection r^shift s of the inducing subgroup.  Throws BadDivisor, BadParams.
ErgodicActionData beta_action(int K, int k, int l, int shift = 0);

// Checks that phi (columns = images of the basis of a) is a unital
// *-algebra isomorphism intertwining the two actions.
bool is_equivariant_isomorphism(const ModuleAlgebra& a, const ModuleAlgebra& b, const Mat& phi);

struct IsoWitness {
    bool isomorphic = false;
    int g = 0;  // g^{-1} H1 g = H2
    Mat map;    // isomorphism of the inducing module algebras
    std::string reason;
};

// Throws NeedsProvenance when either side lacks its inducing datum.
IsoWitness are_isomorphic(const ErgodicActionData& a, const ErgodicActionData& b);

ActionInvariants action_invariants(const ModuleAlgebra& a);

struct Census {
    int K = 1;
    std::vector<ErgodicActionData> standard;  // one per family label, standard subgroups
    std::vector<ErgodicActionData> raw;    // one entry per isomorphism class
    std::vector<std::string> flags;
    bool invariants_injective = true;
};

// with_invariants=false skips the centre and multiplicity computations.
Census classify_ergodic(int K, bool with_invariants = true);

} // namespace qgw
