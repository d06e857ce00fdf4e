#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgw/groups.hpp"
#include "qgw/hopf.hpp"
#include "qgw/twist.hpp"

namespace qgw {

// Matrix representation g -> rho[g] of a finite group.
struct GroupRep {
    std::string label;
    int dim = 1;
    std::vector<Mat> rho;
};

// Closed-form irreducible representations (dihedral, cyclic, Klein).
std::vector<GroupRep> group_irreps(const FiniteGroup& g);
bool is_representation(const FiniteGroup& g, const GroupRep& r);

struct Comodule {
    HopfPtr parent;
    int dim = 0;
    std::vector<std::vector<Vec>> u;  // u[i][j] in the parent
    bool unitary = false;
    std::string label;
};

// Items: comultiplication, counit, unitary (when flagged).
AxiomReport verify_comodule(const Comodule& v);

// Comodule over F(G): u_ij = Σ_g rho(g)_ij δ_g.
Comodule rep_to_comodule(const HopfPtr& fg, const GroupRep& r);
// Inverse: rho(g)_ij = coefficient of δ_g in u_ij.
GroupRep comodule_to_rep(const Comodule& v, const FiniteGroup& g);

// Throws BadKind when the kind does not match the group.
std::vector<Comodule> irreducibles(const FiniteGroup& g, GroupKind kind, const HopfPtr& fg = nullptr);

// Right regular comodule (H, Δ) in the basis of H.
Comodule regular_comodule(const HopfPtr& h);
Comodule trivial_comodule(const HopfPtr& h);
Comodule tensor_comodule(const Comodule& a, const Comodule& b);

// dim hom_G(A, B) from the intertwiner system on generators of G.
int hom_dim(const FiniteGroup& g, const std::vector<Mat>& a, const std::vector<Mat>& b);
// Same over a subgroup, given by its elements.
int hom_dim_on(const FiniteGroup& g, const Subgroup& h, const std::vector<Mat>& a, const std::vector<Mat>& b);

// Multiplicities over group_irreps(g), from intertwiner spaces.
std::vector<int> decompose(const Comodule& v, const FiniteGroup& g);
std::vector<int> decompose_rep(const FiniteGroup& g, const std::vector<Mat>& rho);
// Character inner products; an independent check on decompose.
std::vector<int> decompose_by_characters(const FiniteGroup& g, const std::vector<Mat>& rho);

struct ProjectiveRep {
    Subgroup domain;       // elements of the ambient group it is defined on
    int dim = 1;
    std::map<int, Mat> pi;  // x -> π(x)
    std::map<std::pair<int, int>, CycNum> mu;  // π(x)π(y) = μ(x,y) π(xy)
};

// Fills mu; false when some π(x)π(y) is not a multiple of π(xy).
bool compute_multiplier(const FiniteGroup& g, ProjectiveRep& p);

// A G-module *-algebra; `domain` lists the group elements that act.
struct ModuleAlgebra {
    FiniteGroup group;
    Subgroup domain;
    int dim = 0;
    std::vector<std::vector<MultTerm>> mult;  // index i*dim+j
    Vec unit;
    Mat star;  // column i is b_i^*, conjugate-linear extension
    std::map<int, Mat> action;
    std::vector<int> blocks;  // sizes of matrix blocks when known

    Vec product(const Vec& a, const Vec& b) const;
    Vec apply_star(const Vec& a) const { return star * conj(a); }
    std::vector<Mat> action_list() const;  // indexed by group element; empty outside domain
};

// Items: associativity, unit, star, homomorphism, automorphism.
AxiomReport verify_module_algebra(const ModuleAlgebra& a);

ModuleAlgebra trivial_module(const FiniteGroup& g, const Subgroup& domain);
// M_m with x ▷ X = π(x) X π(x)^{-1}; basis E_ij at index i*m+j.
ModuleAlgebra adjoint_module(const FiniteGroup& g, const ProjectiveRep& p);
// The M2 action of D_k ≤ D_K generated by the rotation r^{K/k} and the
// reflection r^a s: rotation by j steps is Ad diag(1, ζ_k^{-jl}), the
// reflection is Ad of the swap.
ProjectiveRep dihedral_m2_rep(int K, int k, int a, int l);

// Coset realization of {f : G -> A | f(g h^{-1}) = α_h(f(g))}.  Throws NotSubgroup.
ModuleAlgebra induce(const FiniteGroup& g, const Subgroup& h, const ModuleAlgebra& a);

struct FrobeniusPair {
    int lhs = 0, rhs = 0;
};
// lhs = dim hom_G(V, Ind W), rhs = dim hom_H(V|H, W).
FrobeniusPair frobenius_dims(const FiniteGroup& g, const GroupRep& v, const Subgroup& h, const ModuleAlgebra& w);

// Right comodule algebra over a Hopf algebra.
struct ComoduleAlgebra {
    HopfPtr parent;
    int dim = 0;
    std::vector<std::vector<MultTerm>> mult;
    Vec unit;
    Mat star;
    std::vector<std::vector<ComultTerm>> coaction;  // ρ(b_a) = Σ c b_j ⊗ h_k

    Vec product(const Vec& a, const Vec& b) const;
    bool is_commutative() const;
};

// Items: associativity, unit, coassociativity, counit, multiplicative.
AxiomReport verify_comodule_algebra(const ComoduleAlgebra& a, bool check_star = false);

// a -> Σ_g α_g(a) ⊗ δ_g over F(G) (the action must be defined on all of G).
ComoduleAlgebra module_to_comodule(const ModuleAlgebra& a, const HopfPtr& fg);
// α_g(a) = (id ⊗ ev_g) ρ(a), for comodule algebras over F(G)-coalgebras.
ModuleAlgebra comodule_to_module(const ComoduleAlgebra& a, const FiniteGroup& g);

// λ▷A: a⋆b = a_(0) b_(0) λ^{-1}(a_(1), b_(1)), viewed over `twisted` = H^λ.
// Throws TransportError when the result is not an H^λ-comodule algebra.
ComoduleAlgebra transport(const ComoduleAlgebra& a, const Cocycle& c, const HopfPtr& twisted, bool certify = true);

// Multiplicities of the underlying comodule over an F(G)-coalgebra.
std::vector<int> comodule_multiplicities(const ComoduleAlgebra& a, const FiniteGroup& g);

// Multiplicity vector of a G-module over group_irreps(g).
std::vector<int> module_multiplicities(const ModuleAlgebra& a);

// Comodule algebra given by a subspace C of H closed under the product of H.
ComoduleAlgebra subalgebra_comodule(const HopfPtr& h, const std::vector<Vec>& basis);

} // namespace qgw
