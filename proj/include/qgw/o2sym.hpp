#pragma once
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qgw {

// Irreducible O(2)-representation: triv, sgn (det), or the 2-dimensional V(k), k ≥ 1.
struct IrrO2 {
    enum class Kind { triv, sgn, V } kind = Kind::triv;
    int k = 0;

    static IrrO2 triv() { return {Kind::triv, 0}; }
    static IrrO2 sgn() { return {Kind::sgn, 0}; }
    static IrrO2 V(int k);
    int dim() const { return kind == Kind::V ? 2 : 1; }
    std::string label() const;
    auto operator<=>(const IrrO2&) const = default;
};

// Multiplicities of triv, sgn, V(1..cutoff).
struct MultVector {
    int cutoff = 0;
    int triv = 0, sgn = 0;
    std::vector<int> v;  // v[m-1] = multiplicity of V(m)

    int of(const IrrO2& r) const;
    std::string str() const;
    bool operator==(const MultVector&) const = default;
};

// (g1 g2)^m g1^eps in D_∞.
struct DInfWord {
    long m = 0;
    int eps = 0;

    static DInfWord g1() { return {0, 1}; }
    static DInfWord g2() { return {-1, 1}; }
    DInfWord operator*(const DInfWord& o) const { return {m + (eps ? -o.m : o.m), (eps + o.eps) & 1}; }
    DInfWord inverse() const { return eps ? *this : DInfWord{-m, 0}; }
    bool operator==(const DInfWord&) const = default;
};

// C_k or D_k inside O(2); k = 0 stands for ∞ (SO(2), O(2)).
struct O2Subgroup {
    enum class Kind { cyclic, dihedral } kind = Kind::cyclic;
    int k = 1;
};

// Labels follow group_irreps: chi<j>; triv, sgn, c-+, c--, V<j>.
std::map<std::string, int> branch(const IrrO2& irr, const O2Subgroup& target);

// Module algebra on the subgroup: trivial, a character, or M2 at parameter l.
struct InducingModule {
    enum class Kind { trivial, character, m2 } kind = Kind::trivial;
    std::string character;
    int l = 0;
};

// dim hom_H(V|H, W) for every irreducible up to the cutoff.  Throws BadParams.
MultVector induced_mult(const O2Subgroup& h, const InducingModule& w, int cutoff);
MultVector regular_mult(int cutoff);

// k = 0 prints as inf.
std::string o2_alpha_label(int k);
std::string o2_beta_label(int k, int l);

// Labels with the regular multiplicity vector.  Throws CutoffTooSmall when cutoff < 2 k_bound.
std::vector<std::string> scan_regular_candidates(int k_bound, int l_bound, int cutoff);

struct EmbeddableVerdict {
    std::string label;
    int k = 0, l = 0;  // k = 0 is ∞
    bool alpha = false;
    bool embeddable = false;
    std::string reason;
};

// Includes the k = ∞ entries after the finite ones.
std::vector<EmbeddableVerdict> embeddable_table(int k_bound, int l_bound);

// Multiplicities of A_{π,Ω} for Ω = <(g1g2)^{k/2}, (g1g2)^{(l-1)/2} g1>.  Throws BadParams.
MultVector dinf_tame_mult(int k, int l, int cutoff);
bool dinf_contains(int k, int l, const DInfWord& w);

// Declared branching facts for the quotients A(n,e) and the dihedral quotient,
// compared against the induced vectors.  perturb replaces 2n by 2n-1.
bool ane_consistency(int n, int cutoff, bool perturb = false);

struct BranchMismatch {
    int K, k;
    bool dihedral;
    std::string irrep;
};
// Symbolic branch against exact decomposition of the D_K realization, for
// every k | K and every parameter < K/2.
std::vector<BranchMismatch> verify_branching(int K);

} // namespace qgw
