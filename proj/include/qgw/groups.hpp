#pragma once
#include <string>
#include <utility>
#include <vector>

#include "qgw/hopf.hpp"

namespace qgw {

enum class GroupKind { dihedral, cyclic, klein };

struct GroupSpec {
    GroupKind kind;
    int n = 1;  // K for dihedral, k for cyclic, unused for klein
};

struct FiniteGroup {
    int order = 1;
    std::vector<int> table;  // table[a*order+b] = ab
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::string> labels;
    GroupSpec spec{GroupKind::cyclic, 1};

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inverse[g]); }  // g x g^-1
    bool verify_axioms() const;
    int element_order(int a) const;
};

// Dihedral index a + K b stands for r^a s^b.
inline int dih(int K, int a, int b) { return ((a % K) + K) % K + K * (b & 1); }

FiniteGroup make_group(GroupSpec spec);
FiniteGroup make_dihedral(int K);
FiniteGroup make_cyclic(int k);
FiniteGroup make_klein();

using Subgroup = std::vector<int>;  // sorted element indices

Subgroup closure(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
Subgroup conjugate(const FiniteGroup& g, int x, const Subgroup& h);  // x h x^-1
std::vector<std::pair<Subgroup, int>> subgroup_conjugacy_classes(const FiniteGroup& g);
// Minimal generating set found greedily (deterministic).
std::vector<int> generators(const FiniteGroup& g, const Subgroup& h);
std::vector<int> left_coset_reps(const FiniteGroup& g, const Subgroup& h);  // reps of gH

HopfPtr function_algebra(const FiniteGroup& g, int cyc_order = 1);
HopfPtr group_algebra(const FiniteGroup& g, int cyc_order = 1);

struct HopfQuotient {
    HopfPtr source, target;
    Mat map;  // target dim x source dim
};

AxiomReport verify_quotient(const HopfQuotient& q);

// F(D_K) -> F(V4) = CZ2^2 through the character basis.
HopfQuotient restriction_quotient(int K);
// The Klein subgroup {1, r^{K/2}, s, r^{K/2}s} of D_K.
Subgroup klein_in_dihedral(int K);
// Klein element (c0,c1) as a function on V4 in coordinates z=(1,0), s=(0,1).
int klein_character(int c0, int c1, int v0, int v1);

// Restriction F(G) -> F(M) for a subgroup M; target basis δ_m in sorted order.
HopfQuotient restriction_to_subgroup(const HopfPtr& source, const FiniteGroup& g, const Subgroup& m,
                                     HopfPtr target);

int lcm4(int K);

} // namespace qgw
