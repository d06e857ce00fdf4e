#pragma once
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qgw/corep.hpp"
#include "qgw/ergodic.hpp"
#include "qgw/twist.hpp"

namespace qgw {

// Right coideal *-subalgebra C ⊆ H.
struct CoidealSubalgebra {
    HopfPtr parent;
    Subspace space;            // canonical echelon basis
    AxiomReport certificates;  // unital, star_closed, product_closed, coideal
    std::vector<int> mult;     // right comodule multiplicities, when the coalgebra group is known
    bool commutative = false;
    int center_dim = 0;

    int dim() const { return space.dim(); }
    const std::vector<Vec>& basis() const { return space.basis(); }
};

// Items unital, star_closed, product_closed, coideal, each recomputed from scratch.
AxiomReport verify_coideal(const HopfAlgebraData& h, const Subspace& c);

// Spans gens, certifies, fills the invariants.  coalgebra_group is G when
// H has the coalgebra of F(G) in the δ basis.
CoidealSubalgebra make_coideal(const HopfPtr& h, const std::vector<Vec>& gens, const FiniteGroup* coalgebra_group = nullptr);

// {x : (π⊗id)Δx = 1⊗x}
CoidealSubalgebra quotient_coideal(const HopfQuotient& q, const FiniteGroup* coalgebra_group = nullptr);

// Smallest two-sided ideal containing gens.
Subspace ideal_generated(const HopfAlgebraData& h, const std::vector<Vec>& gens);
bool is_ideal(const HopfAlgebraData& h, const Subspace& s);
// H -> H/I with the target built on the non-pivot coordinates of I.
HopfQuotient quotient_by_ideal(const HopfPtr& h, const Subspace& ideal);

// Quotient onto CΓ; target is group_algebra(gamma).
struct GroupAlgebraQuotient {
    HopfQuotient q;
    FiniteGroup gamma;
    std::string name;
};

struct IdempotentState {
    HopfPtr parent;
    Functional phi;
    std::optional<std::string> quotient;  // name of π when tame
    Subgroup omega;
    Real min_eigenvalue;
};

// φ = 1_Ω ∘ π and C = Im (φ⊗id)Δ.  Throws NotAState.
std::pair<IdempotentState, CoidealSubalgebra> tame_coideal(const GroupAlgebraQuotient& q, const Subgroup& omega,
                                                           const FiniteGroup* coalgebra_group = nullptr,
                                                           unsigned bits = 128);
// (φ⊗id)Δ restricted to C is the identity.
bool is_conditional_expectation(const IdempotentState& s, const CoidealSubalgebra& c);

// Quotients of (D_K)_{-1}: restriction to the subgroups M whose complement
// span is an ideal, and group-algebra quotients killing the off-diagonal
// entries of P y P^{-1}.
std::vector<std::pair<Subgroup, HopfQuotient>> restriction_quotients(const DihedralMinusOne& d, const FiniteGroup& g);
std::vector<GroupAlgebraQuotient> group_algebra_quotients(const DihedralMinusOne& d);

struct EmbeddableEntry {
    CoidealSubalgebra coideal;
    std::string label;        // raw census label
    std::string family_label;  // without the variant mark
    std::string source;
};

struct EmbeddableResult {
    int K = 0;
    bool twisted = false;
    std::vector<EmbeddableEntry> entries;  // one per isomorphism class, census order
    std::vector<std::string> findings;     // unmatched coideals, tuple collisions
    int candidates = 0;

    int count() const;  // distinct family labels
    std::set<std::string> labels() const;
    std::set<std::string> family_labels() const;
};

// Raw census label of the action carried by c, transported back to D_K when
// twisted is given; empty when nothing matches.
std::string identify_coideal(const CoidealSubalgebra& c, const Census& census, const DihedralMinusOne* twisted);

// Throws BadParams when twisted and K is odd.
EmbeddableResult embeddable_classification(int K, bool twisted);
// Same with a precomputed census.
EmbeddableResult embeddable_classification(const Census& census, bool twisted);

struct CountRow {
    int K = 0;
    int classical = 0, twisted = 0;
    int classical_raw = 0, twisted_raw = 0;
    int tau = 0;
    bool differ() const { return classical != twisted; }
};

// Rows come back in the order of Ks whatever the number of workers.  Throws BadParams on odd K.
std::vector<CountRow> count_comparison(const std::vector<int>& Ks, int jobs = 1);
// Least-squares slope of log(count) against log(τ).
double loglog_slope(const std::vector<CountRow>& rows, bool twisted);

// Coalgebra of H: F(G) in the δ basis, or CΓ with group-like basis.
struct CoalgebraShape {
    enum class Kind { functions, group_likes } kind = Kind::functions;
    FiniteGroup group;
};

struct OracleResult {
    std::vector<CoidealSubalgebra> coideals;  // sorted by canonical basis
    std::vector<std::string> unresolved;
    int families_checked = 0;
};

// Exhaustive coideal search for dim H ≤ 8.  Throws OracleLimit.
OracleResult brute_force_coideals(const HopfPtr& h, const CoalgebraShape& shape);

} // namespace qgw
