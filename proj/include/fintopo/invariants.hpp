// Exact covering-based invariants: gcat (minimum cover by open sets
// contractible in themselves), gcat_p (restricted to prime open sets over
// Max(X)), Cat_u (gcat of the core), and the inequality-chain report
//   Cat_u <= gcat_p <= |Max(core)| <= |Max(X)|.
//
// Every open set is U_J for the antichain J of its maximal points, so the
// gcat search ranges over all antichains; contractibility is not monotone
// under inclusion, so no candidate may be dropped. Exact minimisation is a
// branch-and-bound set cover over element bitmasks; on budget exhaustion the
// report degrades to an interval.

#pragma once

#include <optional>
#include <vector>

#include "fintopo/poset.hpp"
#include "fintopo/search.hpp"
#include "fintopo/setcover.hpp"

namespace fintopo {

struct InvariantBudget {
    std::size_t max_candidates = std::size_t{1} << 20;
    int max_elements = 16;  // exact-mode cap on the element universe
    SetCoverBudget solver;
    int iso_limit = 16;
};

struct ExactCoverResult {
    int value = 0;
    FinitePoset space;                     // where the witness cover lives
    std::vector<Bitset> cover_generators;  // antichains J, one per member
    std::vector<Bitset> cover_members;     // U_J element masks
    std::vector<std::vector<std::string>> cover_labels() const;  // generator labels
};

// Minimum cover of X by open sets contractible in themselves.
// Throws BudgetExceeded when the instance exceeds the budget.
ExactCoverResult gcat_exact(const FinitePoset& poset, const InvariantBudget& budget = {});

// Same search restricted to prime open sets (J over subsets of Max(X)).
ExactCoverResult gcat_p_exact(const FinitePoset& poset, const InvariantBudget& budget = {});

// gcat of the core; the witness lives on the core.
ExactCoverResult cat_u(const FinitePoset& poset, const InvariantBudget& budget = {});

// Lemma-style prime refinement of an open cover: member U is replaced by the
// union of minimal open sets of its maximal points; empty replacements are
// dropped, so the result is a prime cover of no larger cardinality.
std::vector<Bitset> prime_refinement(const FinitePoset& poset,
                                     const std::vector<Bitset>& cover_members);

struct BoundValue {
    int lower = 0;
    int upper = 0;
    bool exact() const { return lower == upper; }
};

struct InvariantReport {
    BoundValue gcat, gcat_p, cat_u;
    int max_core = 0;  // |Max(core)|
    int max_all = 0;   // |Max(X)|
    std::optional<BoundValue> cat_h1;  // present when the core has height <= 1
                                       // and the space is connected
    std::optional<ExactCoverResult> gcat_witness, gcat_p_witness, cat_u_witness, cat_h1_witness;
    bool budget_hit = false;
};

// Computes all chain members, asserting the computable inequalities; exact
// searches that blow the budget degrade to intervals (budget_hit is set).
InvariantReport invariant_chain_report(const FinitePoset& poset,
                                       const InvariantBudget& budget = {});

}  // namespace fintopo
