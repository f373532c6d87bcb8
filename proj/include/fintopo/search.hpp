// The compatibility-search layer: which generator sets produce contractible
// open sets, enumerated per mode, plus the greedy U/D bound algorithms and
// the two covering heuristics built on top of the contractibility test.
//
// Modes fix the universe and the predicate:
//   gcat   - all elements of X, U_J contractible in itself
//   gcat_p - Max(X), same predicate (prime open sets)
//   cat_u  - everything runs on the core of X
//   cat_h1 - Max(X) of a height-1 space, every component of U_J acyclic
//            (contractible in X rather than in itself)

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fintopo/homotopy.hpp"
#include "fintopo/poset.hpp"

namespace fintopo {

enum class Mode { gcat, gcat_p, cat_u, cat_h1 };

const char* to_string(Mode mode);
Mode mode_from_string(const std::string& name);

struct SearchStats {
    long long evaluations = 0;  // distinct subsets run through the test
};

// Memoized compatibility oracle for one (poset, mode). Subsets are masks over
// universe positions; the universe is capped at 64 elements.
class CompatibilityOracle {
  public:
    CompatibilityOracle(const FinitePoset& poset, Mode mode);

    const FinitePoset& space() const { return space_; }
    const std::vector<int>& universe() const { return universe_; }
    int universe_size() const { return static_cast<int>(universe_.size()); }
    Mode mode() const { return mode_; }
    const SearchStats& stats() const { return stats_; }

    bool compatible(std::uint64_t subset);

    // Element mask in space() of a universe-position subset, and its labels.
    Bitset subset_elements(std::uint64_t subset) const;
    std::vector<std::string> subset_labels(std::uint64_t subset) const;

  private:
    FinitePoset space_;
    std::vector<int> universe_;
    Mode mode_;
    std::map<std::uint64_t, bool> memo_;
    SearchStats stats_;
};

struct CompatibilityTable {
    std::vector<int> universe;  // element indices in the evaluated space
    std::vector<std::string> universe_labels;
    std::map<std::uint64_t, bool> entries;  // subset mask -> compatible (sigma = 0)
    int complete_up_to = 0;
};

struct CompatibilitySearchBudget {
    std::size_t max_subsets = std::size_t{1} << 20;
};

// Evaluates every subset of size <= max_length of the mode's universe, in
// colex order per length. Throws BudgetExceeded past the subset cap.
CompatibilityTable enumerate_compatibility(const FinitePoset& poset, Mode mode, int max_length,
                                           const CompatibilitySearchBudget& budget = {});

enum class BoundKind { upper, lower, exact };

struct CoverReport {
    Mode mode = Mode::gcat;
    FinitePoset space;          // the evaluated space (core for cat_u)
    std::vector<int> universe;  // element indices in space
    std::vector<std::uint64_t> cover;  // generator sets as universe masks
    int bound = 0;                     // == cover.size()
    bool is_exact = false;
    BoundKind bound_kind = BoundKind::upper;
    SearchStats stats;

    std::vector<std::vector<std::string>> cover_labels() const;
};

// Sweeps lengths k = 2..stop_length, testing all C(n,k) subsets per length;
// any compatible length-k subset improves the bound to n-k+1. The witness is
// the colex-least compatible subset of the best length plus the remaining
// singletons. Exact only when the verdict is forced: a compatible whole
// universe (bound 1), a compatible (n-1)-subset after the full universe
// failed (bound 2), or a full run with no compatible subset at all (bound n).
CoverReport u_algorithm(const FinitePoset& poset, Mode mode, int stop_length);

// Dual sweep: lengths n, n-1, ... down to stop_length; stops at the first
// length with a compatible subset (the bound cannot improve afterwards).
CoverReport d_algorithm(const FinitePoset& poset, Mode mode, int stop_length = 1);

struct Heuristic1Options {
    // Permutation of universe positions; empty means identity. A seeded
    // shuffle is the caller's business (the CLI wires --seed to it).
    std::vector<int> ordering;
    // Keep growing a block past an incompatible addition, skipping it,
    // instead of closing the block (the paper's "check (1,..,k-1,k+1)"
    // variation). The n-1 test-call contract holds only for the default.
    bool skip_one = false;
};

// Greedy prefix sweep along an ordering: grow a block while it stays
// compatible, emit it, restart at the failing element. Runs the
// contractibility test exactly n-1 times in the default variant.
CoverReport heuristic1(const FinitePoset& poset, Mode mode, const Heuristic1Options& options = {});

struct Heuristic2Options {
    enum class Variant { disjoint, covering } variant = Variant::disjoint;
    // Subsets to try first, in the given order, ahead of the default
    // (size-descending, then colex) order.
    std::vector<std::uint64_t> preferred;
};

// Evaluates all subsets of size <= k (k < n/2), orders the compatible family,
// then greedily picks the first set disjoint from the union so far
// (disjoint variant) or contributing a new element (covering variant).
CoverReport heuristic2(const FinitePoset& poset, Mode mode, int k,
                       const Heuristic2Options& options = {});

// Colex successor machinery shared with the exact solvers and tests:
// enumerates k-subsets of {0..n-1} in colexicographic order.
bool first_combination(std::vector<int>& c, int n, int k);
bool next_combination(std::vector<int>& c, int n);

}  // namespace fintopo
