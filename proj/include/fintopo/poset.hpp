// Finite posets seen as finite T0-spaces: the strict order, its transitive
// reduction (Hasse diagram), structural queries, down-set open subsets, the
// canonical test families, and exact isomorphism for small instances.
//
// Element identity is a stable string label plus an integer index; all set
// operations run on index bitsets. A FinitePoset is immutable after
// construction, so values can be shared freely across threads.

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintopo/errors.hpp"

namespace fintopo {

using Bitset = boost::dynamic_bitset<>;

class FinitePoset;

// A down-closed subset, canonically described by the antichain of its
// maximal points (its generators): members = union of U_x over generators.
struct OpenSubset {
    const FinitePoset* space = nullptr;
    Bitset members;
    Bitset generators;
};

class FinitePoset {
  public:
    // Empty placeholder; real posets come from the factories below and are
    // never empty.
    FinitePoset() = default;

    // Builds the poset from arbitrary order pairs (or claimed cover pairs;
    // both are normalized to transitive closure + reduction). Element
    // indices follow the label list order.
    //
    // Throws DuplicateLabel, UnknownLabel, CycleDetected, BadParameter.
    static FinitePoset from_relations(
        const std::vector<std::string>& labels,
        const std::vector<std::pair<std::string, std::string>>& pairs,
        bool pairs_are_covers = false);

    // Builds directly from strict-order rows (below[i] = {j : j < i}).
    // The rows must already be a strict partial order.
    static FinitePoset from_strict_order(std::vector<std::string> labels,
                                         std::vector<Bitset> below);

    int size() const { return n_; }
    const std::string& label(int x) const { return labels_[check(x)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find(const std::string& label) const;

    // x < y in the strict order.
    bool less(int x, int y) const { return below_[check(y)].test(check(x)); }
    bool comparable(int x, int y) const { return less(x, y) || less(y, x); }
    // x is covered by y (an edge of the Hasse diagram, drawn lower -> upper).
    bool covers(int x, int y) const { return lower_covers_[check(y)].test(check(x)); }

    const Bitset& below(int x) const { return below_[check(x)]; }
    const Bitset& above(int x) const { return above_[check(x)]; }
    const Bitset& lower_covers(int x) const { return lower_covers_[check(x)]; }
    const Bitset& upper_covers(int x) const { return upper_covers_[check(x)]; }

    int height() const { return height_; }
    int level(int x) const { return level_[check(x)]; }
    const Bitset& maximals() const { return max_; }
    const Bitset& minimals() const { return min_; }
    Bitset full_mask() const { return ~Bitset(n_); }
    std::size_t cover_edge_count() const;
    std::size_t relation_count() const;

    // The minimal open set U_x = {y : y <= x}.
    OpenSubset min_open_set(int x) const;

    // U_J = union of U_x over x in J; generators are the maximal points of
    // the union. Throws EmptyGenerator on empty J.
    OpenSubset open_hull(const Bitset& generators) const;
    OpenSubset open_hull(const std::vector<int>& generators) const;

    // Down-closure of an arbitrary subset, and the antichain of maximal
    // elements within a subset.
    Bitset down_closure(const Bitset& subset) const;
    Bitset maximal_elements_of(const Bitset& subset) const;
    bool is_down_closed(const Bitset& subset) const;

    // The subposet induced on a nonempty mask; the strict order is restricted
    // and the Hasse diagram recomputed (so y < x < z collapses to a cover
    // y < z when x is dropped and no intermediate survives).
    FinitePoset induced(const Bitset& mask) const;

    // Connected components of the comparability graph restricted to a mask,
    // ordered by lowest member index.
    std::vector<Bitset> components(const Bitset& mask) const;
    bool connected() const;

  private:
    int check(int x) const;
    // Derives above_, covers, levels, max/min from below_.
    void finish();

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Bitset> below_;         // below_[x] = {y : y < x}
    std::vector<Bitset> above_;         // above_[x] = {y : x < y}
    std::vector<Bitset> lower_covers_;  // Hasse edges into x from below
    std::vector<Bitset> upper_covers_;
    std::vector<int> level_;
    int height_ = 0;
    Bitset max_, min_;
};

// Transitive reduction of a strict partial order given as below-rows;
// returns lower-cover rows. Cubic in n at worst (bitset word-parallel).
std::vector<Bitset> transitive_reduction(const std::vector<Bitset>& below);

// Exact poset isomorphism by backtracking with level/degree pruning.
// Intended for instances up to `size_limit` points; beyond that
// SizeBudgetExceeded is thrown. When isomorphic, `mapping[i]` gives the image
// in `q` of element i of `p`.
struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping;
};
IsoResult is_isomorphic(const FinitePoset& p, const FinitePoset& q, int size_limit = 16);

// --- canonical families -----------------------------------------------------
//
// Deterministic labelings (documented in the README):
//   chain(n):       c1 < c2 < ... < cn
//   antichain(n):   p1, ..., pn with no relations
//   fence(n):       f1 < f2 > f3 < f4 > ... (odd positions minimal)
//   cycle(2m):      crown with maximals x1..xm, minimals y1..ym,
//                   yi < xi and y(i mod m)+1 < xi;  m = 2 degenerates to the
//                   complete bipartite 2x2 space
//   bipartite(m,n): minimals a0, b0, c0, ... (letter per index, m <= 26),
//                   maximals x1..xn, complete relations
//   cone(P):        P plus an adjoined maximum labeled "top" (primed until
//                   unique)
//   c5crowns():     maximals 0..4, minimals d0..d4, dj < i iff
//                   j in {i-1, i, i+1} mod 5 (a union of five crowns)

FinitePoset chain(int n);
FinitePoset antichain(int n);
FinitePoset fence(int n);
FinitePoset cycle(int two_m);
FinitePoset bipartite(int m_min, int n_max);
FinitePoset cone(const FinitePoset& base);
FinitePoset c5crowns();

// String-keyed dispatch used by the CLI: chain/antichain/fence/cycle take one
// parameter, bipartite two, c5crowns none. Throws BadParameter.
FinitePoset make_family(const std::string& kind, const std::vector<int>& params);

}  // namespace fintopo
