// Hypergraphs from Boolean compatibility functions: Sperner reduction, exact
// covering and transversal numbers, dualization, the sigma-category (which is
// the covering number of H(sigma)), and the literal form of the published
// covering bounds.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fintopo/poset.hpp"
#include "fintopo/search.hpp"
#include "fintopo/setcover.hpp"

namespace fintopo {

// Vertices are labeled; hyperedges are nonempty vertex masks (so at most 64
// vertices). Construction validates labels and edge contents.
struct Hypergraph {
    std::vector<std::string> labels;
    std::vector<std::uint64_t> edges;
    int size() const { return static_cast<int>(labels.size()); }
    std::vector<std::string> edge_labels(std::uint64_t edge) const;
};

Hypergraph make_hypergraph(std::vector<std::string> labels, std::vector<std::uint64_t> edges);

// sigma as a predicate: compatible(S) <=> sigma(S) = 0. The empty set is
// compatible by convention but never becomes a hyperedge. max_size caps
// materialization; below |Z| the edge family is incomplete and consumers
// degrade to bounds.
struct BooleanCompatibility {
    std::vector<std::string> labels;  // the universe Z
    std::function<bool(std::uint64_t)> compatible;
    int max_size = -1;  // -1: all of |Z|
};

// Compatibility structures of a finite space, per mode (gcat on X, gcat_p on
// Max(X), cat_u on the core, cat_h1 on Max(X) of a height-1 space).
BooleanCompatibility compatibility_of(const FinitePoset& poset, Mode mode);

struct HypergraphBudget {
    std::size_t max_edges = std::size_t{1} << 20;
    SetCoverBudget solver;
};

// H(sigma): vertex set Z, hyperedges the nonempty compatible subsets up to
// max_size. Throws UncoverableVertex when a singleton is incompatible,
// BudgetExceeded past the materialization cap.
Hypergraph from_compatibility(const BooleanCompatibility& compat,
                              const HypergraphBudget& budget = {});

// Keeps the inclusion-maximal hyperedges (duplicates collapsed), sorted
// canonically.
Hypergraph sperner_reduction(const Hypergraph& h);

struct CoverValue {
    int value = 0;
    bool exact = false;
    std::vector<int> witness;  // hyperedge indices (covering) or vertices (transversal)
};

// Minimum hyperedge covering of the vertex set; greedy fallback marked
// inexact past the node budget. Requires every vertex to lie in some edge.
CoverValue covering_number(const Hypergraph& h, const HypergraphBudget& budget = {});

// Minimum vertex set meeting all hyperedges (computed directly, so the
// rho(H) = tau(dual) identity is a genuine cross-check).
CoverValue transversal_number(const Hypergraph& h, const HypergraphBudget& budget = {});

// Vertices E1..Em for the edges of h; hyperedge e^d_v collects the edges
// through v, duplicates collapsed. Uncovered vertices contribute nothing.
Hypergraph dual_hypergraph(const Hypergraph& h);

struct SigmaCategory {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<std::uint64_t> witness;  // chosen compatible subsets
};

// Covering number of H(sigma); an interval when materialization was capped.
SigmaCategory sigma_category(const BooleanCompatibility& compat,
                             const HypergraphBudget& budget = {});

// n/a <= rho(H) <= ln(ml/bn)/ln(1-b/n) + (m/b) * sum_{1<=j<=l} 1/j, for any
// integer l >= 1, when every vertex lies in at least b >= 1 edges and every
// edge has size at most a. The upper term is reported raw, flagged as not
// meaningful when negative or non-finite.
struct CoveringBounds {
    double lower = 0;
    double upper = 0;
    bool upper_meaningful = false;
};
CoveringBounds covering_bounds(const Hypergraph& h, int a, int b, int l);

}  // namespace fintopo
