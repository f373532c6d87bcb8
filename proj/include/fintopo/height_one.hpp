// Height-1 specialisations: the cycle criterion for contractibility inside
// the space, exact cat via set cover over cat-compatible prime opens, the
// Gamma multigraph on Max(X), vertex- and D-arboricity, zigzag paths between
// minimal points, and the strongification that realises Cat(X) = cat(X) with
// a height-2 space in the same homotopy type.

#pragma once

#include <tuple>
#include <vector>

#include "fintopo/invariants.hpp"
#include "fintopo/poset.hpp"

namespace fintopo {

struct SimpleGraph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;  // u < v, no loops or parallels
    int size() const { return static_cast<int>(labels.size()); }
};

// Multiplicity 2 records minimal open sets sharing two or more lower
// neighbours; a double edge counts as a cycle for arboricity purposes.
struct Multigraph {
    std::vector<std::string> labels;
    std::vector<std::tuple<int, int, int>> edges;  // (u, v, multiplicity), u < v
    int size() const { return static_cast<int>(labels.size()); }
};

// True iff the open subset contains an alternating min/max cycle, i.e. its
// comparability graph is not a forest; equivalently some component is not
// contractible. Height-1 spaces only.
bool contains_crown_cycle(const FinitePoset& poset, const OpenSubset& open);

// Exact cat for a connected space of height 1 (or whose core has height at
// most 1): minimum cover by prime open sets whose components are all acyclic.
ExactCoverResult cat_height1(const FinitePoset& poset, const InvariantBudget& budget = {});

// The multigraph on Max(X): simple edge for exactly one shared lower
// neighbour, double edge for two or more.
Multigraph gamma_multigraph(const FinitePoset& poset);

// 1-skeleton of the order complex (the comparability graph).
SimpleGraph order_complex_graph(const FinitePoset& poset);

struct ArboricityBudget {
    int max_exact_vertices = 12;  // greedy upper bound beyond
};

struct ArboricityResult {
    int value = 0;
    bool exact = false;
    std::vector<std::vector<int>> parts;
};

// Minimum vertex partition into parts inducing acyclic subgraphs.
ArboricityResult vertex_arboricity(const SimpleGraph& graph, const ArboricityBudget& budget = {});
ArboricityResult vertex_arboricity(const Multigraph& graph, const ArboricityBudget& budget = {});

// Minimum partition of a dominating set D such that for each block the union
// of edges incident to the block is acyclic. Throws NotDominating.
ArboricityResult d_arboricity(const SimpleGraph& graph, const std::vector<int>& dominating,
                              const ArboricityBudget& budget = {});

// va(O(X)) <= cat(X) <= va(Gamma(X)), all three computed and checked.
struct HeightOneBounds {
    int va_order_complex = 0;
    int cat = 0;
    int va_gamma = 0;
};
HeightOneBounds sanity_bounds_height1(const FinitePoset& poset,
                                      const InvariantBudget& budget = {});

// A cycle-free path p = x0 <= x1 >= x2 <= ... >= x2m = q alternating minimal
// and maximal elements (BFS, so of minimum maximal-step count). Throws
// Disconnected when p and q lie in different components.
std::vector<int> zigzag_path(const FinitePoset& poset, int p, int q);

struct StrongifyResult {
    FinitePoset space;          // Y, height max{2, height(X)}
    std::vector<Bitset> cover;  // open sets of Y, one per input member
};

// Repeatedly widens a disconnected cover member by an adjoined zigzag arc
// (fresh points q_k with x_2k, x_2k+2 < q_k < x_2k+1) until every member is
// connected and contractible. The input is a prime cover (generator sets
// over Max(X)) whose members are all cat-compatible; the result satisfies
// core(Y) iso core(X) and gcat(Y) = |cover| for an optimal input cover.
StrongifyResult strongify(const FinitePoset& poset, const std::vector<Bitset>& prime_cover);

}  // namespace fintopo
