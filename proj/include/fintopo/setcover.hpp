// Exact minimum set cover over <= 64-element universes, shared by the
// category invariants, the height-1 cat computation and the hypergraph
// covering number. Depth-first branch and bound: branch on the uncovered
// element with the fewest covering candidates, ties by lowest index;
// candidates are tried in ascending index order, which makes the reported
// optimum deterministic.

#pragma once

#include <cstdint>
#include <vector>

namespace fintopo {

struct SetCoverBudget {
    long long max_nodes = 4'000'000;
};

struct SetCoverResult {
    bool exact = false;
    int size = 0;
    std::vector<int> chosen;  // candidate indices, ascending
};

// Covers `universe` by candidate masks. When the node budget runs out the
// best cover found so far (at worst the greedy one) is returned with
// exact = false. An uncoverable universe yields exact = false, size = 0.
SetCoverResult min_set_cover(std::uint64_t universe, const std::vector<std::uint64_t>& candidates,
                             const SetCoverBudget& budget = {});

// Greedy cover (largest new coverage first, ties by lowest index); empty when
// the universe cannot be covered.
std::vector<int> greedy_set_cover(std::uint64_t universe,
                                  const std::vector<std::uint64_t>& candidates);

}  // namespace fintopo
