#include "fintopo/setcover.hpp"

#include <algorithm>
#include <bit>

namespace fintopo {

std::vector<int> greedy_set_cover(std::uint64_t universe,
                                  const std::vector<std::uint64_t>& candidates) {
    std::vector<int> chosen;
    std::uint64_t uncovered = universe;
    while (uncovered) {
        int best = -1;
        int best_gain = 0;
        for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
            const int gain = std::popcount(candidates[i] & uncovered);
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best < 0) return {};  // uncoverable
        chosen.push_back(best);
        uncovered &= ~candidates[best];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

struct Search {
    const std::vector<std::uint64_t>& sets;
    std::vector<std::vector<int>> covering_by;  // element -> candidate indices
    long long nodes = 0;
    long long max_nodes;
    int best_size;
    std::vector<int> best;
    std::vector<int> stack;
    int max_set_size = 1;
    bool aborted = false;

    void dfs(std::uint64_t uncovered) {
        if (!uncovered) {
            best_size = static_cast<int>(stack.size());
            best = stack;
            std::sort(best.begin(), best.end());
            return;
        }
        if (++nodes > max_nodes) {
            aborted = true;
            return;
        }
        // Lower bound: each chosen set covers at most max_set_size elements.
        const int lb = (std::popcount(uncovered) + max_set_size - 1) / max_set_size;
        if (static_cast<int>(stack.size()) + lb >= best_size) return;

        int pivot = -1;
        std::size_t fewest = static_cast<std::size_t>(-1);
        for (std::uint64_t rest = uncovered; rest;) {
            const int e = std::countr_zero(rest);
            rest &= rest - 1;
            if (covering_by[e].size() < fewest) {
                fewest = covering_by[e].size();
                pivot = e;
            }
        }
        for (int i : covering_by[pivot]) {
            stack.push_back(i);
            dfs(uncovered & ~sets[i]);
            stack.pop_back();
            if (aborted) return;
        }
    }
};

}  // namespace

SetCoverResult min_set_cover(std::uint64_t universe, const std::vector<std::uint64_t>& candidates,
                             const SetCoverBudget& budget) {
    SetCoverResult result;
    if (!universe) {
        result.exact = true;
        return result;
    }
    const std::vector<int> greedy = greedy_set_cover(universe, candidates);
    if (greedy.empty()) return result;  // uncoverable

    Search s{candidates, {}, 0, budget.max_nodes, static_cast<int>(greedy.size()) + 1, {}, {}, 1,
             false};
    s.covering_by.resize(64);
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
        s.max_set_size = std::max(s.max_set_size, std::popcount(candidates[i] & universe));
        for (std::uint64_t rest = candidates[i] & universe; rest;) {
            const int e = std::countr_zero(rest);
            rest &= rest - 1;
            s.covering_by[e].push_back(i);
        }
    }
    s.best = greedy;
    s.best_size = static_cast<int>(greedy.size());
    s.dfs(universe);

    result.exact = !s.aborted;
    result.size = s.best_size;
    result.chosen = s.best;
    return result;
}

}  // namespace fintopo
