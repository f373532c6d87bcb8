#include "fintopo/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <set>

namespace fintopo {

std::vector<std::string> Hypergraph::edge_labels(std::uint64_t edge) const {
    std::vector<std::string> out;
    for (std::uint64_t rest = edge; rest;) {
        out.push_back(labels.at(std::countr_zero(rest)));
        rest &= rest - 1;
    }
    return out;
}

Hypergraph make_hypergraph(std::vector<std::string> labels, std::vector<std::uint64_t> edges) {
    if (labels.empty()) throw BadParameter("a hypergraph needs at least one vertex");
    if (labels.size() > 64) throw SizeBudgetExceeded("hypergraphs limited to 64 vertices");
    std::set<std::string> seen;
    for (const std::string& l : labels)
        if (!seen.insert(l).second) throw DuplicateLabel("duplicate vertex label '" + l + "'");
    const std::uint64_t universe =
        labels.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << labels.size()) - 1;
    for (std::uint64_t e : edges) {
        if (!e) throw BadParameter("hyperedges must be nonempty");
        if (e & ~universe) throw IndexOutOfRange("hyperedge references a missing vertex");
    }
    Hypergraph h;
    h.labels = std::move(labels);
    h.edges = std::move(edges);
    return h;
}

BooleanCompatibility compatibility_of(const FinitePoset& poset, Mode mode) {
    auto oracle = std::make_shared<CompatibilityOracle>(poset, mode);
    BooleanCompatibility compat;
    for (int e : oracle->universe()) compat.labels.push_back(oracle->space().label(e));
    compat.compatible = [oracle](std::uint64_t subset) { return oracle->compatible(subset); };
    return compat;
}

Hypergraph from_compatibility(const BooleanCompatibility& compat,
                              const HypergraphBudget& budget) {
    const int n = static_cast<int>(compat.labels.size());
    if (n == 0) throw BadParameter("empty compatibility universe");
    if (n > 64) throw SizeBudgetExceeded("compatibility universe larger than 64 elements");
    const int cap = compat.max_size < 0 ? n : std::min(compat.max_size, n);

    for (int v = 0; v < n; ++v)
        if (!compat.compatible(std::uint64_t{1} << v))
            throw UncoverableVertex("singleton '" + compat.labels[v] + "' is incompatible");

    double planned = 0;
    {
        double binom = 1;
        for (int j = 1; j <= cap; ++j) {
            binom = binom * (n - j + 1) / j;
            planned += binom;
        }
    }
    if (planned > static_cast<double>(budget.max_edges))
        throw BudgetExceeded("materializing " + std::to_string(static_cast<long long>(planned)) +
                             " subsets exceeds the edge cap");

    std::vector<std::uint64_t> edges;
    std::vector<int> comb;
    for (int k = 1; k <= cap; ++k) {
        if (!first_combination(comb, n, k)) break;
        do {
            std::uint64_t m = 0;
            for (int p : comb) m |= std::uint64_t{1} << p;
            if (compat.compatible(m)) edges.push_back(m);
        } while (next_combination(comb, n));
    }
    return make_hypergraph(compat.labels, std::move(edges));
}

Hypergraph sperner_reduction(const Hypergraph& h) {
    std::vector<std::uint64_t> edges = h.edges;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t e : edges) {
        bool dominated = false;
        for (std::uint64_t f : edges)
            if (e != f && (e & ~f) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(e);
    }
    Hypergraph out;
    out.labels = h.labels;
    out.edges = std::move(maximal);
    return out;
}

CoverValue covering_number(const Hypergraph& h, const HypergraphBudget& budget) {
    const std::uint64_t universe =
        h.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.size()) - 1;
    std::uint64_t reach = 0;
    for (std::uint64_t e : h.edges) reach |= e;
    if (reach != universe)
        throw PreconditionViolated("some vertex lies in no hyperedge");
    const SetCoverResult r = min_set_cover(universe, h.edges, budget.solver);
    return {r.size, r.exact, r.chosen};
}

namespace {

struct HittingSearch {
    const std::vector<std::uint64_t>& edges;
    int n;
    long long nodes = 0;
    long long max_nodes;
    bool aborted = false;
    std::vector<int> best;
    std::vector<int> stack;

    // Greedy count of pairwise disjoint un-hit edges: a sound lower bound.
    int disjoint_bound(std::uint64_t hit_vertices) const {
        std::uint64_t used = 0;
        int count = 0;
        for (std::uint64_t e : edges) {
            if (e & hit_vertices) continue;
            if (e & used) continue;
            used |= e;
            ++count;
        }
        return count;
    }

    void dfs(std::uint64_t hit_vertices) {
        if (++nodes > max_nodes) {
            aborted = true;
            return;
        }
        std::uint64_t pivot = 0;
        int pivot_size = 65;
        for (std::uint64_t e : edges) {
            if (e & hit_vertices) continue;
            const int size = std::popcount(e);
            if (size < pivot_size) {
                pivot_size = size;
                pivot = e;
            }
        }
        if (!pivot) {
            if (best.empty() || stack.size() < best.size()) {
                best = stack;
                std::sort(best.begin(), best.end());
            }
            return;
        }
        if (!best.empty() &&
            static_cast<int>(stack.size()) + disjoint_bound(hit_vertices) >=
                static_cast<int>(best.size()))
            return;
        for (std::uint64_t rest = pivot; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            stack.push_back(v);
            dfs(hit_vertices | std::uint64_t{1} << v);
            stack.pop_back();
            if (aborted) return;
        }
    }
};

}  // namespace

CoverValue transversal_number(const Hypergraph& h, const HypergraphBudget& budget) {
    if (h.edges.empty()) return {0, true, {}};

    // Greedy seed: hit the most edges per vertex.
    std::vector<int> greedy;
    {
        std::uint64_t hit = 0;
        auto uncovered = [&]() {
            int c = 0;
            for (std::uint64_t e : h.edges)
                if (!(e & hit)) ++c;
            return c;
        };
        while (uncovered() > 0) {
            int best_v = -1, best_gain = -1;
            for (int v = 0; v < h.size(); ++v) {
                int gain = 0;
                for (std::uint64_t e : h.edges)
                    if (!(e & hit) && (e >> v & 1)) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v = v;
                }
            }
            greedy.push_back(best_v);
            hit |= std::uint64_t{1} << best_v;
        }
        std::sort(greedy.begin(), greedy.end());
    }

    HittingSearch s{h.edges, h.size(), 0, budget.solver.max_nodes, false, greedy, {}};
    s.dfs(0);
    return {static_cast<int>(s.best.size()), !s.aborted, s.best};
}

Hypergraph dual_hypergraph(const Hypergraph& h) {
    const int m = static_cast<int>(h.edges.size());
    if (m == 0) throw BadParameter("cannot dualize a hypergraph with no edges");
    if (m > 64) throw SizeBudgetExceeded("dual would have more than 64 vertices");
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("E" + std::to_string(i));
    std::set<std::uint64_t> dual_edges;
    for (int v = 0; v < h.size(); ++v) {
        std::uint64_t ev = 0;
        for (int i = 0; i < m; ++i)
            if (h.edges[i] >> v & 1) ev |= std::uint64_t{1} << i;
        if (ev) dual_edges.insert(ev);  // e^d_v = e^d_w collapses
    }
    return make_hypergraph(std::move(labels),
                           std::vector<std::uint64_t>(dual_edges.begin(), dual_edges.end()));
}

SigmaCategory sigma_category(const BooleanCompatibility& compat, const HypergraphBudget& budget) {
    const Hypergraph h = from_compatibility(compat, budget);
    const int n = static_cast<int>(compat.labels.size());
    const bool complete = compat.max_size < 0 || compat.max_size >= n;
    const CoverValue cover = covering_number(h, budget);

    SigmaCategory out;
    for (int i : cover.witness) out.witness.push_back(h.edges[i]);
    out.upper = cover.value;
    if (complete && cover.exact) {
        out.lower = cover.value;
        out.exact = true;
    } else {
        out.lower = 1;
        out.exact = false;
    }
    return out;
}

CoveringBounds covering_bounds(const Hypergraph& h, int a, int b, int l) {
    if (l < 1) throw PreconditionViolated("l must be a positive integer");
    if (b < 1) throw PreconditionViolated("b must be at least 1");
    const int n = h.size();
    const int m = static_cast<int>(h.edges.size());
    for (std::uint64_t e : h.edges)
        if (std::popcount(e) > a)
            throw PreconditionViolated("a hyperedge exceeds the size bound a");
    for (int v = 0; v < n; ++v) {
        int deg = 0;
        for (std::uint64_t e : h.edges)
            if (e >> v & 1) ++deg;
        if (deg < b)
            throw PreconditionViolated("vertex '" + h.labels[v] + "' lies in fewer than b edges");
    }

    CoveringBounds out;
    out.lower = static_cast<double>(n) / a;
    double harmonic = 0;
    for (int j = 1; j <= l; ++j) harmonic += 1.0 / j;
    const double ratio = static_cast<double>(m) * l / (static_cast<double>(b) * n);
    out.upper = std::log(ratio) / std::log(1.0 - static_cast<double>(b) / n) +
                static_cast<double>(m) / b * harmonic;
    out.upper_meaningful = std::isfinite(out.upper) && out.upper >= 0;
    return out;
}

}  // namespace fintopo
