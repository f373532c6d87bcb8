#include "fintopo/height_one.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "fintopo/homotopy.hpp"
#include "fintopo/setcover.hpp"

namespace fintopo {

namespace {

std::uint64_t to_u64(const Bitset& b) {
    std::uint64_t m = 0;
    for (int x = b.find_first(); x != static_cast<int>(Bitset::npos); x = b.find_next(x))
        m |= std::uint64_t{1} << x;
    return m;
}

Bitset to_bitset(std::uint64_t m, int n) {
    Bitset b(n);
    for (std::uint64_t rest = m; rest;) {
        b.set(std::countr_zero(rest));
        rest &= rest - 1;
    }
    return b;
}

// Comparability edges inside `members` equal |members| - #components exactly
// when the subset spans a forest. At height <= 1 comparabilities are covers.
bool open_is_forest(const FinitePoset& space, const Bitset& members) {
    std::size_t edges = 0;
    for (int x = members.find_first(); x != static_cast<int>(Bitset::npos);
         x = members.find_next(x))
        edges += (space.lower_covers(x) & members).count();
    return edges == members.count() - space.components(members).size();
}

std::vector<int> max_list(const FinitePoset& space) {
    std::vector<int> out;
    const Bitset& mx = space.maximals();
    for (int x = mx.find_first(); x != static_cast<int>(Bitset::npos); x = mx.find_next(x))
        out.push_back(x);
    return out;
}

ExactCoverResult cat_cover_search(const FinitePoset& space, const InvariantBudget& budget) {
    const int n = space.size();
    if (n > 64) throw BudgetExceeded("exact cat search limited to 64 elements");
    const std::vector<int> tops = max_list(space);
    const int m = static_cast<int>(tops.size());
    if (m >= 63 || (std::uint64_t{1} << m) - 1 > budget.max_candidates)
        throw BudgetExceeded("prime candidate pool exceeds the budget");

    std::vector<std::uint64_t> generators, members;
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << m); ++sub) {
        Bitset gens(n);
        for (std::uint64_t rest = sub; rest;) {
            gens.set(tops[std::countr_zero(rest)]);
            rest &= rest - 1;
        }
        const OpenSubset open = space.open_hull(gens);
        if (open_is_forest(space, open.members)) {
            generators.push_back(to_u64(gens));
            members.push_back(to_u64(open.members));
        }
    }

    const std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const SetCoverResult cover = min_set_cover(universe, members, budget.solver);
    if (!cover.exact) throw BudgetExceeded("set-cover solver ran out of nodes");

    ExactCoverResult result;
    result.value = cover.size;
    result.space = space;
    for (int i : cover.chosen) {
        result.cover_generators.push_back(to_bitset(generators[i], n));
        result.cover_members.push_back(to_bitset(members[i], n));
    }
    return result;
}

}  // namespace

bool contains_crown_cycle(const FinitePoset& poset, const OpenSubset& open) {
    if (poset.height() != 1)
        throw HeightMismatch("crown-cycle criterion needs a height-1 space");
    if (!poset.is_down_closed(open.members))
        throw PreconditionViolated("subset is not open (not down-closed)");
    if (open.members.none()) return false;
    return !open_is_forest(poset, open.members);
}

ExactCoverResult cat_height1(const FinitePoset& poset, const InvariantBudget& budget) {
    if (!poset.connected()) throw Disconnected("cat at height 1 needs a connected space");
    if (poset.height() == 1) return cat_cover_search(poset, budget);
    const FinitePoset reduced = core(poset).core;
    if (reduced.height() <= 1) return cat_cover_search(reduced, budget);
    throw HeightMismatch("cat is only computed for spaces whose core has height <= 1 (height " +
                         std::to_string(poset.height()) + ", core height " +
                         std::to_string(reduced.height()) + ")");
}

Multigraph gamma_multigraph(const FinitePoset& poset) {
    if (poset.height() != 1) throw HeightMismatch("Gamma(X) needs a height-1 space");
    Multigraph g;
    const std::vector<int> tops = max_list(poset);
    for (int x : tops) g.labels.push_back(poset.label(x));
    for (std::size_t i = 0; i < tops.size(); ++i) {
        for (std::size_t j = i + 1; j < tops.size(); ++j) {
            const std::size_t shared = (poset.below(tops[i]) & poset.below(tops[j])).count();
            if (shared == 1)
                g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j), 1);
            else if (shared >= 2)
                g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j), 2);
        }
    }
    return g;
}

SimpleGraph order_complex_graph(const FinitePoset& poset) {
    SimpleGraph g;
    g.labels = poset.labels();
    for (int x = 0; x < poset.size(); ++x)
        for (int y = x + 1; y < poset.size(); ++y)
            if (poset.comparable(x, y)) g.edges.emplace_back(x, y);
    return g;
}

// --- arboricity ---------------------------------------------------------------

namespace {

struct ArbInstance {
    int n = 0;
    std::vector<std::tuple<int, int, int>> edges;  // (u, v, mult)
};

// A block of a partition is feasible when its relevant edge set is a forest.
// For vertex arboricity the relevant edges are those inside the block; for
// D-arboricity those incident to the block. Union-find over the touched
// vertices; a multiplicity-2 edge is a 2-cycle.
bool block_feasible(const ArbInstance& g, const std::vector<char>& in_block, bool incident) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v, mult] : g.edges) {
        const bool relevant = incident ? (in_block[u] || in_block[v]) : (in_block[u] && in_block[v]);
        if (!relevant) continue;
        if (mult >= 2) return false;
        const int ru = root(u), rv = root(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

bool assign(const ArbInstance& g, const std::vector<int>& order, std::size_t depth, int parts,
            bool incident, std::vector<int>& part_of, std::vector<std::vector<int>>& blocks) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    const int open_new = std::min(parts - 1, static_cast<int>(blocks.size()));
    for (int b = 0; b <= open_new; ++b) {
        if (b == static_cast<int>(blocks.size())) blocks.emplace_back();
        blocks[b].push_back(v);
        part_of[v] = b;
        std::vector<char> in_block(g.n, 0);
        for (int w : blocks[b]) in_block[w] = 1;
        if (block_feasible(g, in_block, incident) &&
            assign(g, order, depth + 1, parts, incident, part_of, blocks))
            return true;
        blocks[b].pop_back();
        part_of[v] = -1;
        if (blocks.back().empty()) blocks.pop_back();
    }
    return false;
}

ArboricityResult partition_search(const ArbInstance& g, const std::vector<int>& vertices,
                                  bool incident, const ArboricityBudget& budget) {
    ArboricityResult result;
    if (vertices.empty()) {
        result.value = 0;
        result.exact = true;
        return result;
    }
    if (static_cast<int>(vertices.size()) > budget.max_exact_vertices) {
        // Greedy: first block that stays feasible, else a new one.
        std::vector<std::vector<int>> blocks;
        for (int v : vertices) {
            bool placed = false;
            for (auto& block : blocks) {
                block.push_back(v);
                std::vector<char> in_block(g.n, 0);
                for (int w : block) in_block[w] = 1;
                if (block_feasible(g, in_block, incident)) {
                    placed = true;
                    break;
                }
                block.pop_back();
            }
            if (!placed) blocks.push_back({v});
        }
        result.value = static_cast<int>(blocks.size());
        result.exact = false;
        result.parts = std::move(blocks);
        return result;
    }
    for (int parts = 1; parts <= static_cast<int>(vertices.size()); ++parts) {
        std::vector<int> part_of(g.n, -1);
        std::vector<std::vector<int>> blocks;
        if (assign(g, vertices, 0, parts, incident, part_of, blocks)) {
            result.value = parts;
            result.exact = true;
            result.parts = std::move(blocks);
            return result;
        }
    }
    throw Error("arboricity search fell through (internal error)");
}

}  // namespace

ArboricityResult vertex_arboricity(const SimpleGraph& graph, const ArboricityBudget& budget) {
    ArbInstance g;
    g.n = graph.size();
    for (const auto& [u, v] : graph.edges) g.edges.emplace_back(u, v, 1);
    std::vector<int> vertices(g.n);
    std::iota(vertices.begin(), vertices.end(), 0);
    return partition_search(g, vertices, /*incident=*/false, budget);
}

ArboricityResult vertex_arboricity(const Multigraph& graph, const ArboricityBudget& budget) {
    ArbInstance g;
    g.n = graph.size();
    g.edges = graph.edges;
    std::vector<int> vertices(g.n);
    std::iota(vertices.begin(), vertices.end(), 0);
    return partition_search(g, vertices, /*incident=*/false, budget);
}

ArboricityResult d_arboricity(const SimpleGraph& graph, const std::vector<int>& dominating,
                              const ArboricityBudget& budget) {
    ArbInstance g;
    g.n = graph.size();
    for (const auto& [u, v] : graph.edges) g.edges.emplace_back(u, v, 1);

    std::vector<char> in_d(g.n, 0);
    for (int v : dominating) {
        if (v < 0 || v >= g.n) throw IndexOutOfRange("dominating-set vertex out of range");
        in_d[v] = 1;
    }
    std::vector<char> dominated = in_d;
    for (const auto& [u, v] : graph.edges) {
        if (in_d[u]) dominated[v] = 1;
        if (in_d[v]) dominated[u] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (!dominated[v])
            throw NotDominating("vertex '" + graph.labels[v] + "' is not dominated");

    return partition_search(g, dominating, /*incident=*/true, budget);
}

HeightOneBounds sanity_bounds_height1(const FinitePoset& poset, const InvariantBudget& budget) {
    if (poset.height() != 1) throw HeightMismatch("height-1 bounds need a height-1 space");
    HeightOneBounds b;
    b.va_order_complex = vertex_arboricity(order_complex_graph(poset)).value;
    b.cat = cat_height1(poset, budget).value;
    b.va_gamma = vertex_arboricity(gamma_multigraph(poset)).value;
    if (!(b.va_order_complex <= b.cat && b.cat <= b.va_gamma))
        throw Error("height-1 bound chain violated (internal error)");
    return b;
}

std::vector<int> zigzag_path(const FinitePoset& poset, int p, int q) {
    if (!poset.minimals().test(p) || !poset.minimals().test(q))
        throw BadParameter("zigzag endpoints must be minimal elements");
    if (p == q) return {p};

    // BFS over the min/max alternation graph: a minimal y steps to maximals
    // above it, a maximal m steps to minimals below it.
    const int n = poset.size();
    std::vector<int> parent(n, -1);
    std::deque<int> queue{p};
    parent[p] = p;
    while (!queue.empty() && parent[q] == -1) {
        const int x = queue.front();
        queue.pop_front();
        const Bitset nbrs = poset.minimals().test(x) ? poset.above(x) & poset.maximals()
                                                     : poset.below(x) & poset.minimals();
        for (int y = nbrs.find_first(); y != static_cast<int>(Bitset::npos);
             y = nbrs.find_next(y)) {
            if (parent[y] != -1) continue;
            parent[y] = x;
            queue.push_back(y);
        }
    }
    if (parent[q] == -1)
        throw Disconnected("no zigzag path between '" + poset.label(p) + "' and '" +
                           poset.label(q) + "'");
    std::vector<int> path;
    for (int x = q; x != p; x = parent[x]) path.push_back(x);
    path.push_back(p);
    std::reverse(path.begin(), path.end());
    return path;
}

StrongifyResult strongify(const FinitePoset& poset, const std::vector<Bitset>& prime_cover) {
    if (poset.height() != 1) throw HeightMismatch("strongify needs a height-1 space");
    if (!poset.connected()) throw Disconnected("strongify needs a connected space");
    if (prime_cover.empty()) throw BadParameter("empty cover");

    Bitset covered(poset.size());
    std::vector<Bitset> members;
    for (const Bitset& gens : prime_cover) {
        if (gens.none()) throw BadParameter("empty cover member");
        if ((gens & ~poset.maximals()).any())
            throw BadParameter("cover generators must be maximal elements");
        const OpenSubset open = poset.open_hull(gens);
        if (!open_is_forest(poset, open.members))
            throw IncompatibleCover("a cover member has a cyclic component");
        members.push_back(open.members);
        covered |= open.members;
    }
    if (covered != poset.full_mask()) throw BadParameter("the given sets do not cover the space");

    FinitePoset space = poset;
    int fresh_counter = 0;
    auto fresh_label = [&]() {
        std::string name;
        do {
            name = "q" + std::to_string(fresh_counter++);
        } while (space.find(name));
        return name;
    };

    while (true) {
        // Lowest-indexed member that is still disconnected.
        int target = -1;
        std::vector<Bitset> comps;
        for (std::size_t i = 0; i < members.size() && target < 0; ++i) {
            auto c = space.components(members[i]);
            if (c.size() >= 2) {
                target = static_cast<int>(i);
                comps = std::move(c);
            }
        }
        if (target < 0) break;

        const Bitset& first_comp = comps[0];
        const Bitset& second_comp = comps[1];
        const int p = static_cast<int>((first_comp & space.minimals()).find_first());
        const int q = static_cast<int>((second_comp & space.minimals()).find_first());
        const std::vector<int> path = zigzag_path(space, p, q);

        // Trim to the subarc from the last element in the first component to
        // the first element after it landing back in the member.
        int t0 = -1, t1 = -1;
        for (std::size_t t = 0; t < path.size(); t += 2)
            if (first_comp.test(path[t])) t0 = static_cast<int>(t);
        for (std::size_t t = t0 + 2; t < path.size(); t += 2) {
            if (members[target].test(path[t]) && !first_comp.test(path[t])) {
                t1 = static_cast<int>(t);
                break;
            }
        }
        if (t0 < 0 || t1 < 0) throw Error("strongify arc trimming failed (internal error)");
        const std::vector<int> arc(path.begin() + t0, path.begin() + t1 + 1);
        const int steps = static_cast<int>(arc.size() - 1) / 2;
        for (int k = 0; k < steps; ++k)
            if (members[target].test(arc[2 * k + 1]))
                throw Error("strongify arc touches the member interiorly (internal error)");

        // Adjoin q_k with x_2k, x_2k+2 < q_k < x_2k+1.
        std::vector<std::string> labels = space.labels();
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int x = 0; x < space.size(); ++x)
            for (int y = space.upper_covers(x).find_first();
                 y != static_cast<int>(Bitset::npos); y = space.upper_covers(x).find_next(y))
                pairs.emplace_back(space.label(x), space.label(y));
        std::vector<std::string> fresh;
        for (int k = 0; k < steps; ++k) {
            fresh.push_back(fresh_label());
            labels.push_back(fresh.back());
            pairs.emplace_back(space.label(arc[2 * k]), fresh[k]);
            pairs.emplace_back(space.label(arc[2 * k + 2]), fresh[k]);
            pairs.emplace_back(fresh[k], space.label(arc[2 * k + 1]));
        }
        FinitePoset widened = FinitePoset::from_relations(labels, pairs);

        for (Bitset& member : members) member.resize(widened.size());
        for (std::size_t t = 0; t < arc.size(); t += 2) members[target].set(arc[t]);
        for (int k = 0; k < steps; ++k) {
            const int qk = space.size() + k;
            members[target].set(qk);
            // q_k goes into every member holding the arc maximal above it;
            // any member with x_2k+1 but not q_k would no longer be open.
            bool hosted = false;
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (static_cast<int>(j) != target && members[j].test(arc[2 * k + 1])) {
                    members[j].set(qk);
                    hosted = true;
                }
            }
            if (!hosted) throw Error("strongify found no host member (internal error)");
        }
        space = std::move(widened);
    }

    return {std::move(space), std::move(members)};
}

}  // namespace fintopo
