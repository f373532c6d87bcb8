// Shared test utilities: random structures, exhaustive poset enumeration with
// isomorphism dedup, and independent brute-force oracles the spec-level
// checks are frozen against.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fintopo/homotopy.hpp"
#include "fintopo/hypergraph.hpp"
#include "fintopo/poset.hpp"

namespace testsupport {

using fintopo::Bitset;
using fintopo::FinitePoset;
using fintopo::Hypergraph;

// Random poset whose indices form a linear extension (edges only i < j).
inline FinitePoset random_poset(std::mt19937_64& rng, int n, double edge_prob) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_prob) pairs.emplace_back(labels[i], labels[j]);
    return FinitePoset::from_relations(labels, pairs);
}

// Connected poset of height exactly 1 with at most max_points points.
inline FinitePoset random_height1_connected(std::mt19937_64& rng, int max_points) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        std::uniform_int_distribution<int> bottoms(1, max_points - 1);
        const int mins = bottoms(rng);
        std::uniform_int_distribution<int> tops(1, max_points - mins);
        const int maxs = tops(rng);
        std::vector<std::string> labels;
        for (int i = 0; i < mins; ++i) labels.push_back("u" + std::to_string(i));
        for (int i = 0; i < maxs; ++i) labels.push_back("v" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int i = 0; i < mins; ++i)
            for (int j = 0; j < maxs; ++j)
                if (coin(rng) < 0.45)
                    pairs.emplace_back("u" + std::to_string(i), "v" + std::to_string(j));
        if (pairs.empty()) continue;
        FinitePoset p = FinitePoset::from_relations(labels, pairs);
        if (p.height() == 1 && p.connected()) return p;
    }
}

// Grafts k synthetic up beat points: fresh minimal points with exactly one
// upper cover each.
inline FinitePoset graft_beat_points(std::mt19937_64& rng, const FinitePoset& p, int k) {
    std::vector<std::string> labels = p.labels();
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int x = 0; x < p.size(); ++x)
        for (int y = p.upper_covers(x).find_first(); y != static_cast<int>(Bitset::npos);
             y = p.upper_covers(x).find_next(y))
            pairs.emplace_back(p.label(x), p.label(y));
    for (int g = 0; g < k; ++g) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(labels.size()) - 1);
        const std::string host = labels[pick(rng)];
        const std::string fresh = "graft" + std::to_string(g);
        labels.push_back(fresh);
        pairs.emplace_back(fresh, host);
    }
    return FinitePoset::from_relations(labels, pairs);
}

// Relabeled copy under a random permutation of indices and names.
inline FinitePoset shuffled_copy(std::mt19937_64& rng, const FinitePoset& p) {
    const int n = p.size();
    std::vector<int> to_new(n);
    std::iota(to_new.begin(), to_new.end(), 0);
    std::shuffle(to_new.begin(), to_new.end(), rng);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[to_new[i]] = "s" + std::to_string(i);
    std::vector<Bitset> below(n, Bitset(n));
    for (int x = 0; x < n; ++x)
        for (int y = p.below(x).find_first(); y != static_cast<int>(Bitset::npos);
             y = p.below(x).find_next(y))
            below[to_new[x]].set(to_new[y]);
    return FinitePoset::from_strict_order(std::move(labels), std::move(below));
}

// Every naturally-labeled poset on n elements, built by repeatedly adjoining
// a new maximal element over an arbitrary down-set. Each isomorphism class
// appears at least once.
inline void enumerate_posets(int n, const std::function<void(const FinitePoset&)>& fn) {
    std::vector<Bitset> below{};
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            std::vector<std::string> labels;
            for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
            std::vector<Bitset> rows(n, Bitset(n));
            for (int i = 0; i < k; ++i)
                for (int j = below[i].find_first(); j != static_cast<int>(Bitset::npos);
                     j = below[i].find_next(j))
                    rows[i].set(j);
            fn(FinitePoset::from_strict_order(std::move(labels), std::move(rows)));
            return;
        }
        // Down-closed subsets of the first k elements become the new row.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            bool closed = true;
            for (int i = 0; i < k && closed; ++i)
                if (mask >> i & 1) {
                    for (int j = below[i].find_first(); j != static_cast<int>(Bitset::npos);
                         j = below[i].find_next(j))
                        if (!(mask >> j & 1)) {
                            closed = false;
                            break;
                        }
                }
            if (!closed) continue;
            Bitset row(n);
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) row.set(i);
            below.push_back(row);
            rec(k + 1);
            below.pop_back();
        }
    };
    rec(0);
}

inline std::string invariant_key(const FinitePoset& p) {
    std::ostringstream key;
    key << p.size() << "|" << p.relation_count() << "|" << p.cover_edge_count() << "|"
        << p.height();
    std::vector<std::string> sigs;
    for (int x = 0; x < p.size(); ++x) {
        std::ostringstream s;
        s << p.level(x) << "." << p.below(x).count() << "." << p.above(x).count() << "."
          << p.lower_covers(x).count() << "." << p.upper_covers(x).count();
        sigs.push_back(s.str());
    }
    std::sort(sigs.begin(), sigs.end());
    for (const auto& s : sigs) key << "|" << s;
    return key.str();
}

// All isomorphism classes with exactly n points, built by extending the
// classes with n-1 points and deduplicating.
inline std::vector<FinitePoset> poset_classes(int n) {
    std::vector<FinitePoset> classes{fintopo::chain(1)};
    for (int k = 2; k <= n; ++k) {
        std::vector<FinitePoset> next;
        std::map<std::string, std::vector<std::size_t>> buckets;
        for (const FinitePoset& base : classes) {
            const int m = base.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                bool closed = true;
                for (int i = 0; i < m && closed; ++i)
                    if (mask >> i & 1) {
                        for (int j = base.below(i).find_first();
                             j != static_cast<int>(Bitset::npos); j = base.below(i).find_next(j))
                            if (!(mask >> j & 1)) {
                                closed = false;
                                break;
                            }
                    }
                if (!closed) continue;
                std::vector<std::string> labels;
                for (int i = 0; i < k; ++i) labels.push_back("e" + std::to_string(i));
                std::vector<Bitset> rows(k, Bitset(k));
                for (int i = 0; i < m; ++i)
                    for (int j = base.below(i).find_first();
                         j != static_cast<int>(Bitset::npos); j = base.below(i).find_next(j))
                        rows[i].set(j);
                for (int i = 0; i < m; ++i)
                    if (mask >> i & 1) rows[m].set(i);
                FinitePoset candidate =
                    FinitePoset::from_strict_order(std::move(labels), std::move(rows));
                auto& bucket = buckets[invariant_key(candidate)];
                bool fresh = true;
                for (std::size_t idx : bucket)
                    if (fintopo::is_isomorphic(next[idx], candidate, k).isomorphic) {
                        fresh = false;
                        break;
                    }
                if (fresh) {
                    bucket.push_back(next.size());
                    next.push_back(std::move(candidate));
                }
            }
        }
        classes = std::move(next);
    }
    return classes;
}

// Brute-force transitive reduction: an edge of the closure is a cover iff
// deleting it changes the closure.
inline std::vector<std::pair<int, int>> brute_reduction(const FinitePoset& p) {
    const int n = p.size();
    auto closure_of = [&](const std::vector<std::pair<int, int>>& edges) {
        std::vector<Bitset> up(n, Bitset(n));
        for (auto [a, b] : edges) up[a].set(b);
        for (bool changed = true; changed;) {
            changed = false;
            for (int a = 0; a < n; ++a)
                for (int b = up[a].find_first(); b != static_cast<int>(Bitset::npos);
                     b = up[a].find_next(b)) {
                    const Bitset merged = up[a] | up[b];
                    if (merged != up[a]) {
                        up[a] = merged;
                        changed = true;
                    }
                }
        }
        return up;
    };
    std::vector<std::pair<int, int>> all;
    for (int x = 0; x < n; ++x)
        for (int y = p.above(x).find_first(); y != static_cast<int>(Bitset::npos);
             y = p.above(x).find_next(y))
            all.emplace_back(x, y);
    const auto full = closure_of(all);
    std::vector<std::pair<int, int>> covers;
    for (std::size_t drop = 0; drop < all.size(); ++drop) {
        std::vector<std::pair<int, int>> rest;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (i != drop) rest.push_back(all[i]);
        if (closure_of(rest) != full) covers.push_back(all[drop]);
    }
    return covers;
}

// Independent gcat oracle: candidate opens are all contractible down-sets
// (hulls of Max subsets when prime_only), covers searched exhaustively by
// increasing size. Only for small instances.
inline int brute_gcat(const FinitePoset& p, bool prime_only) {
    const int n = p.size();
    std::vector<Bitset> candidates;
    if (prime_only) {
        std::vector<int> tops;
        for (int x = p.maximals().find_first(); x != static_cast<int>(Bitset::npos);
             x = p.maximals().find_next(x))
            tops.push_back(x);
        for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << tops.size()); ++sub) {
            Bitset gens(n);
            for (std::size_t i = 0; i < tops.size(); ++i)
                if (sub >> i & 1) gens.set(tops[i]);
            const Bitset members = p.open_hull(gens).members;
            if (fintopo::is_contractible(p.induced(members))) candidates.push_back(members);
        }
    } else {
        for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << n); ++sub) {
            Bitset members(n);
            for (int i = 0; i < n; ++i)
                if (sub >> i & 1) members.set(i);
            if (!p.is_down_closed(members)) continue;
            if (fintopo::is_contractible(p.induced(members))) candidates.push_back(members);
        }
    }
    const Bitset full = p.full_mask();
    const int m = static_cast<int>(candidates.size());
    for (int r = 1; r <= n; ++r) {
        std::vector<int> idx(r);
        std::function<bool(int, int, Bitset)> scan = [&](int pos, int from, Bitset got) -> bool {
            if (got == full) return true;
            if (pos == r) return false;
            for (int i = from; i < m; ++i)
                if (scan(pos + 1, i + 1, got | candidates[i])) return true;
            return false;
        };
        if (scan(0, 0, Bitset(n))) return r;
    }
    return n;  // singleton opens always cover
}

// The height-1 space from the Gamma(X) accuracy example: minimals a0..a2k,
// maximals b0..b2k, U_b0 = {b0} u A, U_bi = {bi, a0, ai}.
inline FinitePoset section5_space(int k) {
    const int n = 2 * k;
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 0; i <= n; ++i) labels.push_back("b" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i <= n; ++i) pairs.emplace_back("a" + std::to_string(i), "b0");
    for (int i = 1; i <= n; ++i) {
        pairs.emplace_back("a0", "b" + std::to_string(i));
        pairs.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
    }
    return FinitePoset::from_relations(labels, pairs);
}

inline Hypergraph random_hypergraph(std::mt19937_64& rng, int max_vertices, int max_edges) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> ne(1, max_edges);
    const int m = ne(rng);
    std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << n) - 1);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::uint64_t> edges;
    for (int e = 0; e < m; ++e) edges.push_back(bits(rng));
    std::uint64_t covered = 0;
    for (std::uint64_t e : edges) covered |= e;
    for (int v = 0; v < n; ++v)
        if (!(covered >> v & 1)) edges.push_back(std::uint64_t{1} << v);
    return fintopo::make_hypergraph(std::move(labels), std::move(edges));
}

// Example 8.4: all subsets compatible except {1,2,3,4}, {1,2,3,5} and V.
inline Hypergraph example_h1() {
    std::vector<std::string> labels{"1", "2", "3", "4", "5"};
    std::vector<std::uint64_t> edges;
    const std::uint64_t v1234 = 0b01111, v1235 = 0b10111, v_all = 0b11111;
    for (std::uint64_t s = 1; s < 32; ++s)
        if (s != v1234 && s != v1235 && s != v_all) edges.push_back(s);
    return fintopo::make_hypergraph(std::move(labels), std::move(edges));
}

// Example 8.5: compatible subsets are those avoiding all C5-adjacent pairs.
inline Hypergraph example_h2() {
    std::vector<std::string> labels{"0", "1", "2", "3", "4"};
    std::vector<std::uint64_t> edges;
    for (std::uint64_t s = 1; s < 32; ++s) {
        bool adjacent = false;
        for (int i = 0; i < 5 && !adjacent; ++i)
            adjacent = (s >> i & 1) && (s >> ((i + 1) % 5) & 1);
        if (!adjacent) edges.push_back(s);
    }
    return fintopo::make_hypergraph(std::move(labels), std::move(edges));
}

inline std::uint64_t edge_mask(std::initializer_list<int> vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace testsupport
