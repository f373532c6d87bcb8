#include "fintopo/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fintopo {

namespace {

bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void sort_canonical(std::vector<std::vector<int>>& simplices) {
    for (auto& s : simplices) std::sort(s.begin(), s.end());
    std::sort(simplices.begin(), simplices.end(), canonical_less);
}

std::string brace_label(const SimplicialComplex& complex, const std::vector<int>& simplex) {
    std::string out = "{";
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i) out += ",";
        out += complex.vertex_labels[simplex[i]];
    }
    out += "}";
    return out;
}

}  // namespace

int SimplicialComplex::dimension() const {
    std::size_t top = 0;
    for (const auto& s : simplices) top = std::max(top, s.size());
    return static_cast<int>(top) - 1;
}

SimplicialComplex order_complex(const FinitePoset& poset) {
    SimplicialComplex complex;
    complex.vertex_labels = poset.labels();

    // Chains enumerated by their top element; extending above the top visits
    // each totally ordered subset exactly once.
    std::vector<int> chain;
    auto extend = [&](auto&& self, int top) -> void {
        complex.simplices.push_back(chain);
        const Bitset& up = poset.above(top);
        for (int y = up.find_first(); y != static_cast<int>(Bitset::npos); y = up.find_next(y)) {
            chain.push_back(y);
            self(self, y);
            chain.pop_back();
        }
    };
    for (int x = 0; x < poset.size(); ++x) {
        chain.assign(1, x);
        extend(extend, x);
    }
    sort_canonical(complex.simplices);
    return complex;
}

FinitePoset face_poset(const SimplicialComplex& complex) {
    const auto& simplices = complex.simplices;
    const int m = static_cast<int>(simplices.size());
    if (m == 0) throw BadParameter("face poset of an empty complex");

    std::vector<std::string> labels;
    labels.reserve(m);
    for (const auto& s : simplices) labels.push_back(brace_label(complex, s));

    std::vector<Bitset> below(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (simplices[i].size() < simplices[j].size() &&
                std::includes(simplices[j].begin(), simplices[j].end(), simplices[i].begin(),
                              simplices[i].end()))
                below[j].set(i);
    return FinitePoset::from_strict_order(std::move(labels), std::move(below));
}

std::size_t chain_count(const FinitePoset& poset, std::size_t cap) {
    std::size_t count = 0;
    std::vector<int> stack;
    auto extend = [&](auto&& self, int top) -> bool {
        if (++count > cap) return false;
        const Bitset& up = poset.above(top);
        for (int y = up.find_first(); y != static_cast<int>(Bitset::npos); y = up.find_next(y))
            if (!self(self, y)) return false;
        return true;
    };
    for (int x = 0; x < poset.size(); ++x)
        if (!extend(extend, x)) return cap + 1;
    return count;
}

FinitePoset subdivide(const FinitePoset& poset, int k, std::size_t size_budget) {
    if (k < 0) throw BadParameter("subdivision count must be nonnegative");
    FinitePoset current = poset;
    for (int round = 0; round < k; ++round) {
        if (chain_count(current, size_budget) > size_budget)
            throw SizeBudgetExceeded("subdivision would exceed " + std::to_string(size_budget) +
                                     " elements");
        current = face_poset(order_complex(current));
    }
    return current;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex) {
    const auto& simplices = complex.simplices;
    const int m = static_cast<int>(simplices.size());

    SimplicialComplex out;
    out.vertex_labels.reserve(m);
    for (const auto& s : simplices) out.vertex_labels.push_back(brace_label(complex, s));

    // Flags of proper inclusions, walked directly over the simplex family.
    std::vector<std::vector<int>> strictly_above(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (simplices[i].size() < simplices[j].size() &&
                std::includes(simplices[j].begin(), simplices[j].end(), simplices[i].begin(),
                              simplices[i].end()))
                strictly_above[i].push_back(j);

    std::vector<int> flag;
    auto extend = [&](auto&& self, int top) -> void {
        out.simplices.push_back(flag);
        for (int j : strictly_above[top]) {
            flag.push_back(j);
            self(self, j);
            flag.pop_back();
        }
    };
    for (int i = 0; i < m; ++i) {
        flag.assign(1, i);
        extend(extend, i);
    }
    sort_canonical(out.simplices);
    return out;
}

namespace {

std::vector<std::size_t> dimension_profile(const SimplicialComplex& c) {
    std::vector<std::size_t> profile;
    for (const auto& s : c.simplices) {
        if (s.size() > profile.size()) profile.resize(s.size(), 0);
        ++profile[s.size() - 1];
    }
    return profile;
}

bool iso_backtrack(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int n = a.vertex_count();
    // Per-vertex incidence profile by dimension.
    auto profiles = [](const SimplicialComplex& c) {
        std::vector<std::vector<int>> prof(c.vertex_count());
        for (const auto& s : c.simplices)
            for (int v : s) {
                if (prof[v].size() < s.size()) prof[v].resize(s.size(), 0);
                ++prof[v][s.size() - 1];
            }
        return prof;
    };
    const auto pa = profiles(a);
    const auto pb = profiles(b);
    {
        auto sa = pa;
        auto sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::set<std::pair<int, int>> a_edges, b_edges;
    for (const auto& s : a.simplices)
        if (s.size() == 2) a_edges.emplace(s[0], s[1]);
    for (const auto& s : b.simplices)
        if (s.size() == 2) b_edges.emplace(s[0], s[1]);

    std::set<std::vector<int>> b_family(b.simplices.begin(), b.simplices.end());
    std::vector<int> map_ab(n, -1);
    std::vector<char> used(n, 0);

    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) {
            for (const auto& s : a.simplices) {
                std::vector<int> image;
                image.reserve(s.size());
                for (int x : s) image.push_back(map_ab[x]);
                std::sort(image.begin(), image.end());
                if (!b_family.count(image)) return false;
            }
            return true;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || pa[v] != pb[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                const auto ea = std::make_pair(std::min(u, v), std::max(u, v));
                const auto eb = std::make_pair(std::min(map_ab[u], w), std::max(map_ab[u], w));
                ok = (a_edges.count(ea) != 0) == (b_edges.count(eb) != 0);
            }
            if (!ok) continue;
            map_ab[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            map_ab[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                          int size_limit) {
    if (a.vertex_count() != b.vertex_count() || a.simplex_count() != b.simplex_count())
        return false;
    if (dimension_profile(a) != dimension_profile(b)) return false;

    // Fast path: the same labeled complex (an explicit isomorphism witness).
    {
        auto la = a.vertex_labels;
        auto lb = b.vertex_labels;
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        if (la == lb) {
            std::map<std::string, int> b_index;
            for (int i = 0; i < b.vertex_count(); ++i) b_index[b.vertex_labels[i]] = i;
            std::set<std::vector<int>> b_family(b.simplices.begin(), b.simplices.end());
            bool match = true;
            for (const auto& s : a.simplices) {
                std::vector<int> image;
                image.reserve(s.size());
                for (int v : s) image.push_back(b_index[a.vertex_labels[v]]);
                std::sort(image.begin(), image.end());
                if (!b_family.count(image)) {
                    match = false;
                    break;
                }
            }
            if (match) return true;
        }
    }

    if (a.vertex_count() > size_limit)
        throw SizeBudgetExceeded("complex isomorphism limited to " + std::to_string(size_limit) +
                                 " vertices");
    return iso_backtrack(a, b);
}

}  // namespace fintopo
