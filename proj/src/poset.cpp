#include "fintopo/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace fintopo {

namespace {

// Indices sorted by |below| ascending: a linear extension of any strict
// order, since y < x implies below(y) is a proper subset of below(x).
std::vector<int> extension_order(const std::vector<Bitset>& below) {
    std::vector<int> order(below.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return below[a].count() < below[b].count();
    });
    return order;
}

}  // namespace

int FinitePoset::check(int x) const {
    if (x < 0 || x >= n_)
        throw IndexOutOfRange("element index " + std::to_string(x) + " out of range [0," +
                              std::to_string(n_) + ")");
    return x;
}

std::optional<int> FinitePoset::find(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::size_t FinitePoset::cover_edge_count() const {
    std::size_t c = 0;
    for (const Bitset& row : lower_covers_) c += row.count();
    return c;
}

std::size_t FinitePoset::relation_count() const {
    std::size_t c = 0;
    for (const Bitset& row : below_) c += row.count();
    return c;
}

FinitePoset FinitePoset::from_relations(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& pairs, bool pairs_are_covers) {
    (void)pairs_are_covers;  // both paths normalize to closure + reduction
    if (labels.empty()) throw BadParameter("a poset needs at least one element");

    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (!index.emplace(labels[i], i).second)
            throw DuplicateLabel("duplicate element label '" + labels[i] + "'");
    }

    const int n = static_cast<int>(labels.size());
    std::vector<Bitset> direct(n, Bitset(n));  // direct[x] = declared {y : x < y}
    for (const auto& [lo, hi] : pairs) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end()) throw UnknownLabel("unknown element '" + lo + "' in relation");
        if (b == index.end()) throw UnknownLabel("unknown element '" + hi + "' in relation");
        if (a->second == b->second)
            throw CycleDetected("reflexive relation " + lo + " < " + lo);
        direct[a->second].set(b->second);
    }

    // Kahn topological order; leftover vertices mean a directed cycle.
    std::vector<int> indeg(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = direct[x].find_first(); y != static_cast<int>(Bitset::npos);
             y = direct[x].find_next(y))
            ++indeg[y];
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> queue;
    for (int x = 0; x < n; ++x)
        if (indeg[x] == 0) queue.push_back(x);
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        order.push_back(x);
        for (int y = direct[x].find_first(); y != static_cast<int>(Bitset::npos);
             y = direct[x].find_next(y))
            if (--indeg[y] == 0) queue.push_back(y);
    }
    if (static_cast<int>(order.size()) != n)
        throw CycleDetected("relations close to a cycle (antisymmetry violated)");

    // Closure by propagating reachability in reverse topological order.
    std::vector<Bitset> reach(n, Bitset(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        reach[x] = direct[x];
        for (int y = direct[x].find_first(); y != static_cast<int>(Bitset::npos);
             y = direct[x].find_next(y))
            reach[x] |= reach[y];
    }

    std::vector<Bitset> below(n, Bitset(n));
    for (int x = 0; x < n; ++x)
        for (int y = reach[x].find_first(); y != static_cast<int>(Bitset::npos);
             y = reach[x].find_next(y))
            below[y].set(x);

    FinitePoset p;
    p.n_ = n;
    p.labels_ = labels;
    p.below_ = std::move(below);
    p.finish();
    return p;
}

FinitePoset FinitePoset::from_strict_order(std::vector<std::string> labels,
                                           std::vector<Bitset> below) {
    if (labels.empty()) throw BadParameter("a poset needs at least one element");
    FinitePoset p;
    p.n_ = static_cast<int>(labels.size());
    p.labels_ = std::move(labels);
    p.below_ = std::move(below);
    p.finish();
    return p;
}

void FinitePoset::finish() {
    above_.assign(n_, Bitset(n_));
    for (int x = 0; x < n_; ++x)
        for (int y = below_[x].find_first(); y != static_cast<int>(Bitset::npos);
             y = below_[x].find_next(y))
            above_[y].set(x);

    lower_covers_ = transitive_reduction(below_);
    upper_covers_.assign(n_, Bitset(n_));
    for (int x = 0; x < n_; ++x)
        for (int y = lower_covers_[x].find_first(); y != static_cast<int>(Bitset::npos);
             y = lower_covers_[x].find_next(y))
            upper_covers_[y].set(x);

    max_.resize(n_);
    min_.resize(n_);
    for (int x = 0; x < n_; ++x) {
        if (upper_covers_[x].none()) max_.set(x);
        if (lower_covers_[x].none()) min_.set(x);
    }

    // level(x) = longest Hasse path from a source; heights follow.
    level_.assign(n_, 0);
    height_ = 0;
    for (int x : extension_order(below_)) {
        int lv = 0;
        for (int y = lower_covers_[x].find_first(); y != static_cast<int>(Bitset::npos);
             y = lower_covers_[x].find_next(y))
            lv = std::max(lv, level_[y] + 1);
        level_[x] = lv;
        height_ = std::max(height_, lv);
    }
}

std::vector<Bitset> transitive_reduction(const std::vector<Bitset>& below) {
    const int n = static_cast<int>(below.size());
    std::vector<Bitset> covers(n, Bitset(n));
    for (int x = 0; x < n; ++x) {
        // y is a lower cover of x iff y < x and nothing sits strictly between.
        Bitset reachable(n);
        for (int z = below[x].find_first(); z != static_cast<int>(Bitset::npos);
             z = below[x].find_next(z))
            reachable |= below[z];
        covers[x] = below[x] & ~reachable;
    }
    return covers;
}

OpenSubset FinitePoset::min_open_set(int x) const {
    check(x);
    OpenSubset open;
    open.space = this;
    open.members = below_[x];
    open.members.set(x);
    open.generators = Bitset(n_);
    open.generators.set(x);
    return open;
}

OpenSubset FinitePoset::open_hull(const Bitset& generators) const {
    if (generators.none()) throw EmptyGenerator("open_hull of an empty generator set");
    OpenSubset open;
    open.space = this;
    open.members = Bitset(n_);
    for (int x = generators.find_first(); x != static_cast<int>(Bitset::npos);
         x = generators.find_next(x)) {
        check(x);
        open.members |= below_[x];
        open.members.set(x);
    }
    open.generators = maximal_elements_of(open.members);
    return open;
}

OpenSubset FinitePoset::open_hull(const std::vector<int>& generators) const {
    Bitset g(n_);
    for (int x : generators) g.set(check(x));
    return open_hull(g);
}

Bitset FinitePoset::down_closure(const Bitset& subset) const {
    Bitset closed = subset;
    for (int x = subset.find_first(); x != static_cast<int>(Bitset::npos);
         x = subset.find_next(x))
        closed |= below_[x];
    return closed;
}

Bitset FinitePoset::maximal_elements_of(const Bitset& subset) const {
    Bitset maxima = subset;
    for (int x = subset.find_first(); x != static_cast<int>(Bitset::npos);
         x = subset.find_next(x))
        maxima &= ~below_[x];
    return maxima;
}

bool FinitePoset::is_down_closed(const Bitset& subset) const {
    return down_closure(subset) == subset;
}

FinitePoset FinitePoset::induced(const Bitset& mask) const {
    if (mask.none()) throw EmptySubset("induced subposet of the empty set");
    std::vector<int> keep;
    for (int x = mask.find_first(); x != static_cast<int>(Bitset::npos); x = mask.find_next(x))
        keep.push_back(x);
    const int m = static_cast<int>(keep.size());
    std::vector<int> pos(n_, -1);
    for (int i = 0; i < m; ++i) pos[keep[i]] = i;

    std::vector<std::string> labels;
    labels.reserve(m);
    std::vector<Bitset> below(m, Bitset(m));
    for (int i = 0; i < m; ++i) {
        labels.push_back(labels_[keep[i]]);
        Bitset row = below_[keep[i]] & mask;
        for (int y = row.find_first(); y != static_cast<int>(Bitset::npos); y = row.find_next(y))
            below[i].set(pos[y]);
    }
    return from_strict_order(std::move(labels), std::move(below));
}

std::vector<Bitset> FinitePoset::components(const Bitset& mask) const {
    if (mask.none()) throw EmptySubset("components of the empty set");
    std::vector<Bitset> result;
    Bitset seen(n_);
    for (int s = mask.find_first(); s != static_cast<int>(Bitset::npos); s = mask.find_next(s)) {
        if (seen.test(s)) continue;
        Bitset comp(n_);
        std::vector<int> stack{s};
        comp.set(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            Bitset nbrs = (below_[x] | above_[x]) & mask & ~comp;
            for (int y = nbrs.find_first(); y != static_cast<int>(Bitset::npos);
                 y = nbrs.find_next(y)) {
                comp.set(y);
                stack.push_back(y);
            }
        }
        seen |= comp;
        result.push_back(std::move(comp));
    }
    return result;
}

bool FinitePoset::connected() const {
    return components(full_mask()).size() == 1;
}

// --- isomorphism -------------------------------------------------------------

namespace {

struct Signature {
    int level, colevel, nbelow, nabove, lcov, ucov;
    auto tie() const { return std::tie(level, colevel, nbelow, nabove, lcov, ucov); }
    bool operator==(const Signature& o) const { return tie() == o.tie(); }
    bool operator<(const Signature& o) const { return tie() < o.tie(); }
};

std::vector<Signature> signatures(const FinitePoset& p) {
    const int n = p.size();
    // colevel = level in the dual (longest Hasse path up to a sink).
    std::vector<int> colevel(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.above(a).count() < p.above(b).count(); });
    for (int x : order) {
        int lv = 0;
        for (int y = p.upper_covers(x).find_first(); y != static_cast<int>(Bitset::npos);
             y = p.upper_covers(x).find_next(y))
            lv = std::max(lv, colevel[y] + 1);
        colevel[x] = lv;
    }
    std::vector<Signature> sig(n);
    for (int x = 0; x < n; ++x)
        sig[x] = {p.level(x),
                  colevel[x],
                  static_cast<int>(p.below(x).count()),
                  static_cast<int>(p.above(x).count()),
                  static_cast<int>(p.lower_covers(x).count()),
                  static_cast<int>(p.upper_covers(x).count())};
    return sig;
}

bool extend(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& order,
            std::size_t depth, const std::vector<std::vector<int>>& candidates,
            std::vector<int>& map_pq, std::vector<char>& used) {
    if (depth == order.size()) return true;
    const int x = order[depth];
    for (int y : candidates[x]) {
        if (used[y]) continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
            const int a = order[d];
            ok = (p.less(a, x) == q.less(map_pq[a], y)) && (p.less(x, a) == q.less(y, map_pq[a]));
        }
        if (!ok) continue;
        map_pq[x] = y;
        used[y] = 1;
        if (extend(p, q, order, depth + 1, candidates, map_pq, used)) return true;
        used[y] = 0;
        map_pq[x] = -1;
    }
    return false;
}

}  // namespace

IsoResult is_isomorphic(const FinitePoset& p, const FinitePoset& q, int size_limit) {
    if (p.size() > size_limit || q.size() > size_limit)
        throw SizeBudgetExceeded("isomorphism test limited to " + std::to_string(size_limit) +
                                 " points");
    IsoResult res;
    if (p.size() != q.size()) return res;
    if (p.height() != q.height() || p.cover_edge_count() != q.cover_edge_count() ||
        p.relation_count() != q.relation_count())
        return res;

    const auto sp = signatures(p);
    const auto sq = signatures(q);
    {
        auto a = sp;
        auto b = sq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (!(a == b)) return res;
    }

    const int n = p.size();
    std::vector<std::vector<int>> candidates(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (sp[x] == sq[y]) candidates[x].push_back(y);

    // Most-constrained element first.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return candidates[a].size() < candidates[b].size();
    });

    std::vector<int> map_pq(n, -1);
    std::vector<char> used(n, 0);
    if (extend(p, q, order, 0, candidates, map_pq, used)) {
        res.isomorphic = true;
        res.mapping = std::move(map_pq);
    }
    return res;
}

// --- families ----------------------------------------------------------------

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count, int base = 1) {
    std::vector<std::string> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(base + i));
    return out;
}

}  // namespace

FinitePoset chain(int n) {
    if (n < 1) throw BadParameter("chain(n) needs n >= 1");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 1; i < n; ++i) pairs.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
    return FinitePoset::from_relations(numbered("c", n), pairs);
}

FinitePoset antichain(int n) {
    if (n < 1) throw BadParameter("antichain(n) needs n >= 1");
    return FinitePoset::from_relations(numbered("p", n), {});
}

FinitePoset fence(int n) {
    if (n < 1) throw BadParameter("fence(n) needs n >= 1");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 1; i < n; ++i) {
        std::string a = "f" + std::to_string(i), b = "f" + std::to_string(i + 1);
        if (i % 2 == 1)
            pairs.emplace_back(a, b);  // f1 < f2, f3 < f4, ...
        else
            pairs.emplace_back(b, a);  // f3 < f2, ...
    }
    return FinitePoset::from_relations(numbered("f", n), pairs);
}

FinitePoset cycle(int two_m) {
    if (two_m < 4 || two_m % 2 != 0) throw BadParameter("cycle(2m) needs an even arity >= 4");
    const int m = two_m / 2;
    std::vector<std::string> labels = numbered("x", m);
    for (const std::string& s : numbered("y", m)) labels.push_back(s);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 1; i <= m; ++i) {
        pairs.emplace_back("y" + std::to_string(i), "x" + std::to_string(i));
        pairs.emplace_back("y" + std::to_string(i % m + 1), "x" + std::to_string(i));
    }
    return FinitePoset::from_relations(labels, pairs);
}

FinitePoset bipartite(int m_min, int n_max) {
    if (m_min < 1 || n_max < 1) throw BadParameter("bipartite(m,n) needs positive parts");
    if (m_min > 26) throw BadParameter("bipartite(m,n) labels one letter per minimal; m <= 26");
    std::vector<std::string> labels;
    for (int i = 0; i < m_min; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)) + "0");
    for (const std::string& s : numbered("x", n_max)) labels.push_back(s);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < m_min; ++i)
        for (int j = 1; j <= n_max; ++j)
            pairs.emplace_back(labels[i], "x" + std::to_string(j));
    return FinitePoset::from_relations(labels, pairs);
}

FinitePoset cone(const FinitePoset& base) {
    std::vector<std::string> labels = base.labels();
    std::string apex = "top";
    while (base.find(apex)) apex += "'";
    labels.push_back(apex);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int x = 0; x < base.size(); ++x) {
        for (int y = base.upper_covers(x).find_first(); y != static_cast<int>(Bitset::npos);
             y = base.upper_covers(x).find_next(y))
            pairs.emplace_back(base.label(x), base.label(y));
        pairs.emplace_back(base.label(x), apex);
    }
    return FinitePoset::from_relations(labels, pairs);
}

FinitePoset c5crowns() {
    std::vector<std::string> labels;
    for (int i = 0; i < 5; ++i) labels.push_back(std::to_string(i));
    for (int i = 0; i < 5; ++i) labels.push_back("d" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int d : {(i + 4) % 5, i, (i + 1) % 5})
            pairs.emplace_back("d" + std::to_string(d), std::to_string(i));
    return FinitePoset::from_relations(labels, pairs);
}

FinitePoset make_family(const std::string& kind, const std::vector<int>& params) {
    auto arity = [&](std::size_t want) {
        if (params.size() != want)
            throw BadParameter("family '" + kind + "' takes " + std::to_string(want) +
                               " parameter(s)");
    };
    if (kind == "chain") {
        arity(1);
        return chain(params[0]);
    }
    if (kind == "antichain") {
        arity(1);
        return antichain(params[0]);
    }
    if (kind == "fence") {
        arity(1);
        return fence(params[0]);
    }
    if (kind == "cycle") {
        arity(1);
        return cycle(params[0]);
    }
    if (kind == "bipartite") {
        arity(2);
        return bipartite(params[0], params[1]);
    }
    if (kind == "c5crowns") {
        arity(0);
        return c5crowns();
    }
    throw BadParameter("unknown family '" + kind + "'");
}

}  // namespace fintopo
