#include "fintopo/homotopy.hpp"

#include <random>

namespace fintopo {

const char* to_string(BeatKind kind) {
    switch (kind) {
        case BeatKind::up: return "up";
        case BeatKind::down: return "down";
        case BeatKind::both: return "both";
    }
    return "?";
}

namespace {

BeatPointReport make_report(const FinitePoset& poset, int x, int ucov, int lcov,
                            const Bitset& upper, const Bitset& lower) {
    BeatPointReport r;
    r.point = x;
    r.point_label = poset.label(x);
    if (ucov == 1) {
        r.kind = (lcov == 1) ? BeatKind::both : BeatKind::up;
        r.witness = static_cast<int>(upper.find_first());
    } else {
        r.kind = BeatKind::down;
        r.witness = static_cast<int>(lower.find_first());
    }
    r.witness_label = poset.label(r.witness);
    return r;
}

}  // namespace

std::vector<BeatPointReport> find_beat_points(const FinitePoset& poset) {
    std::vector<BeatPointReport> out;
    for (int x = 0; x < poset.size(); ++x) {
        const int ucov = static_cast<int>(poset.upper_covers(x).count());
        const int lcov = static_cast<int>(poset.lower_covers(x).count());
        if (ucov == 1 || lcov == 1)
            out.push_back(
                make_report(poset, x, ucov, lcov, poset.upper_covers(x), poset.lower_covers(x)));
    }
    return out;
}

FinitePoset remove_beat_point(const FinitePoset& poset, const BeatPointReport& report) {
    if (report.point < 0 || report.point >= poset.size())
        throw StaleBeatPoint("beat point index out of range");
    if (!report.point_label.empty() && poset.label(report.point) != report.point_label)
        throw StaleBeatPoint("beat point label mismatch at index " + std::to_string(report.point));
    const Bitset& upper = poset.upper_covers(report.point);
    const Bitset& lower = poset.lower_covers(report.point);
    const bool up_ok = upper.count() == 1 && static_cast<int>(upper.find_first()) == report.witness;
    const bool down_ok =
        lower.count() == 1 && static_cast<int>(lower.find_first()) == report.witness;
    switch (report.kind) {
        case BeatKind::up:
            if (!up_ok) throw StaleBeatPoint("'" + report.point_label + "' is not an up beat point");
            break;
        case BeatKind::down:
            if (!down_ok)
                throw StaleBeatPoint("'" + report.point_label + "' is not a down beat point");
            break;
        case BeatKind::both:
            if (!up_ok || lower.count() != 1)
                throw StaleBeatPoint("'" + report.point_label + "' is not a two-sided beat point");
            break;
    }
    Bitset mask = poset.full_mask();
    mask.reset(report.point);
    return poset.induced(mask);
}

CoreResult core(const FinitePoset& poset, const CoreOptions& options) {
    const int n = poset.size();
    Bitset alive = poset.full_mask();

    // Covers maintained over the original index space, restricted to alive.
    std::vector<Bitset> lower(n), upper(n);
    for (int x = 0; x < n; ++x) {
        lower[x] = poset.lower_covers(x);
        upper[x] = poset.upper_covers(x);
    }

    auto recompute_covers = [&]() {
        for (int x = alive.find_first(); x != static_cast<int>(Bitset::npos);
             x = alive.find_next(x)) {
            Bitset strict = poset.below(x) & alive;
            Bitset reachable(n);
            for (int z = strict.find_first(); z != static_cast<int>(Bitset::npos);
                 z = strict.find_next(z))
                reachable |= poset.below(z);
            lower[x] = strict & ~reachable;
        }
        for (int x = alive.find_first(); x != static_cast<int>(Bitset::npos);
             x = alive.find_next(x)) {
            upper[x].reset();
            for (int y = alive.find_first(); y != static_cast<int>(Bitset::npos);
                 y = alive.find_next(y))
                if (lower[y].test(x)) upper[x].set(y);
        }
    };

    // Splice covers around b: pairs (l, u) through b become covers unless a
    // surviving intermediate witnesses l < z < u.
    auto splice_covers = [&](int b) {
        const Bitset lows = lower[b];
        const Bitset ups = upper[b];
        for (int l = lows.find_first(); l != static_cast<int>(Bitset::npos);
             l = lows.find_next(l)) {
            upper[l].reset(b);
            for (int u = ups.find_first(); u != static_cast<int>(Bitset::npos);
                 u = ups.find_next(u)) {
                Bitset between = poset.above(l) & poset.below(u) & alive;
                if (between.none()) {
                    upper[l].set(u);
                    lower[u].set(l);
                }
            }
        }
        for (int u = ups.find_first(); u != static_cast<int>(Bitset::npos); u = ups.find_next(u))
            lower[u].reset(b);
        lower[b].reset();
        upper[b].reset();
    };

    std::mt19937_64 rng(options.seed);
    CoreResult result;
    while (true) {
        std::vector<int> beats;
        for (int x = alive.find_first(); x != static_cast<int>(Bitset::npos);
             x = alive.find_next(x))
            if (upper[x].count() == 1 || lower[x].count() == 1) beats.push_back(x);
        if (beats.empty()) break;

        int pick = beats.front();
        if (options.order == CoreOptions::Order::seeded && beats.size() > 1) {
            std::uniform_int_distribution<std::size_t> dist(0, beats.size() - 1);
            pick = beats[dist(rng)];
        }
        result.trace.push_back(make_report(poset, pick, static_cast<int>(upper[pick].count()),
                                           static_cast<int>(lower[pick].count()), upper[pick],
                                           lower[pick]));
        alive.reset(pick);
        if (options.incremental_reduction)
            splice_covers(pick);
        else
            recompute_covers();
    }

    for (int x = alive.find_first(); x != static_cast<int>(Bitset::npos); x = alive.find_next(x))
        result.embedding.push_back(x);
    result.core = poset.induced(alive);
    return result;
}

bool is_contractible(const FinitePoset& poset) {
    if (!poset.connected()) return false;
    return core(poset).core.size() == 1;
}

bool is_compatible(const FinitePoset& poset, const Bitset& generators) {
    OpenSubset open = poset.open_hull(generators);
    return is_contractible(poset.induced(open.members));
}

bool is_compatible(const FinitePoset& poset, const std::vector<int>& generators) {
    if (generators.empty()) throw EmptyGenerator("compatibility of an empty generator set");
    Bitset g(poset.size());
    for (int x : generators) g.set(x);
    return is_compatible(poset, g);
}

bool homotopy_equivalent(const FinitePoset& p, const FinitePoset& q, int iso_limit) {
    const FinitePoset cp = core(p).core;
    const FinitePoset cq = core(q).core;
    return is_isomorphic(cp, cq, iso_limit).isomorphic;
}

}  // namespace fintopo
