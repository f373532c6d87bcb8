#include "fintopo/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace fintopo {

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::gcat: return "gcat";
        case Mode::gcat_p: return "gcatp";
        case Mode::cat_u: return "catu";
        case Mode::cat_h1: return "cath1";
    }
    return "?";
}

Mode mode_from_string(const std::string& name) {
    if (name == "gcat") return Mode::gcat;
    if (name == "gcatp" || name == "gcat_p") return Mode::gcat_p;
    if (name == "catu" || name == "cat_u") return Mode::cat_u;
    if (name == "cath1" || name == "cat_h1") return Mode::cat_h1;
    throw BadParameter("unknown mode '" + name + "'");
}

bool first_combination(std::vector<int>& c, int n, int k) {
    if (k > n) return false;
    c.resize(k);
    std::iota(c.begin(), c.end(), 0);
    return true;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int j = 0; j < k; ++j) {
        const int limit = (j + 1 < k) ? c[j + 1] : n;
        if (c[j] + 1 < limit) {
            ++c[j];
            std::iota(c.begin(), c.begin() + j, 0);
            return true;
        }
    }
    return false;
}

namespace {

std::uint64_t mask_of(const std::vector<int>& positions) {
    std::uint64_t m = 0;
    for (int p : positions) m |= std::uint64_t{1} << p;
    return m;
}

}  // namespace

CompatibilityOracle::CompatibilityOracle(const FinitePoset& poset, Mode mode) : mode_(mode) {
    if (mode == Mode::cat_u) {
        space_ = core(poset).core;
    } else {
        space_ = poset;
    }
    if (mode == Mode::cat_h1 && poset.height() != 1)
        throw HeightMismatch("cat compatibility needs a height-1 space, got height " +
                             std::to_string(poset.height()));

    if (mode == Mode::gcat || mode == Mode::cat_u) {
        universe_.resize(space_.size());
        std::iota(universe_.begin(), universe_.end(), 0);
    } else {
        const Bitset& mx = space_.maximals();
        for (int x = mx.find_first(); x != static_cast<int>(Bitset::npos); x = mx.find_next(x))
            universe_.push_back(x);
    }
    if (universe_.size() > 64)
        throw SizeBudgetExceeded("compatibility universe larger than 64 elements");
}

Bitset CompatibilityOracle::subset_elements(std::uint64_t subset) const {
    Bitset g(space_.size());
    for (std::uint64_t rest = subset; rest;) {
        const int p = std::countr_zero(rest);
        rest &= rest - 1;
        g.set(universe_.at(p));
    }
    return g;
}

std::vector<std::string> CompatibilityOracle::subset_labels(std::uint64_t subset) const {
    std::vector<std::string> out;
    for (std::uint64_t rest = subset; rest;) {
        const int p = std::countr_zero(rest);
        rest &= rest - 1;
        out.push_back(space_.label(universe_.at(p)));
    }
    return out;
}

bool CompatibilityOracle::compatible(std::uint64_t subset) {
    if (!subset) return true;  // sigma(empty) = 0 by convention
    auto hit = memo_.find(subset);
    if (hit != memo_.end()) return hit->second;
    ++stats_.evaluations;

    bool ok;
    const Bitset generators = subset_elements(subset);
    if (mode_ == Mode::cat_h1) {
        // Contractible in X at height 1: no cycle, i.e. U_J is a forest.
        const OpenSubset open = space_.open_hull(generators);
        std::size_t edges = 0;
        Bitset tops = open.members & space_.maximals();
        for (int x = tops.find_first(); x != static_cast<int>(Bitset::npos);
             x = tops.find_next(x))
            edges += (space_.lower_covers(x) & open.members).count();
        const auto comps = space_.components(open.members);
        ok = edges == open.members.count() - comps.size();
    } else {
        ok = is_compatible(space_, generators);
    }
    memo_.emplace(subset, ok);
    return ok;
}

CompatibilityTable enumerate_compatibility(const FinitePoset& poset, Mode mode, int max_length,
                                           const CompatibilitySearchBudget& budget) {
    CompatibilityOracle oracle(poset, mode);
    const int n = oracle.universe_size();
    if (max_length < 0 || max_length > n)
        throw BadParameter("max_length must lie in [0, universe size]");

    double planned = 0;
    {
        double binom = 1;
        for (int j = 1; j <= max_length; ++j) {
            binom = binom * (n - j + 1) / j;
            planned += binom;
        }
    }
    if (planned > static_cast<double>(budget.max_subsets))
        throw BudgetExceeded("enumeration of " + std::to_string(static_cast<long long>(planned)) +
                             " subsets exceeds the cap of " +
                             std::to_string(budget.max_subsets));

    CompatibilityTable table;
    table.universe = oracle.universe();
    for (int e : table.universe) table.universe_labels.push_back(oracle.space().label(e));
    table.complete_up_to = max_length;

    std::vector<int> comb;
    for (int k = 1; k <= max_length; ++k) {
        if (!first_combination(comb, n, k)) break;
        do {
            const std::uint64_t m = mask_of(comb);
            table.entries[m] = oracle.compatible(m);
        } while (next_combination(comb, n));
    }
    return table;
}

std::vector<std::vector<std::string>> CoverReport::cover_labels() const {
    std::vector<std::vector<std::string>> out;
    for (std::uint64_t member : cover) {
        std::vector<std::string> labels;
        for (std::uint64_t rest = member; rest;) {
            const int p = std::countr_zero(rest);
            rest &= rest - 1;
            labels.push_back(space.label(universe.at(p)));
        }
        out.push_back(std::move(labels));
    }
    return out;
}

namespace {

CoverReport report_from(CompatibilityOracle& oracle, Mode mode) {
    CoverReport r;
    r.mode = mode;
    r.space = oracle.space();
    r.universe = oracle.universe();
    return r;
}

// Witness cover: one compatible block plus the remaining singletons.
void block_plus_singletons(CoverReport& r, std::uint64_t block, int n) {
    if (block) r.cover.push_back(block);
    for (int p = 0; p < n; ++p)
        if (!(block >> p & 1)) r.cover.push_back(std::uint64_t{1} << p);
    r.bound = static_cast<int>(r.cover.size());
}

}  // namespace

CoverReport u_algorithm(const FinitePoset& poset, Mode mode, int stop_length) {
    CompatibilityOracle oracle(poset, mode);
    const int n = oracle.universe_size();
    if (stop_length < 2 || stop_length > n)
        throw BadParameter("u_algorithm needs 2 <= stop_length <= universe size");

    int best_k = 0;
    std::uint64_t best_witness = 0;
    std::vector<int> comb;
    for (int k = 2; k <= stop_length; ++k) {
        bool found = false;
        std::uint64_t witness = 0;
        first_combination(comb, n, k);
        do {
            const std::uint64_t m = mask_of(comb);
            if (oracle.compatible(m) && !found) {
                found = true;
                witness = m;  // colex-least compatible subset of this length
            }
        } while (next_combination(comb, n));
        if (found) {
            best_k = k;
            best_witness = witness;
        }
    }

    CoverReport r = report_from(oracle, mode);
    block_plus_singletons(r, best_witness, n);
    const bool full_run = stop_length == n;
    r.is_exact = (best_k == n) || (best_k == n - 1 && full_run) || (best_k == 0 && full_run);
    r.bound_kind = r.is_exact ? BoundKind::exact : BoundKind::upper;
    r.stats = oracle.stats();
    return r;
}

CoverReport d_algorithm(const FinitePoset& poset, Mode mode, int stop_length) {
    CompatibilityOracle oracle(poset, mode);
    const int n = oracle.universe_size();
    if (stop_length < 1 || stop_length > n)
        throw BadParameter("d_algorithm needs 1 <= stop_length <= universe size");

    int found_k = 0;
    std::uint64_t witness = 0;
    std::vector<int> comb;
    for (int k = n; k >= stop_length && !found_k; --k) {
        first_combination(comb, n, k);
        do {
            const std::uint64_t m = mask_of(comb);
            if (oracle.compatible(m)) {
                found_k = k;
                witness = m;
                break;  // the bound cannot improve at smaller lengths
            }
        } while (next_combination(comb, n));
    }

    CoverReport r = report_from(oracle, mode);
    block_plus_singletons(r, witness, n);
    r.is_exact = found_k == n || found_k == n - 1 || found_k == 1;
    r.bound_kind = r.is_exact ? BoundKind::exact : BoundKind::upper;
    r.stats = oracle.stats();
    return r;
}

CoverReport heuristic1(const FinitePoset& poset, Mode mode, const Heuristic1Options& options) {
    CompatibilityOracle oracle(poset, mode);
    const int n = oracle.universe_size();

    std::vector<int> order = options.ordering;
    if (order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    } else {
        std::vector<char> seen(n, 0);
        if (static_cast<int>(order.size()) != n)
            throw BadParameter("heuristic1 ordering must cover the whole universe");
        for (int p : order) {
            if (p < 0 || p >= n || seen[p])
                throw BadParameter("heuristic1 ordering is not a permutation");
            seen[p] = 1;
        }
    }

    CoverReport r = report_from(oracle, mode);
    if (!options.skip_one) {
        std::size_t s = 0;
        while (s < order.size()) {
            std::uint64_t block = std::uint64_t{1} << order[s];
            std::size_t t = s + 1;
            while (t < order.size() && oracle.compatible(block | std::uint64_t{1} << order[t])) {
                block |= std::uint64_t{1} << order[t];
                ++t;
            }
            r.cover.push_back(block);
            s = t;
        }
    } else {
        std::vector<int> remaining = order;
        while (!remaining.empty()) {
            std::uint64_t block = std::uint64_t{1} << remaining.front();
            std::vector<int> rest;
            for (std::size_t i = 1; i < remaining.size(); ++i) {
                const std::uint64_t candidate = block | std::uint64_t{1} << remaining[i];
                if (oracle.compatible(candidate))
                    block = candidate;
                else
                    rest.push_back(remaining[i]);
            }
            r.cover.push_back(block);
            remaining = std::move(rest);
        }
    }
    r.bound = static_cast<int>(r.cover.size());
    r.is_exact = false;
    r.bound_kind = BoundKind::upper;
    r.stats = oracle.stats();
    return r;
}

CoverReport heuristic2(const FinitePoset& poset, Mode mode, int k,
                       const Heuristic2Options& options) {
    CompatibilityOracle oracle(poset, mode);
    const int n = oracle.universe_size();
    if (k < 1 || 2 * k >= n) throw BadParameter("heuristic2 needs 1 <= k < n/2");

    // Compatible family, default order: size descending, colex within a size.
    std::vector<std::uint64_t> family;
    std::vector<int> comb;
    for (int size = k; size >= 1; --size) {
        first_combination(comb, n, size);
        do {
            const std::uint64_t m = mask_of(comb);
            if (oracle.compatible(m)) family.push_back(m);
        } while (next_combination(comb, n));
    }
    if (!options.preferred.empty()) {
        std::vector<std::uint64_t> arranged;
        for (std::uint64_t m : options.preferred) {
            auto it = std::find(family.begin(), family.end(), m);
            if (it != family.end()) {
                arranged.push_back(m);
                family.erase(it);
            }
        }
        arranged.insert(arranged.end(), family.begin(), family.end());
        family = std::move(arranged);
    }

    const std::uint64_t universe_mask =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    CoverReport r = report_from(oracle, mode);
    std::uint64_t covered = 0;
    while (covered != universe_mask) {
        bool advanced = false;
        for (std::uint64_t m : family) {
            const bool take = options.variant == Heuristic2Options::Variant::disjoint
                                  ? (m & covered) == 0
                                  : (m & ~covered) != 0;
            if (take) {
                r.cover.push_back(m);
                covered |= m;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw Error("heuristic2 could not extend its cover");  // unreachable: singletons
    }
    r.bound = static_cast<int>(r.cover.size());
    r.is_exact = false;
    r.bound_kind = BoundKind::upper;
    r.stats = oracle.stats();
    return r;
}

}  // namespace fintopo
