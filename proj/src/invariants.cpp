#include "fintopo/invariants.hpp"

#include <bit>
#include <map>

#include "fintopo/height_one.hpp"
#include "fintopo/homotopy.hpp"

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
        const int x = std::countr_zero(rest);
        rest &= rest - 1;
        b.set(x);
    }
    return b;
}

void enumerate_antichains(const std::vector<std::uint64_t>& comparable, int n, int from,
                          std::uint64_t current, std::vector<std::uint64_t>& out,
                          std::size_t cap) {
    for (int e = from; e < n; ++e) {
        if (current & comparable[e]) continue;
        const std::uint64_t next = current | std::uint64_t{1} << e;
        if (out.size() >= cap)
            throw BudgetExceeded("antichain candidate pool exceeds " + std::to_string(cap));
        out.push_back(next);
        enumerate_antichains(comparable, n, e + 1, next, out, cap);
    }
}

struct CandidatePool {
    std::vector<std::uint64_t> generators;
    std::vector<std::uint64_t> members;  // compatible opens only, same index
};

// All compatible open sets as (antichain, members) pairs; prime_only keeps J
// within Max(X). Throws BudgetExceeded past max_candidates or 64 elements.
CandidatePool collect_candidates(const FinitePoset& poset, bool prime_only,
                                 std::size_t max_candidates) {
    const int n = poset.size();
    if (n > 64) throw BudgetExceeded("exact search limited to 64 elements");

    std::vector<std::uint64_t> down(n);
    for (int x = 0; x < n; ++x) down[x] = to_u64(poset.below(x)) | std::uint64_t{1} << x;

    std::vector<std::uint64_t> raw;
    if (prime_only) {
        std::vector<int> max_list;
        const Bitset& mx = poset.maximals();
        for (int x = mx.find_first(); x != static_cast<int>(Bitset::npos); x = mx.find_next(x))
            max_list.push_back(x);
        const int m = static_cast<int>(max_list.size());
        if (m >= 63 || (std::uint64_t{1} << m) - 1 > max_candidates)
            throw BudgetExceeded("prime candidate pool exceeds " + std::to_string(max_candidates));
        for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << m); ++sub) {
            std::uint64_t gens = 0;
            for (std::uint64_t rest = sub; rest;) {
                const int p = std::countr_zero(rest);
                rest &= rest - 1;
                gens |= std::uint64_t{1} << max_list[p];
            }
            raw.push_back(gens);
        }
    } else {
        std::vector<std::uint64_t> comparable(n);
        for (int x = 0; x < n; ++x) comparable[x] = to_u64(poset.below(x)) | to_u64(poset.above(x));
        enumerate_antichains(comparable, n, 0, 0, raw, max_candidates);
    }

    CandidatePool pool;
    for (std::uint64_t gens : raw) {
        std::uint64_t members = 0;
        for (std::uint64_t rest = gens; rest;) {
            const int x = std::countr_zero(rest);
            rest &= rest - 1;
            members |= down[x];
        }
        if (is_contractible(poset.induced(to_bitset(members, n)))) {
            pool.generators.push_back(gens);
            pool.members.push_back(members);
        }
    }
    return pool;
}

ExactCoverResult exact_cover(const FinitePoset& poset, bool prime_only,
                             const InvariantBudget& budget) {
    const int n = poset.size();
    if (n > budget.max_elements)
        throw BudgetExceeded("exact mode limited to " + std::to_string(budget.max_elements) +
                             " elements (got " + std::to_string(n) + ")");
    const CandidatePool pool = collect_candidates(poset, prime_only, budget.max_candidates);
    const std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const SetCoverResult cover = min_set_cover(universe, pool.members, budget.solver);
    if (!cover.exact) throw BudgetExceeded("set-cover solver ran out of nodes");

    ExactCoverResult result;
    result.value = cover.size;
    result.space = poset;
    for (int i : cover.chosen) {
        result.cover_generators.push_back(to_bitset(pool.generators[i], n));
        result.cover_members.push_back(to_bitset(pool.members[i], n));
    }
    return result;
}

// Sound lower bound given a complete candidate pool: greedily pick elements
// no single candidate covers two of; any cover needs one set per pick.
int co_coverage_lower(int n, const std::vector<std::uint64_t>& members) {
    std::uint64_t picked = 0;
    int count = 0;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (std::uint64_t m : members) {
            if ((m >> e & 1) && (m & picked)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            picked |= std::uint64_t{1} << e;
            ++count;
        }
    }
    return count;
}

BoundValue bounded_invariant(const FinitePoset& space, bool prime_only,
                             const InvariantBudget& budget,
                             std::optional<ExactCoverResult>& witness, bool& budget_hit) {
    try {
        ExactCoverResult r = exact_cover(space, prime_only, budget);
        witness = r;
        return {r.value, r.value};
    } catch (const BudgetExceeded&) {
        budget_hit = true;
    }

    // Interval fallback: covering Max(X) by its minimal open sets is always
    // valid, so |Max| is a sound upper bound; heuristic1 usually beats it.
    int upper = static_cast<int>(space.maximals().count());
    int lower = 1;
    if (space.size() <= 64) {
        try {
            const CoverReport h1 = heuristic1(space, prime_only ? Mode::gcat_p : Mode::gcat);
            upper = std::min(upper, h1.bound);
        } catch (const Error&) {
        }
        try {
            const CandidatePool pool = collect_candidates(space, prime_only, budget.max_candidates);
            lower = std::max(lower, co_coverage_lower(space.size(), pool.members));
            const std::uint64_t universe =
                space.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << space.size()) - 1;
            const auto greedy = greedy_set_cover(universe, pool.members);
            if (!greedy.empty()) upper = std::min(upper, static_cast<int>(greedy.size()));
        } catch (const BudgetExceeded&) {
            // pool incomplete: nothing sounder than lower = 1
        }
    }
    return {lower, upper};
}

}  // namespace

std::vector<std::vector<std::string>> ExactCoverResult::cover_labels() const {
    std::vector<std::vector<std::string>> out;
    for (const Bitset& gens : cover_generators) {
        std::vector<std::string> labels;
        for (int x = gens.find_first(); x != static_cast<int>(Bitset::npos);
             x = gens.find_next(x))
            labels.push_back(space.label(x));
        out.push_back(std::move(labels));
    }
    return out;
}

ExactCoverResult gcat_exact(const FinitePoset& poset, const InvariantBudget& budget) {
    return exact_cover(poset, /*prime_only=*/false, budget);
}

ExactCoverResult gcat_p_exact(const FinitePoset& poset, const InvariantBudget& budget) {
    return exact_cover(poset, /*prime_only=*/true, budget);
}

ExactCoverResult cat_u(const FinitePoset& poset, const InvariantBudget& budget) {
    return gcat_exact(core(poset).core, budget);
}

std::vector<Bitset> prime_refinement(const FinitePoset& poset,
                                     const std::vector<Bitset>& cover_members) {
    std::vector<Bitset> refined;
    for (const Bitset& member : cover_members) {
        Bitset tops = member & poset.maximals();
        if (tops.none()) continue;
        refined.push_back(poset.open_hull(tops).members);
    }
    return refined;
}

InvariantReport invariant_chain_report(const FinitePoset& poset, const InvariantBudget& budget) {
    InvariantReport report;
    report.max_all = static_cast<int>(poset.maximals().count());
    const FinitePoset core_space = core(poset).core;
    report.max_core = static_cast<int>(core_space.maximals().count());

    report.gcat = bounded_invariant(poset, false, budget, report.gcat_witness, report.budget_hit);
    report.gcat_p =
        bounded_invariant(poset, true, budget, report.gcat_p_witness, report.budget_hit);
    report.cat_u =
        bounded_invariant(core_space, false, budget, report.cat_u_witness, report.budget_hit);

    if (poset.connected() && core_space.height() <= 1) {
        try {
            ExactCoverResult h1 = cat_height1(poset, budget);
            report.cat_h1 = BoundValue{h1.value, h1.value};
            report.cat_h1_witness = std::move(h1);
        } catch (const BudgetExceeded&) {
            report.budget_hit = true;
        }
    }

    if (report.cat_u.exact() && report.gcat_p.exact()) {
        const bool chain_ok = report.cat_u.upper <= report.gcat_p.upper &&
                              report.gcat_p.upper <= report.max_core &&
                              report.max_core <= report.max_all;
        if (!chain_ok) throw Error("invariant chain violated (internal error)");
        if (report.cat_h1 && report.cat_h1->exact() && report.cat_h1->upper > report.cat_u.upper)
            throw Error("cat exceeds Cat_u (internal error)");
    }
    return report;
}

}  // namespace fintopo
