#include <doctest.h>

#include <random>
#include <set>

#include "fintopo/poset.hpp"
#include "support.hpp"

using namespace fintopo;
using testsupport::brute_reduction;
using testsupport::enumerate_posets;
using testsupport::random_poset;
using testsupport::shuffled_copy;

namespace {

Bitset mask_of(const FinitePoset& p, std::initializer_list<int> elems) {
    Bitset m(p.size());
    for (int e : elems) m.set(e);
    return m;
}

}  // namespace

TEST_CASE("from_relations drops redundant pairs via reduction") {
    const auto p = FinitePoset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(p.cover_edge_count() == 2);
    CHECK(p.covers(0, 1));
    CHECK(p.covers(1, 2));
    CHECK(!p.covers(0, 2));
    CHECK(p.less(0, 2));
}

TEST_CASE("one-point poset") {
    const auto p = FinitePoset::from_relations({"a"}, {});
    CHECK(p.size() == 1);
    CHECK(p.height() == 0);
}

TEST_CASE("ingestion errors") {
    CHECK_THROWS_AS(FinitePoset::from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                    CycleDetected);
    CHECK_THROWS_AS(FinitePoset::from_relations({"a", "a"}, {}), DuplicateLabel);
    CHECK_THROWS_AS(FinitePoset::from_relations({"a"}, {{"a", "z"}}), UnknownLabel);
    CHECK_THROWS_AS(FinitePoset::from_relations({"a"}, {{"a", "a"}}), CycleDetected);
}

TEST_CASE("transitive reduction of a chain closure") {
    std::vector<std::pair<std::string, std::string>> pairs;
    const std::vector<std::string> labels{"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) pairs.emplace_back(labels[i], labels[j]);
    const auto p = FinitePoset::from_relations(labels, pairs);
    CHECK(p.cover_edge_count() == 3);
}

TEST_CASE("transitive reduction of the diamond keeps 4 covers") {
    const auto p = FinitePoset::from_relations(
        {"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"a", "d"}});
    CHECK(p.cover_edge_count() == 4);
    CHECK(!p.covers(0, 3));
}

TEST_CASE("reduction agrees with the delete-an-edge oracle on random DAGs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_poset(rng, 2 + static_cast<int>(rng() % 7), 0.4);
        std::set<std::pair<int, int>> via_oracle;
        for (auto e : brute_reduction(p)) via_oracle.insert(e);
        std::set<std::pair<int, int>> via_poset;
        for (int x = 0; x < p.size(); ++x)
            for (int y = p.upper_covers(x).find_first(); y != static_cast<int>(Bitset::npos);
                 y = p.upper_covers(x).find_next(y))
                via_poset.emplace(x, y);
        CHECK(via_oracle == via_poset);
    }
}

TEST_CASE("minimal open sets") {
    const auto c3 = chain(3);
    CHECK(c3.min_open_set(2).members.count() == 3);
    const auto a4 = antichain(4);
    for (int x = 0; x < 4; ++x) CHECK(a4.min_open_set(x).members.count() == 1);
    CHECK_THROWS_AS(a4.min_open_set(9), IndexOutOfRange);

    const auto b23 = bipartite(2, 3);
    const int x1 = *b23.find("x1");
    const auto open = b23.min_open_set(x1);
    CHECK(open.members.count() == 3);
    CHECK(open.members.test(*b23.find("a0")));
    CHECK(open.members.test(*b23.find("b0")));
}

TEST_CASE("open hull basics") {
    const auto b22 = bipartite(2, 2);
    Bitset both(b22.size());
    both.set(*b22.find("x1"));
    both.set(*b22.find("x2"));
    CHECK(b22.open_hull(both).members == b22.full_mask());
    CHECK_THROWS_AS(b22.open_hull(Bitset(b22.size())), EmptyGenerator);

    const auto c3 = chain(3);
    const auto single = c3.open_hull(mask_of(c3, {1}));
    CHECK(single.members == c3.min_open_set(1).members);
}

TEST_CASE("hulls with the same down-set coincide, generators are antichains") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        const auto p = random_poset(rng, 6, 0.4);
        std::map<std::vector<int>, Bitset> canon;
        for (std::uint64_t sub = 1; sub < 64; ++sub) {
            Bitset gens(6);
            for (int i = 0; i < 6; ++i)
                if (sub >> i & 1) gens.set(i);
            const auto open = p.open_hull(gens);
            // generators form an antichain of the maximal members
            CHECK(open.generators == p.maximal_elements_of(open.members));
            CHECK(p.is_down_closed(open.members));
            std::vector<int> key;
            for (int x = open.members.find_first(); x != static_cast<int>(Bitset::npos);
                 x = open.members.find_next(x))
                key.push_back(x);
            auto [it, fresh] = canon.emplace(key, open.generators);
            if (!fresh) CHECK(it->second == open.generators);
        }
    }
}

TEST_CASE("structure queries") {
    const auto c4 = chain(4);
    CHECK(c4.height() == 3);
    for (int x = 0; x < 4; ++x) CHECK(c4.level(x) == x);

    const auto b25 = bipartite(2, 5);
    CHECK(b25.height() == 1);
    CHECK(b25.maximals().count() == 5);
    CHECK(b25.minimals().count() == 2);

    const auto c6 = cycle(6);
    CHECK(c6.height() == 1);
    CHECK(c6.maximals().count() == 3);
    CHECK(c6.minimals().count() == 3);
}

TEST_CASE("induced subposet recovers skipped covers") {
    const auto c3 = chain(3);
    Bitset keep = c3.full_mask();
    keep.reset(1);
    const auto reduced = c3.induced(keep);
    CHECK(reduced.size() == 2);
    CHECK(reduced.covers(0, 1));
    CHECK_THROWS_AS(c3.induced(Bitset(3)), EmptySubset);

    const auto copy = c3.induced(c3.full_mask());
    CHECK(copy.size() == 3);
    CHECK(is_isomorphic(copy, c3).isomorphic);
}

TEST_CASE("induced commutes with closure on all 5-point posets") {
    int checked = 0;
    enumerate_posets(5, [&](const FinitePoset& p) {
        for (std::uint64_t sub = 1; sub < 32; ++sub) {
            Bitset mask(5);
            for (int i = 0; i < 5; ++i)
                if (sub >> i & 1) mask.set(i);
            const auto q = p.induced(mask);
            // closure(induced) == restrict(closure)
            std::vector<int> keep;
            for (int x = mask.find_first(); x != static_cast<int>(Bitset::npos);
                 x = mask.find_next(x))
                keep.push_back(x);
            for (std::size_t i = 0; i < keep.size(); ++i)
                for (std::size_t j = 0; j < keep.size(); ++j)
                    if (i != j)
                        CHECK(q.less(static_cast<int>(i), static_cast<int>(j)) ==
                              p.less(keep[i], keep[j]));
        }
        ++checked;
    });
    CHECK(checked == 357);  // naturally-labeled posets on 5 elements
}

TEST_CASE("connected components") {
    const auto a3 = antichain(3);
    CHECK(a3.components(a3.full_mask()).size() == 3);
    const auto c4 = cycle(4);
    CHECK(c4.components(c4.full_mask()).size() == 1);

    const auto b23 = bipartite(2, 3);
    Bitset without = b23.full_mask();
    without.reset(*b23.find("a0"));
    CHECK(b23.components(without).size() == 1);
}

TEST_CASE("isomorphism basics") {
    const auto c3 = chain(3);
    const auto relabeled = FinitePoset::from_relations({"z", "y", "x"}, {{"z", "y"}, {"y", "x"}});
    CHECK(is_isomorphic(c3, relabeled).isomorphic);
    CHECK(!is_isomorphic(c3, antichain(3)).isomorphic);
    CHECK(is_isomorphic(cycle(4), bipartite(2, 2)).isomorphic);
    CHECK_THROWS_AS(is_isomorphic(chain(17), chain(17)), SizeBudgetExceeded);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const auto p = random_poset(rng, 7, 0.35);
        const auto q = shuffled_copy(rng, p);
        const auto iso = is_isomorphic(p, q);
        REQUIRE(iso.isomorphic);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y)
                CHECK(p.less(x, y) == q.less(iso.mapping[x], iso.mapping[y]));
    }
}

TEST_CASE("family constructors") {
    const auto b24 = bipartite(2, 4);
    CHECK(b24.size() == 6);
    CHECK(b24.cover_edge_count() == 8);

    const auto c4 = cycle(4);
    CHECK(c4.size() == 4);
    CHECK(c4.relation_count() == 4);

    const auto crowns = c5crowns();
    CHECK(crowns.size() == 10);
    CHECK(crowns.cover_edge_count() == 15);
    CHECK(crowns.height() == 1);

    const auto f3 = fence(3);
    CHECK(f3.height() == 1);
    CHECK(f3.maximals().count() == 1);

    CHECK_THROWS_AS(cycle(5), BadParameter);
    CHECK_THROWS_AS(cycle(2), BadParameter);
    CHECK_THROWS_AS(chain(0), BadParameter);
    CHECK_THROWS_AS(make_family("nope", {}), BadParameter);
    CHECK(make_family("bipartite", {2, 3}).size() == 5);

    const auto k = cone(cycle(4));
    CHECK(k.size() == 5);
    CHECK(k.maximals().count() == 1);
    CHECK(k.height() == 2);
}

TEST_CASE("ordering matches open-set containment") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_poset(rng, 8, 0.3);
        for (int x = 0; x < p.size(); ++x) {
            const auto ux = p.min_open_set(x);
            CHECK(p.is_down_closed(ux.members));
            CHECK(ux.members.test(x));
            for (int y = 0; y < p.size(); ++y) {
                const auto uy = p.min_open_set(y);
                const bool contained = (ux.members & ~uy.members).none();
                CHECK(contained == (x == y || p.less(x, y)));
            }
        }
    }
}

TEST_CASE("reduction is idempotent through closure") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_poset(rng, 7, 0.4);
        // Rebuild from the covers: closure then reduction must give the same covers.
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int x = 0; x < p.size(); ++x)
            for (int y = p.upper_covers(x).find_first(); y != static_cast<int>(Bitset::npos);
                 y = p.upper_covers(x).find_next(y))
                pairs.emplace_back(p.label(x), p.label(y));
        const auto q = FinitePoset::from_relations(p.labels(), pairs);
        for (int x = 0; x < p.size(); ++x) {
            CHECK(q.upper_covers(x) == p.upper_covers(x));
            CHECK(q.below(x) == p.below(x));
        }
    }
}
