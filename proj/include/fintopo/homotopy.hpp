// Beat-point detection and the contractibility test: repeatedly strip beat
// points until none remain, yielding the core (the minimal deformation
// retract, unique up to isomorphism within a homotopy type). Contractibility,
// compatibility of generator sets, and homotopy equivalence all reduce to it.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fintopo/poset.hpp"

namespace fintopo {

enum class BeatKind { up, down, both };

// A point with exactly one cover above (up) or below (down). For kind both
// the point is treated as an up beat point first, so the witness is the
// unique upper cover; for down it is the unique lower cover.
struct BeatPointReport {
    int point = -1;
    BeatKind kind = BeatKind::up;
    int witness = -1;
    std::string point_label;
    std::string witness_label;
};

const char* to_string(BeatKind kind);

// All current beat points, ascending by index. A one-point poset has none.
std::vector<BeatPointReport> find_beat_points(const FinitePoset& poset);

// Removes one beat point after revalidating the report against the poset
// (throws StaleBeatPoint if the point no longer qualifies as described).
FinitePoset remove_beat_point(const FinitePoset& poset, const BeatPointReport& report);

struct CoreOptions {
    // Beat-point selection: lowest index (deterministic default) or a
    // seed-controlled random choice, used by the order-independence tests.
    enum class Order { lowest_index, seeded } order = Order::lowest_index;
    std::uint64_t seed = 0;
    // Update covers around the removed point instead of recomputing the full
    // transitive reduction; same results, fewer operations per step.
    bool incremental_reduction = false;
};

struct CoreResult {
    FinitePoset core;
    std::vector<BeatPointReport> trace;  // indices refer to the input poset
    std::vector<int> embedding;          // core index -> input index
};

// The contractibility-test loop: find a beat point, remove it, repeat.
// Disconnected inputs are fine; every component reduces to its own core.
CoreResult core(const FinitePoset& poset, const CoreOptions& options = {});

// True iff the poset is connected and its core is a single point.
bool is_contractible(const FinitePoset& poset);

// A generator set J is compatible when U_J is contractible in itself.
bool is_compatible(const FinitePoset& poset, const Bitset& generators);
bool is_compatible(const FinitePoset& poset, const std::vector<int>& generators);

// Compares cores up to isomorphism. Throws SizeBudgetExceeded when a core
// exceeds the limit.
bool homotopy_equivalent(const FinitePoset& p, const FinitePoset& q, int iso_limit = 16);

}  // namespace fintopo
