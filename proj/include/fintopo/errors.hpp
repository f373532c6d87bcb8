// Error types thrown across the library. All derive from fintopo::Error so a
// caller (the CLI in particular) can map them onto exit codes in one place.

#pragma once

#include <stdexcept>
#include <string>

namespace fintopo {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

struct DuplicateLabel : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    using Error::Error;
};

struct CycleDetected : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct EmptyGenerator : Error {
    using Error::Error;
};

struct EmptySubset : Error {
    using Error::Error;
};

struct StaleBeatPoint : Error {
    using Error::Error;
};

// Exact search exceeded its configured budget; callers either propagate or
// degrade to an interval result.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Structure too large for an exact decision procedure (isomorphism,
// subdivision growth, ...).
struct SizeBudgetExceeded : Error {
    using Error::Error;
};

struct HeightMismatch : Error {
    using Error::Error;
};

struct Disconnected : Error {
    using Error::Error;
};

struct NotDominating : Error {
    using Error::Error;
};

struct UncoverableVertex : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct IncompatibleCover : Error {
    using Error::Error;
};

}  // namespace fintopo
