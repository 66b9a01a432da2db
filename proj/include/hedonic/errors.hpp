#pragma once

#include <stdexcept>
#include <string>

namespace hedonic {

// Base class for every domain error raised by the library. The CLI maps
// subclasses onto process exit codes, so keep the taxonomy stable.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input malformed or parameters out of range (usage-level mistakes).
struct BadParameter : Error {
    using Error::Error;
};
struct ParseError : BadParameter {
    using BadParameter::BadParameter;
};
struct UnknownFixture : BadParameter {
    using BadParameter::BadParameter;
};
struct PlayerNotMember : BadParameter {
    using BadParameter::BadParameter;
};
struct TargetNotInPartition : BadParameter {
    using BadParameter::BadParameter;
};

// Structural preconditions of solvers.
struct NotATree : Error {
    using Error::Error;
};
struct NotAForest : Error {
    using Error::Error;
};
struct NotAStar : Error {
    using Error::Error;
};
struct NotEnemyOriented : Error {
    using Error::Error;
};
struct NotAdditive : Error {
    using Error::Error;
};
struct InfeasiblePartition : Error {
    using Error::Error;
};
struct InfeasibleStart : Error {
    using Error::Error;
};

// Enumeration limits. These fail loudly: a truncated oracle is worse than none.
struct CapExceeded : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace hedonic
