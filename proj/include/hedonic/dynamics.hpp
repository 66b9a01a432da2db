#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hedonic/stability.hpp"

namespace hedonic {

// Social-welfare potential of an additive game: the sum over all players of
// their utility in their own block. Exact rational.
Rational potential(const GameInstance& game, const Partition& pi);

enum class DynamicsRule { NS, INS };
enum class DynamicsOutcome { Converged, StepLimit };

struct DynamicsStep {
    int player;
    Coalition source;
    std::optional<Coalition> target;  // nullopt = left to form her singleton
    // recorded for additive games only
    std::optional<Rational> potential_before;
    std::optional<Rational> potential_after;
};

struct DynamicsTrace {
    std::vector<DynamicsStep> steps;
    Partition terminal;
    DynamicsOutcome outcome;
};

struct DynamicsOptions {
    std::size_t max_steps = 1000;
    // When set, each step picks uniformly among the currently available
    // deviations instead of the deterministic-first one.
    std::optional<std::uint64_t> random_seed;
};

// Better-response dynamics: repeatedly apply a feasible deviation of the given
// rule (deterministic-first by default: players ascending, leave-to-singleton
// before blocks in canonical order) until no deviation remains or the step
// limit is hit. A source block disconnected by a departure is split into its
// connected components so the partition stays feasible.
DynamicsTrace run_dynamics(const GameInstance& game, const Partition& start, DynamicsRule rule,
                           const DynamicsOptions& options = {});

// Same, starting from the all-singleton partition.
DynamicsTrace run_dynamics(const GameInstance& game, DynamicsRule rule,
                           const DynamicsOptions& options = {});

}  // namespace hedonic
