#include "hedonic/dynamics.hpp"

#include <algorithm>
#include <random>

namespace hedonic {

Rational potential(const GameInstance& game, const Partition& pi) {
    if (!game.additive()) throw NotAdditive("the potential needs an additive game");
    const UtilityMatrix& u = game.utilities();
    Rational total;
    for (const Coalition& block : pi.blocks()) {
        for (int i : block.members())
            for (int j : block.members()) total += u.at(i, j);
    }
    return total;
}

namespace {

struct Move {
    int player;
    std::optional<Coalition> target;
};

Concept rule_concept(DynamicsRule rule) {
    return rule == DynamicsRule::NS ? Concept::NS : Concept::INS;
}

std::vector<Move> available_moves(const GameInstance& game, const Partition& pi,
                                  DynamicsRule rule, bool first_only) {
    const Concept wanted = rule_concept(rule);
    std::vector<const Coalition*> ordered;
    for (const Coalition& block : pi.blocks()) ordered.push_back(&block);
    std::sort(ordered.begin(), ordered.end(),
              [](const Coalition* a, const Coalition* b) { return canonical_less(*a, *b); });
    std::vector<Move> moves;
    for (int i = 0; i < game.player_count(); ++i) {
        const Coalition& own = pi.block_of(i);
        if (own.size() > 1 && classify_deviation(game, i, own, nullptr).has(wanted)) {
            moves.push_back({i, std::nullopt});
            if (first_only) return moves;
        }
        for (const Coalition* target : ordered) {
            if (*target == own) continue;
            if (classify_deviation(game, i, own, target).has(wanted)) {
                moves.push_back({i, *target});
                if (first_only) return moves;
            }
        }
    }
    return moves;
}

Partition apply_move(const Graph& graph, const Partition& pi, const Move& move) {
    std::vector<Coalition> blocks;
    const Coalition& source = pi.block_of(move.player);
    for (const Coalition& block : pi.blocks()) {
        if (block == source) continue;
        if (move.target && block == *move.target) continue;
        blocks.push_back(block);
    }
    if (move.target) blocks.push_back(move.target->with(move.player));
    else blocks.push_back(Coalition{move.player});
    if (source.size() > 1) {
        // split what remains of the abandoned block into connected components
        const Coalition rest = source.without(move.player);
        std::vector<bool> seen(graph.player_count(), false);
        for (int p : rest.members()) {
            if (seen[p]) continue;
            std::vector<int> component{p};
            seen[p] = true;
            for (std::size_t head = 0; head < component.size(); ++head) {
                for (int nb : graph.neighbors(component[head])) {
                    if (!seen[nb] && rest.contains(nb)) {
                        seen[nb] = true;
                        component.push_back(nb);
                    }
                }
            }
            blocks.push_back(Coalition(std::move(component)));
        }
    }
    return Partition(std::move(blocks), pi.player_count());
}

}  // namespace

DynamicsTrace run_dynamics(const GameInstance& game, const Partition& start, DynamicsRule rule,
                           const DynamicsOptions& options) {
    if (start.player_count() != game.player_count() || !start.feasible(game.graph()))
        throw InfeasibleStart("dynamics needs a feasible start partition");
    std::optional<std::mt19937_64> rng;
    if (options.random_seed) rng.emplace(*options.random_seed);

    DynamicsTrace trace{{}, start, DynamicsOutcome::Converged};
    Partition current = start;
    const bool additive = game.additive();
    std::optional<Rational> phi;
    if (additive) phi = potential(game, current);

    for (std::size_t step = 0; step < options.max_steps; ++step) {
        const std::vector<Move> moves = available_moves(game, current, rule, !rng.has_value());
        if (moves.empty()) {
            trace.terminal = current;
            trace.outcome = DynamicsOutcome::Converged;
            return trace;
        }
        const Move& chosen =
            rng ? moves[static_cast<std::size_t>((*rng)() % moves.size())] : moves.front();
        Partition next = apply_move(game.graph(), current, chosen);
        DynamicsStep record{chosen.player, current.block_of(chosen.player), chosen.target,
                            std::nullopt, std::nullopt};
        if (additive) {
            record.potential_before = phi;
            phi = potential(game, next);
            record.potential_after = phi;
        }
        trace.steps.push_back(std::move(record));
        current = std::move(next);
    }
    trace.terminal = current;
    trace.outcome =
        available_moves(game, current, rule, true).empty() ? DynamicsOutcome::Converged
                                                           : DynamicsOutcome::StepLimit;
    return trace;
}

DynamicsTrace run_dynamics(const GameInstance& game, DynamicsRule rule,
                           const DynamicsOptions& options) {
    return run_dynamics(game, Partition::singletons(game.player_count()), rule, options);
}

}  // namespace hedonic
