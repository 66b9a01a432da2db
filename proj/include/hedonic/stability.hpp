#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hedonic/game.hpp"
#include "hedonic/partition.hpp"

namespace hedonic {

// The seven stability notions handled by the verifier.
enum class Concept { IR, IS, NS, INS, IR_INS, CR, SCR };

std::string to_string(Concept c);
std::optional<Concept> concept_from_string(const std::string& name);

// Machine-checkable instability evidence. An individual deviation names the
// moving player and the partition block she joins (nullopt = she leaves to
// form her singleton); a blocking coalition is a connected set that strongly
// (CR) or weakly (SCR) blocks.
struct IndividualDeviation {
    int player;
    std::optional<Coalition> target;
};

struct BlockingCoalition {
    Coalition coalition;
    bool strong;
};

using Witness = std::variant<IndividualDeviation, BlockingCoalition>;

// Deviation classes satisfied by a hypothetical single-player move, expressed
// purely in terms of the player's current block and the target block (target
// nullptr = leave to a singleton). This is the shared predicate behind the
// verifier, the tree DP and the dynamics.
struct DeviationTags {
    bool ns = false;
    bool is = false;
    bool ins = false;
    bool ir_ins = false;

    bool any() const { return ns || is || ins || ir_ins; }
    bool has(Concept c) const;
};

DeviationTags classify_deviation(const GameInstance& game, int player, const Coalition& from,
                                 const Coalition* target);

// Same classification for a move out of partition `pi`. Target must be a block
// of pi other than pi(player), or nullopt for the leave-to-singleton move.
DeviationTags deviation_kind(const GameInstance& game, const Partition& pi, int player,
                             const std::optional<Coalition>& target);

// Decides a stability concept for a feasible partition: nullopt means stable,
// otherwise the first witness in deterministic scan order (players ascending;
// targets: singleton-formation first, then blocks in canonical coalition
// order). CR/SCR enumerate feasible coalitions, subject to `max_subsets`.
std::optional<Witness> verify(const GameInstance& game, const Partition& pi, Concept concept_tag,
                              std::size_t max_subsets = kDefaultSubsetCap);

// Replays a witness against the partition it was issued for.
bool witness_valid(const GameInstance& game, const Partition& pi, Concept concept_tag,
                   const Witness& witness);

std::string describe(const Witness& witness, const Graph& graph);

}  // namespace hedonic
