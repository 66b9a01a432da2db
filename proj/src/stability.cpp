#include "hedonic/stability.hpp"

#include <algorithm>

namespace hedonic {

std::string to_string(Concept c) {
    switch (c) {
        case Concept::IR: return "ir";
        case Concept::IS: return "is";
        case Concept::NS: return "ns";
        case Concept::INS: return "ins";
        case Concept::IR_INS: return "ir-ins";
        case Concept::CR: return "cr";
        case Concept::SCR: return "scr";
    }
    return "?";
}

std::optional<Concept> concept_from_string(const std::string& name) {
    if (name == "ir") return Concept::IR;
    if (name == "is") return Concept::IS;
    if (name == "ns") return Concept::NS;
    if (name == "ins") return Concept::INS;
    if (name == "ir-ins" || name == "irins" || name == "ir_ins") return Concept::IR_INS;
    if (name == "cr") return Concept::CR;
    if (name == "scr") return Concept::SCR;
    return std::nullopt;
}

bool DeviationTags::has(Concept c) const {
    switch (c) {
        case Concept::NS: return ns;
        case Concept::IS: return is;
        case Concept::INS: return ins;
        case Concept::IR_INS: return ir_ins;
        default: return false;
    }
}

DeviationTags classify_deviation(const GameInstance& game, int player, const Coalition& from,
                                 const Coalition* target) {
    DeviationTags tags;
    if (target == nullptr) {
        // Leaving to form the singleton {player}: acceptance conditions are vacuous.
        const Coalition alone{player};
        if (compare(game, player, alone, from) == Ordering::Better) {
            tags.ns = tags.is = tags.ins = tags.ir_ins = true;
        }
        return tags;
    }
    if (target->contains(player)) return tags;
    const Coalition joined = target->with(player);
    if (!is_connected(game.graph(), joined)) return tags;  // infeasible move
    if (compare(game, player, joined, from) != Ordering::Better) return tags;
    tags.ns = true;

    bool all_accept = true;
    bool neighbors_accept = true;
    for (int j : target->members()) {
        const bool accepts = compare(game, j, joined, *target) != Ordering::Worse;
        if (!accepts) {
            all_accept = false;
            if (game.graph().has_edge(player, j)) neighbors_accept = false;
        }
    }
    tags.is = all_accept;
    tags.ins = neighbors_accept;
    if (tags.ins) {
        bool target_stays_rational = true;
        for (int j : target->members()) {
            if (compare(game, j, joined, Coalition{j}) == Ordering::Worse) {
                target_stays_rational = false;
                break;
            }
        }
        tags.ir_ins = target_stays_rational;
    }
    return tags;
}

DeviationTags deviation_kind(const GameInstance& game, const Partition& pi, int player,
                             const std::optional<Coalition>& target) {
    const Coalition& own = pi.block_of(player);
    if (!target) return classify_deviation(game, player, own, nullptr);
    const auto& blocks = pi.blocks();
    const bool in_partition = std::find(blocks.begin(), blocks.end(), *target) != blocks.end();
    if (!in_partition) throw TargetNotInPartition("deviation target is not a block of the partition");
    if (*target == own) throw BadParameter("deviation target equals the player's own block");
    return classify_deviation(game, player, own, &*target);
}

namespace {

// First individual deviation of the given class, in the deterministic order
// that verify() documents: players ascending; for each player the
// leave-to-singleton move first, then the other blocks in canonical order.
std::optional<Witness> first_individual_deviation(const GameInstance& game, const Partition& pi,
                                                  Concept concept_tag) {
    std::vector<const Coalition*> ordered;
    ordered.reserve(pi.blocks().size());
    for (const Coalition& block : pi.blocks()) ordered.push_back(&block);
    std::sort(ordered.begin(), ordered.end(),
              [](const Coalition* a, const Coalition* b) { return canonical_less(*a, *b); });
    for (int i = 0; i < game.player_count(); ++i) {
        const Coalition& own = pi.block_of(i);
        if (own.size() > 1) {
            if (classify_deviation(game, i, own, nullptr).has(concept_tag))
                return Witness(IndividualDeviation{i, std::nullopt});
        }
        for (const Coalition* target : ordered) {
            if (*target == own) continue;
            if (classify_deviation(game, i, own, target).has(concept_tag))
                return Witness(IndividualDeviation{i, *target});
        }
    }
    return std::nullopt;
}

// Does x strongly (every member strictly better) or weakly (every member at
// least as well off, someone strictly better) block pi?
bool blocks_partition(const GameInstance& game, const Partition& pi, const Coalition& x,
                      bool strong) {
    bool someone_strict = false;
    for (int i : x.members()) {
        const Ordering o = compare(game, i, x, pi.block_of(i));
        if (o == Ordering::Worse) return false;
        if (o == Ordering::Equal) {
            if (strong) return false;
        } else {
            someone_strict = true;
        }
    }
    return strong || someone_strict;
}

}  // namespace

std::optional<Witness> verify(const GameInstance& game, const Partition& pi, Concept concept_tag,
                              std::size_t max_subsets) {
    if (pi.player_count() != game.player_count())
        throw InfeasiblePartition("partition is over a different player set");
    if (!pi.feasible(game.graph()))
        throw InfeasiblePartition("partition has a disconnected block");

    switch (concept_tag) {
        case Concept::IR:
            for (int i = 0; i < game.player_count(); ++i) {
                const Coalition& own = pi.block_of(i);
                if (compare(game, i, own, Coalition{i}) == Ordering::Worse)
                    return Witness(IndividualDeviation{i, std::nullopt});
            }
            return std::nullopt;
        case Concept::NS:
        case Concept::IS:
        case Concept::INS:
        case Concept::IR_INS:
            return first_individual_deviation(game, pi, concept_tag);
        case Concept::CR:
        case Concept::SCR: {
            const bool strong = concept_tag == Concept::CR;
            for (const Coalition& x :
                 connected_subsets(game.graph(), std::nullopt, std::nullopt, max_subsets)) {
                if (blocks_partition(game, pi, x, strong))
                    return Witness(BlockingCoalition{x, strong});
            }
            return std::nullopt;
        }
    }
    throw BadParameter("unknown stability concept");
}

bool witness_valid(const GameInstance& game, const Partition& pi, Concept concept_tag,
                   const Witness& witness) {
    if (const auto* dev = std::get_if<IndividualDeviation>(&witness)) {
        if (concept_tag == Concept::IR)
            return classify_deviation(game, dev->player, pi.block_of(dev->player), nullptr).ns;
        return deviation_kind(game, pi, dev->player, dev->target).has(concept_tag);
    }
    const auto& blocking = std::get<BlockingCoalition>(witness);
    if (!is_connected(game.graph(), blocking.coalition)) return false;
    const bool strong = concept_tag == Concept::CR;
    bool someone_strict = false;
    for (int i : blocking.coalition.members()) {
        const Ordering o = compare(game, i, blocking.coalition, pi.block_of(i));
        if (o == Ordering::Worse) return false;
        if (o == Ordering::Equal && strong) return false;
        if (o == Ordering::Better) someone_strict = true;
    }
    return strong || someone_strict;
}

std::string describe(const Witness& witness, const Graph& graph) {
    auto coalition_names = [&](const Coalition& x) {
        std::string out = "{";
        for (std::size_t k = 0; k < x.members().size(); ++k) {
            if (k) out += ",";
            out += graph.player_name(x.members()[k]);
        }
        return out + "}";
    };
    if (const auto* dev = std::get_if<IndividualDeviation>(&witness)) {
        std::string out = "player " + graph.player_name(dev->player);
        if (dev->target)
            out += " deviates to " + coalition_names(*dev->target);
        else
            out += " deviates to the empty coalition";
        return out;
    }
    const auto& blocking = std::get<BlockingCoalition>(witness);
    return std::string(blocking.strong ? "strongly" : "weakly") + " blocking coalition " +
           coalition_names(blocking.coalition);
}

}  // namespace hedonic
