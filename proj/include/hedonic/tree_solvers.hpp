#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hedonic/stability.hpp"

namespace hedonic {

// Final per-node state of the individual-stability solver: B(i) is the block
// node i ended up building, subtree_partition(i) the partition of succ(i) it
// committed. Exposed for instrumentation and property tests.
struct IsSolverState {
    std::map<int, Coalition> best_block;
    std::map<int, std::vector<Coalition>> subtree_partition;
};

// Memo table of the stability DP: f(X) = 1 iff the subtree hanging below X's
// top node admits a stable partition containing X; `witness` stores, per
// (X, child j of X), the chosen stable block for j's subtree.
struct DpTable {
    std::map<Coalition, bool> f;
    std::map<std::pair<Coalition, int>, Coalition> witness;
};

// Guarantee-level table of the core solver: the coalition each node can
// secure within its own subtree.
struct GuaranteeTable {
    std::map<int, Coalition> guarantee;
};

// Observer invoked whenever a player's tentative block changes during
// solve_is (old block, new block). Used by tests to check that no player is
// ever made strictly worse off by an accepted change.
using BlockChangeObserver = std::function<void(int player, const Coalition& before, const Coalition& after)>;

// Individually stable partition of a forest game. Each component is solved
// independently, rooted at `root` if the root lies in it and at its
// lowest-index node otherwise. Ties in every "choose a most preferred option"
// step break by larger size, then lexicographically.
Partition solve_is(const GameInstance& game, std::optional<int> root = std::nullopt,
                   IsSolverState* state_out = nullptr, const BlockChangeObserver& observer = {});

// Core stable partition of a forest game via bottom-up guarantee levels: a
// candidate block for node i must weakly beat, for every other member j, the
// guarantee j could secure in its own subtree; i takes its most preferred
// candidate. The chosen blocks are then materialized top-down.
Partition solve_core(const GameInstance& game, std::optional<int> root = std::nullopt,
                     GuaranteeTable* table_out = nullptr, std::size_t cap = kDefaultSubsetCap);

// Partition that is simultaneously core stable and individually stable:
// solve_core run on the strict refinement of the game.
Partition solve_core_is(const GameInstance& game, std::optional<int> root = std::nullopt,
                        std::size_t cap = kDefaultSubsetCap);

// Existence plus construction for NS / INS / IR-INS on forests. Returns the
// reconstructed stable partition, or nullopt if none exists (NoneExists for
// any component means none overall). Throws BadParameter for other concepts.
std::optional<Partition> solve_dp(const GameInstance& game, Concept concept_tag,
                                  std::optional<int> root = std::nullopt,
                                  DpTable* table_out = nullptr,
                                  std::size_t cap = kDefaultSubsetCap);

// IR-in-neighbor stable partition of an arbitrary game on a star, by greedy
// growth around the center's favorite pair. O(n^3) oracle calls.
Partition star_greedy_ir_ins(const GameInstance& game);

// Nash stable partition of a symmetric enemy-oriented game on a star: grow
// the center's block by players mutually friendly with all current members.
Partition star_greedy_enemy_ns(const GameInstance& game);

}  // namespace hedonic
