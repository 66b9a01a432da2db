#pragma once

#include <cstdint>
#include <string>

#include "hedonic/game.hpp"
#include "hedonic/weighted_graph.hpp"

namespace hedonic {

// Parameters shared by the clique reductions: the clique-size threshold t and
// the deterrent penalty M = |N|+1 that makes unwanted company intolerable.
struct ReductionParams {
    int t;
    long long penalty;  // M
};

// The worked parliamentary fixtures:
//   parliament3               three parties on a path, asymmetric utilities
//   parliament3_enemy_variant symmetric enemy path whose two core partitions
//                             weakly block each other's non-singleton block
//   parliament5               five parties on a path, no IR-in-neighbor
//                             stable outcome
GameInstance fixture(const std::string& name);

// Game on a k-cycle with no individually stable feasible partition. Each
// cycle player ranks the short arcs through her (length at most the smallest
// non-divisor of k) above everything else, preferring those that include her
// clockwise neighbor.
GameInstance cycle_no_is(int k, std::size_t cap = kDefaultSubsetCap);

int smallest_non_divisor(int k);

// Clique detection via core stability on a star: a center that likes
// everybody, leaf pairs mutually friendly exactly on the base graph's edges,
// enemies otherwise. Core partitions glue the center to a maximum clique.
GameInstance reduce_clique_enemy_star(const Graph& base);

// Clique threshold t via strict core stability on a star (symmetric
// utilities, t >= 2): a strictly core stable partition exists iff the base
// graph has a clique of size at least t.
GameInstance reduce_clique_scr_star(const Graph& base, int t);

// Clique threshold t via NS/INS existence on the same star shape
// (asymmetric utilities, t >= 1).
GameInstance reduce_clique_ins_star(const Graph& base, int t);

// Clique threshold t via IR-INS existence on a tree (spine a-b-c-d-e with the
// base vertices hanging off c, t >= 1).
GameInstance reduce_clique_irins_tree(const Graph& base, int t);

// Local max-cut as in-neighbor stability on a star: leaf u values the center
// at u's total incident weight and each other leaf v at -2w(u,v). The center
// block of any INS partition reads off a locally maximal cut.
GameInstance reduce_maxcut_star(const WeightedGraph& base);

// Disjoint union of the base graph and a fresh s-clique (no cross edges).
// The base has maximum clique size r iff the union has a non-unique maximum
// clique for s = r and a unique one for every s > r.
Graph unique_clique_family(const Graph& base, int s);

enum class GraphKind { Tree, Path, Star, Cycle };
enum class PreferenceKind { Additive, SymmetricAdditive, Enemy, Explicit };

// Seed-deterministic random game: same arguments, same instance. Additive
// utilities are integers in [-9, 9]; enemy games are symmetric with entries
// in {1, -n}; explicit preferences are a random tiering of each player's
// feasible coalitions.
GameInstance random_instance(GraphKind kind, int n, PreferenceKind preference_kind,
                             std::uint64_t seed, std::size_t cap = kDefaultSubsetCap);

}  // namespace hedonic
