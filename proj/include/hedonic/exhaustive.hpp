#pragma once

#include <vector>

#include "hedonic/stability.hpp"
#include "hedonic/weighted_graph.hpp"

namespace hedonic {

// Hard limits for the brute-force oracles. Exceeding a budget raises
// BudgetExceeded; enumeration never truncates silently.
struct EnumerationBudget {
    std::size_t max_partitions = 1'000'000;
    std::size_t max_subsets = 1'000'000;
};

// Every partition of the players into connected blocks, exactly once, in the
// deterministic order induced by recursing on the lowest unassigned player
// and trying its candidate blocks in canonical coalition order.
std::vector<Partition> enumerate_feasible_partitions(const Graph& graph,
                                                     const EnumerationBudget& budget = {});

// All feasible partitions passing verify(., concept), in enumeration order.
// Ground truth for every existence claim the solvers make.
std::vector<Partition> find_stable_exhaustive(const GameInstance& game, Concept concept_tag,
                                              const EnumerationBudget& budget = {});

struct CliqueResult {
    int size = 0;
    Coalition witness{0};
    bool unique = false;
};

// Exact maximum clique by subset enumeration; `witness` is the first maximum
// clique in canonical order and `unique` says whether it is the only one.
CliqueResult max_clique_bruteforce(const Graph& graph, int node_limit = 16);

// A cut is identified by the side containing node 0 (so each bipartition,
// including the trivial one, appears exactly once). Weight of a cut.
long long cut_weight(const WeightedGraph& graph, const std::vector<int>& side);

// All cuts whose weight no single-node move strictly increases, as canonical
// sides (sorted, containing node 0), ordered by size then lexicographically.
std::vector<std::vector<int>> local_maxcut_bruteforce(const WeightedGraph& graph,
                                                      int node_limit = 16);

// Canonical side (the one containing node 0) for an arbitrary subset of nodes.
std::vector<int> canonical_cut_side(const WeightedGraph& graph, const std::vector<int>& subset);

}  // namespace hedonic
