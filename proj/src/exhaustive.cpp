#include "hedonic/exhaustive.hpp"

#include <algorithm>

namespace hedonic {

namespace {

void enumerate_rec(const Graph& graph, std::vector<int>& unassigned, std::vector<Coalition>& acc,
                   std::vector<Partition>& out, const EnumerationBudget& budget) {
    if (unassigned.empty()) {
        if (out.size() >= budget.max_partitions)
            throw BudgetExceeded("feasible-partition enumeration exceeded budget");
        out.push_back(Partition(acc, graph.player_count()));
        return;
    }
    const int pivot = unassigned.front();
    const Coalition pool(unassigned);
    for (const Coalition& block :
         connected_subsets(graph, pivot, pool, budget.max_subsets)) {
        std::vector<int> rest;
        rest.reserve(unassigned.size() - block.size());
        for (int p : unassigned)
            if (!block.contains(p)) rest.push_back(p);
        acc.push_back(block);
        enumerate_rec(graph, rest, acc, out, budget);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_feasible_partitions(const Graph& graph,
                                                     const EnumerationBudget& budget) {
    std::vector<int> all(graph.player_count());
    for (int i = 0; i < graph.player_count(); ++i) all[i] = i;
    std::vector<Coalition> acc;
    std::vector<Partition> out;
    enumerate_rec(graph, all, acc, out, budget);
    return out;
}

std::vector<Partition> find_stable_exhaustive(const GameInstance& game, Concept concept_tag,
                                              const EnumerationBudget& budget) {
    std::vector<Partition> out;
    for (const Partition& pi : enumerate_feasible_partitions(game.graph(), budget)) {
        if (!verify(game, pi, concept_tag, budget.max_subsets)) out.push_back(pi);
    }
    return out;
}

CliqueResult max_clique_bruteforce(const Graph& graph, int node_limit) {
    const int n = graph.player_count();
    if (n > node_limit) throw BudgetExceeded("graph too large for the clique oracle");
    CliqueResult best;
    best.size = 0;
    int count_at_best = 0;
    // Subsets in canonical order (size, then lexicographic) so the witness is
    // the canonical first maximum clique.
    std::vector<std::uint32_t> masks;
    masks.reserve(std::size_t(1) << n);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [n](std::uint32_t a, std::uint32_t b) {
        const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        // lexicographic on sorted member lists == numeric order of the bit-reversed
        // masks; compare directly via member extraction for clarity at this scale
        std::vector<int> ma, mb;
        for (int i = 0; i < n; ++i) {
            if (a >> i & 1) ma.push_back(i);
            if (b >> i & 1) mb.push_back(i);
        }
        return ma < mb;
    });
    for (std::uint32_t mask : masks) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(i);
        bool clique = true;
        for (std::size_t a = 0; a < members.size() && clique; ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (!graph.has_edge(members[a], members[b])) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        const int size = static_cast<int>(members.size());
        if (size > best.size) {
            best.size = size;
            best.witness = Coalition(members);
            count_at_best = 1;
        } else if (size == best.size) {
            ++count_at_best;
        }
    }
    best.unique = count_at_best == 1;
    return best;
}

long long cut_weight(const WeightedGraph& graph, const std::vector<int>& side) {
    std::vector<bool> in_side(graph.node_count(), false);
    for (int u : side) in_side.at(u) = true;
    long long total = 0;
    for (const auto& [edge, w] : graph.weights()) {
        if (in_side[edge.first] != in_side[edge.second]) total += w;
    }
    return total;
}

std::vector<int> canonical_cut_side(const WeightedGraph& graph, const std::vector<int>& subset) {
    std::vector<bool> in_side(graph.node_count(), false);
    for (int u : subset) in_side.at(u) = true;
    std::vector<int> out;
    const bool keep = in_side[0];
    for (int u = 0; u < graph.node_count(); ++u)
        if (in_side[u] == keep) out.push_back(u);
    return out;
}

std::vector<std::vector<int>> local_maxcut_bruteforce(const WeightedGraph& graph, int node_limit) {
    const int n = graph.node_count();
    if (n > node_limit) throw BudgetExceeded("graph too large for the local max-cut oracle");
    std::vector<std::vector<int>> out;
    // Sides containing node 0: each bipartition exactly once.
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); mask += 2) {
        std::vector<int> side;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) side.push_back(i);
        const long long base = cut_weight(graph, side);
        bool local_max = true;
        for (int mover = 0; mover < n && local_max; ++mover) {
            // moving `mover` across changes the cut by (weight to own side) - (weight across)
            long long to_own = 0, across = 0;
            const bool mover_in = (mask >> mover) & 1;
            for (int other = 0; other < n; ++other) {
                if (other == mover) continue;
                const bool other_in = (mask >> other) & 1;
                (other_in == mover_in ? to_own : across) += graph.weight(mover, other);
            }
            if (base + to_own - across > base) local_max = false;
        }
        if (local_max) out.push_back(side);
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace hedonic
