#pragma once

#include <vector>

#include "hedonic/graph.hpp"

namespace hedonic {

// A disjoint cover of all players by coalitions. Blocks are kept in canonical
// display order: ascending smallest member (block minima are distinct, so the
// order is total). Feasibility — every block connected — is a property of a
// partition relative to a graph, checked by feasible().
class Partition {
public:
    Partition(std::vector<Coalition> blocks, int player_count);

    static Partition singletons(int player_count);

    const std::vector<Coalition>& blocks() const { return blocks_; }
    int player_count() const { return player_count_; }

    const Coalition& block_of(int player) const { return blocks_.at(block_index_.at(player)); }
    int block_index_of(int player) const { return block_index_.at(player); }

    bool feasible(const Graph& graph) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.blocks_ < b.blocks_;
    }

private:
    std::vector<Coalition> blocks_;
    std::vector<int> block_index_;
    int player_count_;
};

}  // namespace hedonic
