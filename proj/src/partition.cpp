#include "hedonic/partition.hpp"

#include <algorithm>

namespace hedonic {

Partition::Partition(std::vector<Coalition> blocks, int player_count)
    : player_count_(player_count) {
    if (player_count <= 0) throw BadParameter("partition needs at least one player");
    std::sort(blocks.begin(), blocks.end(),
              [](const Coalition& a, const Coalition& b) { return a.min_member() < b.min_member(); });
    block_index_.assign(player_count, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int p : blocks[b].members()) {
            if (p < 0 || p >= player_count) throw BadParameter("partition member out of range");
            if (block_index_[p] != -1) throw BadParameter("partition blocks overlap");
            block_index_[p] = static_cast<int>(b);
        }
    }
    for (int p = 0; p < player_count; ++p) {
        if (block_index_[p] == -1) throw BadParameter("partition does not cover every player");
    }
    blocks_ = std::move(blocks);
}

Partition Partition::singletons(int player_count) {
    std::vector<Coalition> blocks;
    blocks.reserve(player_count);
    for (int p = 0; p < player_count; ++p) blocks.push_back(Coalition{p});
    return Partition(std::move(blocks), player_count);
}

bool Partition::feasible(const Graph& graph) const {
    if (player_count_ != graph.player_count()) return false;
    for (const Coalition& block : blocks_) {
        if (!is_connected(graph, block)) return false;
    }
    return true;
}

}  // namespace hedonic
