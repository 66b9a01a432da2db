#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hedonic/errors.hpp"

namespace hedonic {

// Undirected graph with non-negative integer edge weights; absent pairs weigh
// zero. Input to the local max-cut oracle and the max-cut game construction.
class WeightedGraph {
public:
    explicit WeightedGraph(std::vector<std::string> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.empty()) throw BadParameter("weighted graph needs at least one node");
    }

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const std::vector<std::string>& nodes() const { return nodes_; }

    void set_weight(int u, int v, long long w) {
        check(u);
        check(v);
        if (u == v) throw BadParameter("self-loop weight");
        if (w < 0) throw BadParameter("negative cut weight");
        if (u > v) std::swap(u, v);
        if (w == 0)
            weights_.erase({u, v});
        else
            weights_[{u, v}] = w;
    }

    long long weight(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = weights_.find({u, v});
        return it == weights_.end() ? 0 : it->second;
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return weights_.count({u, v}) > 0;
    }

    const std::map<std::pair<int, int>, long long>& weights() const { return weights_; }

    long long weight_sum(int u) const {
        long long total = 0;
        for (int v = 0; v < node_count(); ++v)
            if (v != u) total += weight(u, v);
        return total;
    }

private:
    void check(int u) const {
        if (u < 0 || u >= node_count()) throw BadParameter("weighted-graph node out of range");
    }

    std::vector<std::string> nodes_;
    std::map<std::pair<int, int>, long long> weights_;
};

}  // namespace hedonic
