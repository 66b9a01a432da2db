#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hedonic/errors.hpp"

namespace hedonic {

inline constexpr std::size_t kDefaultSubsetCap = 1'000'000;

// A non-empty set of player indices, stored sorted and duplicate-free.
class Coalition {
public:
    explicit Coalition(std::vector<int> members);
    Coalition(std::initializer_list<int> members) : Coalition(std::vector<int>(members)) {}

    const std::vector<int>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(int player) const;
    int min_member() const { return members_.front(); }

    Coalition with(int player) const;     // members ∪ {player}
    Coalition without(int player) const;  // members ∖ {player}; throws if it would become empty
    bool intersects(const Coalition& other) const;

    // Lexicographic member order; used as the map/set key order.
    friend bool operator<(const Coalition& a, const Coalition& b) { return a.members_ < b.members_; }
    friend bool operator==(const Coalition& a, const Coalition& b) { return a.members_ == b.members_; }

private:
    std::vector<int> members_;
};

// Enumeration order used everywhere a sequence of coalitions must be
// deterministic: ascending size, then lexicographic on sorted members.
bool canonical_less(const Coalition& a, const Coalition& b);

// The communication structure (players, links). Immutable after construction.
// Player identifiers are external strings; all internal structure works on
// their dense indices in the players vector.
class Graph {
public:
    Graph(std::vector<std::string> players, std::vector<std::pair<int, int>> edges);

    int player_count() const { return static_cast<int>(players_.size()); }
    const std::vector<std::string>& players() const { return players_; }
    const std::string& player_name(int i) const { return players_.at(i); }
    std::optional<int> index_of(const std::string& name) const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const { return adj_.at(i); }
    bool has_edge(int i, int j) const;

    bool is_forest() const;
    bool is_connected_graph() const;
    bool is_tree() const { return is_forest() && is_connected_graph(); }
    // Node sets of the connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<int>> components() const;
    // The unique node adjacent to all others if the graph is a star, else nullopt.
    // Degenerate cases: a single node is its own center; for a single edge the
    // lower-index endpoint is reported.
    std::optional<int> star_center() const;

private:
    std::vector<std::string> players_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Most specific topology tag. Precedence among overlapping shapes follows the
// dispatch needs of the solvers: a 3-node path is both a path and K_{1,2} and
// is reported as Path; Star is reported only when the graph is a tree with a
// center of full degree and is not a path.
enum class Topology { Path, Star, Tree, Forest, Cyclic };

Topology classify(const Graph& graph);
std::string to_string(Topology t);

// Orientation of a tree away from a chosen root, with parent/children/height
// and successor sets (succ(i) = i plus everything below it).
class RootedTree {
public:
    RootedTree(const Graph& base, int root);

    const Graph& base() const { return *base_; }
    int root() const { return root_; }
    int parent(int i) const;  // throws BadParameter at the root
    bool is_root(int i) const { return i == root_; }
    const std::vector<int>& children(int i) const { return children_.at(i); }
    int height(int i) const { return height_.at(i); }
    const std::vector<int>& successors(int i) const { return succ_.at(i); }

    // Nodes grouped by height: level(t) lists all i with height(i) == t, ascending.
    const std::vector<std::vector<int>>& levels() const { return levels_; }

    // Children of a node set X: nodes outside X whose parent lies in X. Ascending.
    std::vector<int> children_of_set(const Coalition& x) const;

private:
    const Graph* base_;
    int root_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> height_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<int>> levels_;
};

RootedTree root_tree(const Graph& graph, int root);

bool is_connected(const Graph& graph, const Coalition& x);

// All connected subsets, optionally restricted to those containing `anchor`
// and/or contained in `within`. Result is in canonical order (size, then
// lexicographic) and each qualifying subset appears exactly once. Throws
// CapExceeded when more than `cap` subsets qualify.
std::vector<Coalition> connected_subsets(const Graph& graph,
                                         std::optional<int> anchor = std::nullopt,
                                         const std::optional<Coalition>& within = std::nullopt,
                                         std::size_t cap = kDefaultSubsetCap);

}  // namespace hedonic
