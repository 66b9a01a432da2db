#include "hedonic/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace hedonic {

Coalition::Coalition(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw BadParameter("coalition must be non-empty");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Coalition::contains(int player) const {
    return std::binary_search(members_.begin(), members_.end(), player);
}

Coalition Coalition::with(int player) const {
    if (contains(player)) return *this;
    std::vector<int> m = members_;
    m.insert(std::upper_bound(m.begin(), m.end(), player), player);
    Coalition out({0});
    out.members_ = std::move(m);
    return out;
}

Coalition Coalition::without(int player) const {
    std::vector<int> m;
    m.reserve(members_.size());
    for (int p : members_)
        if (p != player) m.push_back(p);
    return Coalition(std::move(m));
}

bool Coalition::intersects(const Coalition& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

bool canonical_less(const Coalition& a, const Coalition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
}

Graph::Graph(std::vector<std::string> players, std::vector<std::pair<int, int>> edges)
    : players_(std::move(players)) {
    if (players_.empty()) throw BadParameter("graph needs at least one player");
    std::unordered_set<std::string> seen;
    for (const auto& name : players_) {
        if (!seen.insert(name).second) throw BadParameter("duplicate player name: " + name);
    }
    const int n = player_count();
    adj_.assign(n, {});
    std::set<std::pair<int, int>> normalized;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw BadParameter("edge endpoint out of range");
        if (a == b) throw BadParameter("self-loop on player " + players_[a]);
        if (a > b) std::swap(a, b);
        if (!normalized.insert({a, b}).second) continue;  // tolerate duplicates in input
    }
    edges_.assign(normalized.begin(), normalized.end());
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::optional<int> Graph::index_of(const std::string& name) const {
    for (int i = 0; i < player_count(); ++i)
        if (players_[i] == name) return i;
    return std::nullopt;
}

bool Graph::has_edge(int i, int j) const {
    const auto& nb = adj_.at(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

bool Graph::is_forest() const {
    // acyclic iff every component has |edges| == |nodes| - 1
    return static_cast<int>(edges_.size()) == player_count() - static_cast<int>(components().size());
}

bool Graph::is_connected_graph() const { return components().size() == 1; }

std::vector<std::vector<int>> Graph::components() const {
    const int n = player_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> nodes{start};
        comp[start] = id;
        for (std::size_t head = 0; head < nodes.size(); ++head) {
            for (int nb : adj_[nodes[head]]) {
                if (comp[nb] < 0) {
                    comp[nb] = id;
                    nodes.push_back(nb);
                }
            }
        }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(std::move(nodes));
    }
    return out;
}

std::optional<int> Graph::star_center() const {
    const int n = player_count();
    if (!is_tree()) return std::nullopt;
    if (n == 1) return 0;
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(adj_[i].size()) == n - 1) return i;
    return std::nullopt;
}

Topology classify(const Graph& graph) {
    if (!graph.is_forest()) return Topology::Cyclic;
    if (!graph.is_connected_graph()) return Topology::Forest;
    int max_degree = 0;
    for (int i = 0; i < graph.player_count(); ++i)
        max_degree = std::max(max_degree, static_cast<int>(graph.neighbors(i).size()));
    if (max_degree <= 2) return Topology::Path;
    if (graph.star_center()) return Topology::Star;
    return Topology::Tree;
}

std::string to_string(Topology t) {
    switch (t) {
        case Topology::Path: return "path";
        case Topology::Star: return "star";
        case Topology::Tree: return "tree";
        case Topology::Forest: return "forest";
        case Topology::Cyclic: return "cyclic";
    }
    return "?";
}

RootedTree::RootedTree(const Graph& base, int root) : base_(&base), root_(root) {
    const int n = base.player_count();
    if (root < 0 || root >= n) throw BadParameter("root out of range");
    if (!base.is_tree()) throw NotATree("graph is not a tree (cycle or disconnected)");
    parent_.assign(n, -1);
    children_.assign(n, {});
    height_.assign(n, 0);
    std::vector<int> order{root};
    std::vector<bool> visited(n, false);
    visited[root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int i = order[head];
        for (int nb : base.neighbors(i)) {
            if (visited[nb]) continue;
            visited[nb] = true;
            parent_[nb] = i;
            children_[i].push_back(nb);
            order.push_back(nb);
        }
    }
    // reverse BFS order lists children before parents
    succ_.assign(n, {});
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int i = *it;
        succ_[i].push_back(i);
        int h = 0;
        for (int c : children_[i]) {
            h = std::max(h, height_[c] + 1);
            succ_[i].insert(succ_[i].end(), succ_[c].begin(), succ_[c].end());
        }
        height_[i] = children_[i].empty() ? 0 : h;
        std::sort(succ_[i].begin(), succ_[i].end());
    }
    levels_.assign(height_[root] + 1, {});
    for (int i = 0; i < n; ++i) levels_[height_[i]].push_back(i);
}

int RootedTree::parent(int i) const {
    if (i == root_) throw BadParameter("root has no parent");
    return parent_.at(i);
}

std::vector<int> RootedTree::children_of_set(const Coalition& x) const {
    std::vector<int> out;
    for (int member : x.members()) {
        for (int c : children_.at(member)) {
            if (!x.contains(c)) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootedTree root_tree(const Graph& graph, int root) { return RootedTree(graph, root); }

bool is_connected(const Graph& graph, const Coalition& x) {
    const auto& members = x.members();
    if (members.size() == 1) return true;
    for (int p : members) {
        if (p < 0 || p >= graph.player_count()) throw BadParameter("coalition member out of range");
    }
    std::unordered_set<int> inside(members.begin(), members.end());
    std::vector<int> stack{members.front()};
    std::unordered_set<int> seen{members.front()};
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int nb : graph.neighbors(i)) {
            if (inside.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                stack.push_back(nb);
            }
        }
    }
    return seen.size() == members.size();
}

namespace {

// Enumerates every connected superset of `current` inside the allowed node
// set, never touching banned nodes. Each target set is produced exactly once:
// the recursion always extends with the smallest eligible frontier node first
// and bans it from the sibling branches.
void grow_connected(const Graph& graph, const std::vector<bool>& allowed, std::vector<int>& current,
                    std::vector<bool>& in_current, std::vector<bool>& banned,
                    std::vector<Coalition>& out, std::size_t cap) {
    if (out.size() >= cap) throw CapExceeded("connected-subset enumeration exceeded cap");
    {
        std::vector<int> sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(Coalition(std::move(sorted)));
    }
    std::vector<int> frontier;
    for (int i : current) {
        for (int nb : graph.neighbors(i)) {
            if (allowed[nb] && !in_current[nb] && !banned[nb]) frontier.push_back(nb);
        }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    std::vector<int> newly_banned;
    for (int v : frontier) {
        current.push_back(v);
        in_current[v] = true;
        grow_connected(graph, allowed, current, in_current, banned, out, cap);
        in_current[v] = false;
        current.pop_back();
        banned[v] = true;
        newly_banned.push_back(v);
    }
    for (int v : newly_banned) banned[v] = false;
}

}  // namespace

std::vector<Coalition> connected_subsets(const Graph& graph, std::optional<int> anchor,
                                         const std::optional<Coalition>& within, std::size_t cap) {
    const int n = graph.player_count();
    std::vector<bool> allowed(n, false);
    if (within) {
        for (int p : within->members()) {
            if (p < 0 || p >= n) throw BadParameter("within-set member out of range");
            allowed[p] = true;
        }
    } else {
        allowed.assign(n, true);
    }
    if (anchor) {
        if (*anchor < 0 || *anchor >= n) throw BadParameter("anchor out of range");
        if (!allowed[*anchor]) throw BadParameter("anchor must lie inside the within-set");
    }

    std::vector<Coalition> out;
    std::vector<bool> in_current(n, false), banned(n, false);
    auto run_from = [&](int start) {
        std::vector<int> current{start};
        in_current[start] = true;
        grow_connected(graph, allowed, current, in_current, banned, out, cap);
        in_current[start] = false;
    };

    if (anchor) {
        run_from(*anchor);
    } else {
        // Sets whose minimum element is `start`: enumerate with all smaller
        // nodes excluded, so every connected set is produced exactly once.
        for (int start = 0; start < n; ++start) {
            if (!allowed[start]) continue;
            std::vector<bool> saved = allowed;
            for (int lower = 0; lower < start; ++lower) allowed[lower] = false;
            run_from(start);
            allowed = saved;
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace hedonic
