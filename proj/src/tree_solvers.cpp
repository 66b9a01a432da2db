#include "hedonic/tree_solvers.hpp"

#include <algorithm>

namespace hedonic {

namespace {

// Rooted orientation of one connected component, indexed by global node ids.
// The arrays are only meaningful for the component's members.
struct Orientation {
    int root = -1;
    std::vector<std::vector<int>> levels;  // nodes grouped by height, bottom level first
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<std::vector<int>> succ;

    std::vector<int> children_of_set(const Coalition& x) const {
        std::vector<int> out;
        for (int member : x.members()) {
            for (int c : children[member]) {
                if (!x.contains(c)) out.push_back(c);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

Orientation orient(const Graph& graph, const std::vector<int>& nodes, std::optional<int> root) {
    Orientation o;
    o.root = nodes.front();
    if (root && std::find(nodes.begin(), nodes.end(), *root) != nodes.end()) o.root = *root;
    const int n = graph.player_count();
    o.parent.assign(n, -1);
    o.children.assign(n, {});
    o.succ.assign(n, {});
    std::vector<int> height(n, 0);
    std::vector<int> order{o.root};
    std::vector<bool> visited(n, false);
    visited[o.root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int i = order[head];
        for (int nb : graph.neighbors(i)) {
            if (visited[nb]) continue;
            visited[nb] = true;
            o.parent[nb] = i;
            o.children[i].push_back(nb);
            order.push_back(nb);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int i = *it;
        o.succ[i].push_back(i);
        for (int c : o.children[i]) {
            height[i] = std::max(height[i], height[c] + 1);
            o.succ[i].insert(o.succ[i].end(), o.succ[c].begin(), o.succ[c].end());
        }
        std::sort(o.succ[i].begin(), o.succ[i].end());
    }
    o.levels.assign(height[o.root] + 1, {});
    for (int i : order) o.levels[height[i]].push_back(i);
    for (auto& level : o.levels) std::sort(level.begin(), level.end());
    return o;
}

// Deterministic choice among equally preferred options: larger first, then
// lexicographically smaller.
bool tie_break_before(const Coalition& a, const Coalition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.members() < b.members();
}

// Most preferred coalition for `player` among `options` (all containing her),
// ties broken by tie_break_before. `options` must be non-empty.
Coalition preferred_choice(const GameInstance& game, int player,
                           const std::vector<Coalition>& options) {
    const Coalition* best = &options.front();
    for (std::size_t k = 1; k < options.size(); ++k) {
        const Coalition& cand = options[k];
        const Ordering o = compare(game, player, cand, *best);
        if (o == Ordering::Better || (o == Ordering::Equal && tie_break_before(cand, *best)))
            best = &cand;
    }
    return *best;
}

void require_forest(const GameInstance& game, std::optional<int> root) {
    if (!game.graph().is_forest()) throw NotAForest("solver requires an acyclic graph");
    if (root && (*root < 0 || *root >= game.graph().player_count()))
        throw BadParameter("root player out of range");
}

// ---- individual stability --------------------------------------------------

void solve_is_component(const GameInstance& game, const Orientation& tree,
                        std::vector<std::optional<Coalition>>& block,
                        std::vector<std::vector<Coalition>>& sub_partition,
                        const BlockChangeObserver& observer) {
    for (const auto& level : tree.levels) {
        for (int i : level) {
            // the children whose blocks would welcome i, and i's own singleton
            std::vector<Coalition> options{Coalition{i}};
            for (int k : tree.children[i]) {
                const Coalition joined = block[k]->with(i);
                if (m_compare(game, joined, *block[k])) options.push_back(joined);
            }
            Coalition chosen = preferred_choice(game, i, options);
            if (observer && chosen.size() > 1) {
                const Coalition absorbed_from = chosen.without(i);
                for (int m : absorbed_from.members()) observer(m, absorbed_from, chosen);
            }
            block[i] = std::move(chosen);

            // absorb adjacent successors that strictly gain and that every
            // current member approves; rescan from the lowest index after
            // each absorption
            bool absorbed = true;
            while (absorbed) {
                absorbed = false;
                for (int j : tree.children_of_set(*block[i])) {
                    const Coalition joined = block[i]->with(j);
                    if (compare(game, j, joined, *block[j]) == Ordering::Better &&
                        m_compare(game, joined, *block[i])) {
                        if (observer) {
                            observer(j, *block[j], joined);
                            for (int m : block[i]->members()) observer(m, *block[i], joined);
                        }
                        block[i] = joined;
                        absorbed = true;
                        break;
                    }
                }
            }

            sub_partition[i].clear();
            sub_partition[i].push_back(*block[i]);
            for (int k : tree.children_of_set(*block[i])) {
                sub_partition[i].insert(sub_partition[i].end(), sub_partition[k].begin(),
                                        sub_partition[k].end());
            }
        }
    }
}

// ---- core stability ----------------------------------------------------------

void solve_core_component(const GameInstance& game, const Orientation& tree, std::size_t cap,
                          std::vector<std::optional<Coalition>>& guarantee,
                          std::vector<Coalition>& blocks) {
    for (const auto& level : tree.levels) {
        for (int i : level) {
            // candidate blocks: feasible, inside i's subtree, and acceptable to
            // every other member relative to her own guarantee
            std::vector<Coalition> cand;
            for (const Coalition& x :
                 connected_subsets(game.graph(), i, Coalition(tree.succ[i]), cap)) {
                bool admissible = true;
                for (int j : x.members()) {
                    if (j == i) continue;
                    if (compare(game, j, x, *guarantee[j]) == Ordering::Worse) {
                        admissible = false;
                        break;
                    }
                }
                if (admissible) cand.push_back(x);
            }
            // {i} is always admissible, so cand is never empty
            guarantee[i] = preferred_choice(game, i, cand);
        }
    }
    std::vector<int> frontier{tree.root};
    while (!frontier.empty()) {
        const int i = frontier.back();
        frontier.pop_back();
        blocks.push_back(*guarantee[i]);
        for (int k : tree.children_of_set(*guarantee[i])) frontier.push_back(k);
    }
}

// ---- NS / INS / IR-INS dynamic program --------------------------------------

bool alpha_feasible(const GameInstance& game, Concept alpha, int deviator, const Coalition& from,
                    const Coalition& to) {
    return classify_deviation(game, deviator, from, &to).has(alpha);
}

bool solve_dp_component(const GameInstance& game, Concept alpha, const Orientation& tree,
                        std::size_t cap, DpTable& table, std::vector<Coalition>& blocks) {
    const int n = game.player_count();
    std::vector<std::vector<Coalition>> anchored(n);
    for (const auto& level : tree.levels)
        for (int i : level)
            anchored[i] = connected_subsets(game.graph(), i, Coalition(tree.succ[i]), cap);

    auto& f = table.f;
    auto& witness = table.witness;
    for (const auto& level : tree.levels) {
        for (int i : level) {
            for (const Coalition& x : anchored[i]) {
                if (!individually_rational(game, x)) {
                    f[x] = false;
                    continue;
                }
                bool ok = true;
                for (int j : tree.children_of_set(x)) {
                    const int parent_of_j = tree.parent[j];
                    std::optional<Coalition> survivor;
                    for (const Coalition& xj : anchored[j]) {
                        if (!f.at(xj)) continue;
                        if (alpha_feasible(game, alpha, j, xj, x)) continue;
                        if (alpha_feasible(game, alpha, parent_of_j, x, xj)) continue;
                        survivor = xj;
                        break;
                    }
                    if (!survivor) {
                        ok = false;
                        break;
                    }
                    witness.emplace(std::make_pair(x, j), *survivor);
                }
                f[x] = ok;
            }
        }
    }

    std::optional<Coalition> root_block;
    for (const Coalition& x : anchored[tree.root]) {
        if (f.at(x)) {
            root_block = x;  // anchored lists are canonically ordered
            break;
        }
    }
    if (!root_block) return false;

    std::vector<Coalition> frontier{*root_block};
    while (!frontier.empty()) {
        Coalition x = std::move(frontier.back());
        frontier.pop_back();
        for (int j : tree.children_of_set(x)) frontier.push_back(witness.at({x, j}));
        blocks.push_back(std::move(x));
    }
    return true;
}

}  // namespace

Partition solve_is(const GameInstance& game, std::optional<int> root, IsSolverState* state_out,
                   const BlockChangeObserver& observer) {
    require_forest(game, root);
    const int n = game.player_count();
    std::vector<std::optional<Coalition>> block(n);
    std::vector<std::vector<Coalition>> sub_partition(n);
    std::vector<Coalition> blocks;
    for (const auto& nodes : game.graph().components()) {
        const Orientation tree = orient(game.graph(), nodes, root);
        solve_is_component(game, tree, block, sub_partition, observer);
        blocks.insert(blocks.end(), sub_partition[tree.root].begin(),
                      sub_partition[tree.root].end());
        if (state_out) {
            for (int i : nodes) {
                state_out->best_block.emplace(i, *block[i]);
                state_out->subtree_partition.emplace(i, sub_partition[i]);
            }
        }
    }
    return Partition(std::move(blocks), n);
}

Partition solve_core(const GameInstance& game, std::optional<int> root, GuaranteeTable* table_out,
                     std::size_t cap) {
    require_forest(game, root);
    const int n = game.player_count();
    std::vector<std::optional<Coalition>> guarantee(n);
    std::vector<Coalition> blocks;
    for (const auto& nodes : game.graph().components()) {
        const Orientation tree = orient(game.graph(), nodes, root);
        solve_core_component(game, tree, cap, guarantee, blocks);
        if (table_out) {
            for (int i : nodes) table_out->guarantee.emplace(i, *guarantee[i]);
        }
    }
    return Partition(std::move(blocks), n);
}

Partition solve_core_is(const GameInstance& game, std::optional<int> root, std::size_t cap) {
    require_forest(game, root);
    return solve_core(refine(game, cap), root, nullptr, cap);
}

std::optional<Partition> solve_dp(const GameInstance& game, Concept alpha, std::optional<int> root,
                                  DpTable* table_out, std::size_t cap) {
    if (alpha != Concept::NS && alpha != Concept::INS && alpha != Concept::IR_INS)
        throw BadParameter("the stability DP handles ns, ins and ir-ins only");
    require_forest(game, root);
    std::vector<Coalition> blocks;
    bool exists = true;
    DpTable table;
    for (const auto& nodes : game.graph().components()) {
        const Orientation tree = orient(game.graph(), nodes, root);
        // a stable partition must restrict to a stable one on each component,
        // so a single failing component settles nonexistence
        if (!solve_dp_component(game, alpha, tree, cap, table, blocks)) {
            exists = false;
            break;
        }
    }
    if (table_out) *table_out = std::move(table);
    if (!exists) return std::nullopt;
    return Partition(std::move(blocks), game.player_count());
}

Partition star_greedy_ir_ins(const GameInstance& game) {
    const auto center = game.graph().star_center();
    if (!center) throw NotAStar("greedy solver requires a star graph");
    const int s = *center;
    const int n = game.player_count();

    // A pair {s,j} can seed the block only if it is reachable from the
    // all-singleton partition by an IR-in-neighbor deviation of one of its
    // two members; seeding with a pair the leaf resents would hand that leaf
    // an immediate exit to her singleton. If no pair qualifies, no first
    // move into anybody's singleton exists and all singletons are stable.
    std::vector<Coalition> pair_options;
    for (int j = 0; j < n; ++j) {
        if (j == s) continue;
        const Coalition pair = Coalition{s}.with(j);
        const Ordering for_s = compare(game, s, pair, Coalition{s});
        const Ordering for_j = compare(game, j, pair, Coalition{j});
        const bool leaf_joins = for_j == Ordering::Better && for_s != Ordering::Worse;
        const bool center_joins = for_s == Ordering::Better && for_j != Ordering::Worse;
        if (leaf_joins || center_joins) pair_options.push_back(pair);
    }
    if (pair_options.empty()) return Partition::singletons(n);

    // seed with the center's favorite qualifying pair, lowest leaf index on ties
    Coalition block = pair_options.front();
    for (const Coalition& cand : pair_options) {
        if (compare(game, s, cand, block) == Ordering::Better) block = cand;
    }

    bool grew = true;
    while (grew) {
        grew = false;
        for (int p = 0; p < n; ++p) {
            if (block.contains(p)) continue;
            if (classify_deviation(game, p, Coalition{p}, &block).ir_ins) {
                block = block.with(p);
                grew = true;
                break;
            }
        }
    }

    std::vector<Coalition> blocks{block};
    for (int p = 0; p < n; ++p)
        if (!block.contains(p)) blocks.push_back(Coalition{p});
    return Partition(std::move(blocks), n);
}

Partition star_greedy_enemy_ns(const GameInstance& game) {
    const auto center = game.graph().star_center();
    if (!center) throw NotAStar("greedy solver requires a star graph");
    if (!game.additive() || !game.utilities().symmetric() || !game.utilities().enemy_oriented())
        throw NotEnemyOriented("greedy solver requires a symmetric enemy-oriented game");
    const int s = *center;
    const int n = game.player_count();
    const UtilityMatrix& u = game.utilities();
    const Rational one(1);

    Coalition block{s};
    bool grew = true;
    while (grew) {
        grew = false;
        for (int p = 0; p < n; ++p) {
            if (block.contains(p)) continue;
            bool mutual = true;
            for (int member : block.members()) {
                if (!(u.at(p, member) == one) || !(u.at(member, p) == one)) {
                    mutual = false;
                    break;
                }
            }
            if (mutual) {
                block = block.with(p);
                grew = true;
                break;
            }
        }
    }

    std::vector<Coalition> blocks{block};
    for (int p = 0; p < n; ++p)
        if (!block.contains(p)) blocks.push_back(Coalition{p});
    return Partition(std::move(blocks), n);
}

}  // namespace hedonic
