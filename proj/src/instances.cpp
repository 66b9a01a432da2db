#include "hedonic/instances.hpp"

#include <algorithm>
#include <random>

namespace hedonic {

namespace {

Graph path_graph(std::vector<std::string> names) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < static_cast<int>(names.size()); ++i) edges.emplace_back(i, i + 1);
    return Graph(std::move(names), std::move(edges));
}

// Gadget players first, then the base graph's vertices.
std::vector<std::string> prefixed_names(const std::vector<std::string>& base,
                                        std::vector<std::string> prefix) {
    for (const auto& name : base) prefix.push_back(name);
    return prefix;
}

}  // namespace

GameInstance fixture(const std::string& name) {
    if (name == "parliament3") {
        Graph g = path_graph({"l", "c", "r"});
        UtilityMatrix u(3, false);
        const int l = 0, c = 1, r = 2;
        u.set(l, c, 1);
        u.set(l, r, -2);
        u.set(c, l, 2);
        u.set(c, r, 0);
        u.set(r, c, 2);
        u.set(r, l, 0);
        return GameInstance(std::move(g), std::move(u));
    }
    if (name == "parliament3_enemy_variant") {
        // the centrist is equally happy with either wing; the wings hate
        // each other with the full enemy penalty -|N|
        Graph g = path_graph({"l", "c", "r"});
        UtilityMatrix u(3, true);
        const int l = 0, c = 1, r = 2;
        u.set(l, c, 1);
        u.set(c, r, 1);
        u.set(l, r, -3);
        return GameInstance(std::move(g), std::move(u));
    }
    if (name == "parliament5") {
        Graph g = path_graph({"el", "l", "c", "r", "er"});
        UtilityMatrix u(5, false);
        const int el = 0, l = 1, c = 2, r = 3, er = 4;
        u.set(el, l, -1);
        u.set(el, c, 2);
        u.set(el, r, 0);
        u.set(el, er, 0);
        u.set(l, el, 0);
        u.set(l, c, 0);
        u.set(l, r, -10);
        u.set(l, er, 0);
        u.set(c, el, -2);
        u.set(c, l, 2);
        u.set(c, r, 2);
        u.set(c, er, -2);
        u.set(r, el, 0);
        u.set(r, l, -10);
        u.set(r, c, 0);
        u.set(r, er, 0);
        u.set(er, el, 0);
        u.set(er, l, 0);
        u.set(er, c, 2);
        u.set(er, r, -1);
        return GameInstance(std::move(g), std::move(u));
    }
    throw UnknownFixture("unknown fixture: " + name);
}

int smallest_non_divisor(int k) {
    if (k < 1) throw BadParameter("smallest_non_divisor needs k >= 1");
    int d = 2;
    while (k % d == 0) ++d;
    return d;
}

GameInstance cycle_no_is(int k, std::size_t cap) {
    if (k < 3) throw BadParameter("a cycle needs at least 3 players");
    std::vector<std::string> names;
    names.reserve(k);
    for (int i = 0; i < k; ++i) names.push_back("p" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    Graph g(std::move(names), std::move(edges));

    const int d = smallest_non_divisor(k);
    ExplicitPreferences prefs(k);
    for (int h = 0; h < k; ++h) {
        const int next = (h + 1) % k;
        std::vector<Coalition> with_next, without_next;
        for (const Coalition& x : connected_subsets(g, h, std::nullopt, cap)) {
            if (x.size() > static_cast<std::size_t>(d)) continue;  // short arcs only
            (x.contains(next) ? with_next : without_next).push_back(x);
        }
        prefs.add_tier(h, std::move(with_next));
        prefs.add_tier(h, std::move(without_next));
        // everything longer falls into the implicit bottom tier
    }
    return GameInstance(std::move(g), std::move(prefs));
}

GameInstance reduce_clique_enemy_star(const Graph& base) {
    const int v_count = base.player_count();
    std::vector<std::string> names = prefixed_names(base.players(), {"s"});
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < v_count; ++v) edges.emplace_back(0, v + 1);
    Graph g(std::move(names), std::move(edges));

    const int n = v_count + 1;
    UtilityMatrix u(n, true);
    for (int v = 0; v < v_count; ++v) u.set(0, v + 1, 1);
    // -|V|-1 equals -|N|, so the game is enemy-oriented in the exact sense
    const Rational enemy(-n);
    for (int a = 0; a < v_count; ++a) {
        for (int b = a + 1; b < v_count; ++b) {
            u.set(a + 1, b + 1, base.has_edge(a, b) ? Rational(1) : enemy);
        }
    }
    return GameInstance(std::move(g), std::move(u));
}

GameInstance reduce_clique_scr_star(const Graph& base, int t) {
    if (t < 2) throw BadParameter("the strict-core reduction needs t >= 2");
    const int v_count = base.player_count();
    std::vector<std::string> names = prefixed_names(base.players(), {"a", "b", "c"});
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}};
    for (int v = 0; v < v_count; ++v) edges.emplace_back(1, v + 3);
    Graph g(std::move(names), std::move(edges));

    const int n = v_count + 3;
    const ReductionParams params{t, static_cast<long long>(n) + 1};
    const Rational minus_m(-params.penalty);
    UtilityMatrix u(n, true);
    const int a = 0, b = 1, c = 2;
    u.set(a, b, t - 1);
    u.set(c, b, t - 1);
    u.set(a, c, minus_m);
    for (int v = 0; v < v_count; ++v) {
        u.set(a, v + 3, minus_m);
        u.set(c, v + 3, minus_m);
        u.set(b, v + 3, 1);
    }
    const Rational edge_value = Rational(-1) / Rational(t - 1);
    for (int x = 0; x < v_count; ++x)
        for (int y = x + 1; y < v_count; ++y)
            u.set(x + 3, y + 3, base.has_edge(x, y) ? edge_value : minus_m);
    return GameInstance(std::move(g), std::move(u));
}

GameInstance reduce_clique_ins_star(const Graph& base, int t) {
    if (t < 1) throw BadParameter("the in-neighbor reduction needs t >= 1");
    const int v_count = base.player_count();
    std::vector<std::string> names = prefixed_names(base.players(), {"a", "b", "c"});
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}};
    for (int v = 0; v < v_count; ++v) edges.emplace_back(1, v + 3);
    Graph g(std::move(names), std::move(edges));

    const int n = v_count + 3;
    const ReductionParams params{t, static_cast<long long>(n) + 1};
    const Rational minus_m(-params.penalty);
    UtilityMatrix u(n, false);
    const int a = 0, b = 1, c = 2;
    u.set(a, b, 1);
    u.set(a, c, -2);
    u.set(b, a, t);
    u.set(b, c, 0);
    u.set(c, a, 0);
    u.set(c, b, 2);
    for (int v = 0; v < v_count; ++v) {
        u.set(a, v + 3, minus_m);
        u.set(c, v + 3, minus_m);
        u.set(v + 3, a, minus_m);
        u.set(v + 3, c, minus_m);
        u.set(b, v + 3, 1);
        u.set(v + 3, b, 0);
    }
    for (int x = 0; x < v_count; ++x)
        for (int y = 0; y < v_count; ++y) {
            if (x == y) continue;
            u.set(x + 3, y + 3, base.has_edge(x, y) ? Rational(0) : minus_m);
        }
    return GameInstance(std::move(g), std::move(u));
}

GameInstance reduce_clique_irins_tree(const Graph& base, int t) {
    if (t < 1) throw BadParameter("the IR-in-neighbor reduction needs t >= 1");
    const int v_count = base.player_count();
    std::vector<std::string> names = prefixed_names(base.players(), {"a", "b", "c", "d", "e"});
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    for (int v = 0; v < v_count; ++v) edges.emplace_back(2, v + 5);
    Graph g(std::move(names), std::move(edges));

    const int n = v_count + 5;
    const ReductionParams params{t, static_cast<long long>(n) + 1};
    const Rational minus_m(-params.penalty);
    UtilityMatrix u(n, false);
    const int a = 0, b = 1, c = 2, d = 3, e = 4;
    u.set(a, b, -1);
    u.set(a, c, 2);
    u.set(a, d, 0);
    u.set(a, e, 0);
    u.set(b, a, 0);
    u.set(b, c, 0);
    u.set(b, d, minus_m);
    u.set(b, e, 0);
    u.set(c, a, -t);
    u.set(c, b, t);
    u.set(c, d, t);
    u.set(c, e, -t);
    u.set(d, a, 0);
    u.set(d, b, minus_m);
    u.set(d, c, 0);
    u.set(d, e, 0);
    u.set(e, a, 0);
    u.set(e, b, 0);
    u.set(e, c, 2);
    u.set(e, d, -1);
    for (int v = 0; v < v_count; ++v) {
        for (int spine : {a, b, d, e}) {
            u.set(spine, v + 5, minus_m);
            u.set(v + 5, spine, minus_m);
        }
        u.set(c, v + 5, 1);
        u.set(v + 5, c, 0);
    }
    for (int x = 0; x < v_count; ++x)
        for (int y = 0; y < v_count; ++y) {
            if (x == y) continue;
            u.set(x + 5, y + 5, base.has_edge(x, y) ? Rational(0) : minus_m);
        }
    return GameInstance(std::move(g), std::move(u));
}

GameInstance reduce_maxcut_star(const WeightedGraph& base) {
    const int v_count = base.node_count();
    std::vector<std::string> names = prefixed_names(base.nodes(), {"s"});
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < v_count; ++v) edges.emplace_back(0, v + 1);
    Graph g(std::move(names), std::move(edges));

    UtilityMatrix u(v_count + 1, true);
    for (int v = 0; v < v_count; ++v) {
        const long long total = base.weight_sum(v);
        if (total != 0) u.set(0, v + 1, total);
    }
    for (int x = 0; x < v_count; ++x)
        for (int y = x + 1; y < v_count; ++y) {
            if (base.has_edge(x, y)) u.set(x + 1, y + 1, Rational(-2 * base.weight(x, y)));
        }
    return GameInstance(std::move(g), std::move(u));
}

Graph unique_clique_family(const Graph& base, int s) {
    const int v_count = base.player_count();
    if (s < 1) throw BadParameter("clique size must be at least 1");
    std::vector<std::string> names = base.players();
    for (int i = 0; i < s; ++i) names.push_back("q" + std::to_string(i));
    std::vector<std::pair<int, int>> edges = base.edges();
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) edges.emplace_back(v_count + i, v_count + j);
    return Graph(std::move(names), std::move(edges));
}

namespace {

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    // tiny ranges, so modulo bias is irrelevant; avoids distribution classes
    // whose output is not pinned down by the standard
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Graph random_graph(GraphKind kind, int n, std::mt19937_64& rng) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case GraphKind::Path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case GraphKind::Star:
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case GraphKind::Cycle:
            if (n < 3) throw BadParameter("a cycle needs at least 3 players");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            break;
        case GraphKind::Tree:
            for (int i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(draw(rng, 0, i - 1)), i);
            break;
    }
    return Graph(std::move(names), std::move(edges));
}

}  // namespace

GameInstance random_instance(GraphKind kind, int n, PreferenceKind preference_kind,
                             std::uint64_t seed, std::size_t cap) {
    if (n < 1) throw BadParameter("games need at least one player");
    std::mt19937_64 rng(seed);
    Graph g = random_graph(kind, n, rng);

    switch (preference_kind) {
        case PreferenceKind::Additive: {
            UtilityMatrix u(n, false);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) u.set(i, j, Rational(draw(rng, -9, 9)));
            return GameInstance(std::move(g), std::move(u));
        }
        case PreferenceKind::SymmetricAdditive: {
            UtilityMatrix u(n, true);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) u.set(i, j, Rational(draw(rng, -9, 9)));
            return GameInstance(std::move(g), std::move(u));
        }
        case PreferenceKind::Enemy: {
            UtilityMatrix u(n, true);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    u.set(i, j, draw(rng, 0, 1) == 1 ? Rational(1) : Rational(-n));
            return GameInstance(std::move(g), std::move(u));
        }
        case PreferenceKind::Explicit: {
            ExplicitPreferences prefs(n);
            for (int i = 0; i < n; ++i) {
                std::vector<Coalition> pool = connected_subsets(g, i, std::nullopt, cap);
                for (std::size_t k = pool.size(); k > 1; --k) {
                    const std::size_t pick = static_cast<std::size_t>(draw(rng, 0, k - 1));
                    std::swap(pool[pick], pool[k - 1]);
                }
                std::vector<Coalition> tier;
                for (Coalition& x : pool) {
                    tier.push_back(std::move(x));
                    if (draw(rng, 0, 1) == 1) {
                        prefs.add_tier(i, std::move(tier));
                        tier.clear();
                    }
                }
                if (!tier.empty()) prefs.add_tier(i, std::move(tier));
            }
            return GameInstance(std::move(g), std::move(prefs));
        }
    }
    throw BadParameter("unknown preference kind");
}

}  // namespace hedonic
