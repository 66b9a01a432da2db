#include "hedonic/game.hpp"

#include <algorithm>
#include <cassert>

namespace hedonic {

UtilityMatrix::UtilityMatrix(int player_count, bool symmetric)
    : n_(player_count), symmetric_(symmetric), u_(static_cast<std::size_t>(n_) * n_) {
    if (n_ <= 0) throw BadParameter("utility matrix needs at least one player");
}

void UtilityMatrix::set(int i, int j, const Rational& value) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw BadParameter("utility index out of range");
    if (i == j) throw BadParameter("diagonal utilities are fixed to zero");
    u_[static_cast<std::size_t>(i) * n_ + j] = value;
    if (symmetric_) u_[static_cast<std::size_t>(j) * n_ + i] = value;
}

const Rational& UtilityMatrix::at(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw BadParameter("utility index out of range");
    return u_[static_cast<std::size_t>(i) * n_ + j];
}

bool UtilityMatrix::enemy_oriented() const {
    const Rational friend_value(1);
    const Rational enemy_value(-n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            const Rational& v = at(i, j);
            if (!(v == friend_value) && !(v == enemy_value)) return false;
        }
    }
    return true;
}

ExplicitPreferences::ExplicitPreferences(int player_count) {
    if (player_count <= 0) throw BadParameter("preferences need at least one player");
    tiers_.resize(player_count);
    rank_.resize(player_count);
}

void ExplicitPreferences::add_tier(int player, std::vector<Coalition> tier) {
    if (player < 0 || player >= player_count()) throw BadParameter("player out of range");
    if (tier.empty()) throw BadParameter("empty preference tier");
    const std::size_t tier_index = tiers_[player].size();
    for (const Coalition& x : tier) {
        if (!x.contains(player))
            throw BadParameter("ranked coalition must contain the ranking player");
        if (!rank_[player].emplace(x, tier_index).second)
            throw BadParameter("coalition listed in two tiers");
    }
    std::sort(tier.begin(), tier.end(), canonical_less);
    tiers_[player].push_back(std::move(tier));
}

std::size_t ExplicitPreferences::rank(int player, const Coalition& x) const {
    const auto& table = rank_.at(player);
    auto it = table.find(x);
    return it == table.end() ? tiers_[player].size() : it->second;
}

GameInstance::GameInstance(Graph graph, UtilityMatrix utilities)
    : graph_(std::move(graph)), prefs_(std::move(utilities)) {
    validate();
}

GameInstance::GameInstance(Graph graph, ExplicitPreferences preferences)
    : graph_(std::move(graph)), prefs_(std::move(preferences)) {
    validate();
}

GameInstance::GameInstance(const GameInstance& other)
    : graph_(other.graph_), prefs_(other.prefs_) {}

GameInstance& GameInstance::operator=(const GameInstance& other) {
    if (this != &other) {
        graph_ = other.graph_;
        prefs_ = other.prefs_;
        oracle_calls_.store(0, std::memory_order_relaxed);
    }
    return *this;
}

void GameInstance::validate() const {
    const int n = graph_.player_count();
    if (additive()) {
        if (utilities().player_count() != n)
            throw BadParameter("utility matrix size does not match the player set");
    } else {
        const auto& prefs = explicit_preferences();
        if (prefs.player_count() != n)
            throw BadParameter("preference table size does not match the player set");
        for (int i = 0; i < n; ++i) {
            for (const auto& tier : prefs.tiers(i)) {
                for (const Coalition& x : tier) {
                    if (x.members().back() >= n)
                        throw BadParameter("ranked coalition mentions an unknown player");
                    if (!is_connected(graph_, x))
                        throw BadParameter("ranked coalition is not connected");
                }
            }
        }
    }
}

const UtilityMatrix& GameInstance::utilities() const {
    if (!additive()) throw NotAdditive("game has explicit preferences");
    return std::get<UtilityMatrix>(prefs_);
}

const ExplicitPreferences& GameInstance::explicit_preferences() const {
    if (additive()) throw BadParameter("game has additive preferences");
    return std::get<ExplicitPreferences>(prefs_);
}

Ordering compare(const GameInstance& game, int i, const Coalition& x, const Coalition& y) {
    if (!x.contains(i) || !y.contains(i))
        throw PlayerNotMember("compare() needs the player in both coalitions");
    game.count_oracle_call();
    if (game.additive()) {
        const UtilityMatrix& u = game.utilities();
        Rational vx, vy;
        for (int j : x.members()) vx += u.at(i, j);
        for (int j : y.members()) vy += u.at(i, j);
        if (vx == vy) return Ordering::Equal;
        return vx > vy ? Ordering::Better : Ordering::Worse;
    }
    assert(is_connected(game.graph(), x) && is_connected(game.graph(), y));
    const auto& prefs = game.explicit_preferences();
    const std::size_t rx = prefs.rank(i, x);
    const std::size_t ry = prefs.rank(i, y);
    if (rx == ry) return Ordering::Equal;
    return rx < ry ? Ordering::Better : Ordering::Worse;
}

bool m_compare(const GameInstance& game, const Coalition& x, const Coalition& y) {
    if (!x.intersects(y)) return false;
    for (int i : x.members()) {
        if (!y.contains(i)) continue;
        if (compare(game, i, x, y) == Ordering::Worse) return false;
    }
    return true;
}

bool individually_rational(const GameInstance& game, const Coalition& x) {
    for (int i : x.members()) {
        if (compare(game, i, x, Coalition{i}) == Ordering::Worse) return false;
    }
    return true;
}

Rational utility(const GameInstance& game, int i, const Coalition& x) {
    if (!x.contains(i)) throw PlayerNotMember("utility() needs the player in the coalition");
    const UtilityMatrix& u = game.utilities();
    Rational total;
    for (int j : x.members()) total += u.at(i, j);
    return total;
}

GameInstance refine(const GameInstance& game, std::size_t cap) {
    const Graph& graph = game.graph();
    const int n = graph.player_count();
    ExplicitPreferences strict(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Coalition> feasible = connected_subsets(graph, i, std::nullopt, cap);
        // Group into the original indifference tiers, best first.
        std::vector<std::vector<Coalition>> tiers;
        if (game.additive()) {
            std::vector<std::pair<Rational, Coalition>> valued;
            valued.reserve(feasible.size());
            for (const Coalition& x : feasible) valued.emplace_back(utility(game, i, x), x);
            std::stable_sort(valued.begin(), valued.end(),
                             [](const auto& a, const auto& b) { return a.first > b.first; });
            std::size_t idx = 0;
            while (idx < valued.size()) {
                std::size_t stop = idx + 1;
                while (stop < valued.size() && valued[stop].first == valued[idx].first) ++stop;
                std::vector<Coalition> tier;
                for (std::size_t k = idx; k < stop; ++k) tier.push_back(valued[k].second);
                tiers.push_back(std::move(tier));
                idx = stop;
            }
        } else {
            const auto& prefs = game.explicit_preferences();
            const std::size_t bottom = prefs.tiers(i).size();
            std::vector<std::vector<Coalition>> grouped(bottom + 1);
            for (const Coalition& x : feasible) grouped[prefs.rank(i, x)].push_back(x);
            for (auto& tier : grouped)
                if (!tier.empty()) tiers.push_back(std::move(tier));
        }
        // Break every tier into singletons: larger coalitions first, then
        // lexicographic. A former tie between X and a proper subset of X is
        // therefore always resolved in favor of X.
        for (auto& tier : tiers) {
            std::sort(tier.begin(), tier.end(), [](const Coalition& a, const Coalition& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                return a.members() < b.members();
            });
            for (const Coalition& x : tier) strict.add_tier(i, {x});
        }
    }
    return GameInstance(graph, std::move(strict));
}

}  // namespace hedonic
