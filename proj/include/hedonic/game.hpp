#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "hedonic/graph.hpp"
#include "hedonic/rational.hpp"

namespace hedonic {

// Additively separable preferences: player i values coalition X at
// sum of u(i,j) over j in X. The diagonal is identically zero and cannot be
// assigned. Entries are exact rationals.
class UtilityMatrix {
public:
    UtilityMatrix(int player_count, bool symmetric);

    int player_count() const { return n_; }
    bool symmetric() const { return symmetric_; }

    void set(int i, int j, const Rational& value);
    const Rational& at(int i, int j) const;

    // Every off-diagonal entry lies in {1, -n}: each player is either a friend
    // or an intolerable enemy.
    bool enemy_oriented() const;

private:
    int n_;
    bool symmetric_;
    std::vector<Rational> u_;  // row-major, diagonal kept at zero
};

// Fully explicit weak order for one player: a list of indifference tiers over
// feasible coalitions containing her, best tier first. Feasible coalitions not
// listed anywhere form one implicit bottom tier, strictly below all listed
// tiers and mutually indifferent.
class ExplicitPreferences {
public:
    explicit ExplicitPreferences(int player_count);

    int player_count() const { return static_cast<int>(tiers_.size()); }

    void add_tier(int player, std::vector<Coalition> tier);
    const std::vector<std::vector<Coalition>>& tiers(int player) const { return tiers_.at(player); }

    // Rank of a coalition for `player`: 0 = best tier; unlisted coalitions get
    // rank tiers(player).size() (the implicit bottom).
    std::size_t rank(int player, const Coalition& x) const;

private:
    std::vector<std::vector<std::vector<Coalition>>> tiers_;
    std::vector<std::map<Coalition, std::size_t>> rank_;
};

enum class Ordering { Worse, Equal, Better };

// A hedonic game on a communication graph. Immutable after construction; the
// only mutable member is the oracle-call counter, which instruments how many
// preference queries the solvers issue. Copies start with a zeroed counter.
class GameInstance {
public:
    GameInstance(Graph graph, UtilityMatrix utilities);
    GameInstance(Graph graph, ExplicitPreferences preferences);

    GameInstance(const GameInstance& other);
    GameInstance& operator=(const GameInstance& other);

    const Graph& graph() const { return graph_; }
    int player_count() const { return graph_.player_count(); }

    bool additive() const { return std::holds_alternative<UtilityMatrix>(prefs_); }
    const UtilityMatrix& utilities() const;
    const ExplicitPreferences& explicit_preferences() const;

    std::uint64_t oracle_count() const { return oracle_calls_.load(std::memory_order_relaxed); }
    void reset_oracle_count() const { oracle_calls_.store(0, std::memory_order_relaxed); }
    void count_oracle_call() const { oracle_calls_.fetch_add(1, std::memory_order_relaxed); }

private:
    void validate() const;

    Graph graph_;
    std::variant<UtilityMatrix, ExplicitPreferences> prefs_;
    mutable std::atomic<std::uint64_t> oracle_calls_{0};
};

// The preference oracle: how does player i rank x against y? Requires i in
// both coalitions. Every solver accesses preferences only through this call
// (and utility() below), so the instance's counter measures oracle complexity.
Ordering compare(const GameInstance& game, int i, const Coalition& x, const Coalition& y);

// X ⪰ᵐ Y: the coalitions intersect and every common member weakly prefers X.
bool m_compare(const GameInstance& game, const Coalition& x, const Coalition& y);

// Every member weakly prefers x to her singleton.
bool individually_rational(const GameInstance& game, const Coalition& x);

// Additive games only: the exact value player i assigns to coalition x.
Rational utility(const GameInstance& game, int i, const Coalition& x);

// Strict total refinement of the game's preferences: each player's weak order
// becomes a strict order in which former ties are broken by decreasing
// cardinality, then lexicographically. In particular X is preferred to any of
// its proper subsets it was tied with, which is what the core/IS composition
// needs. Requires materializing each player's feasible coalitions.
GameInstance refine(const GameInstance& game, std::size_t cap = kDefaultSubsetCap);

}  // namespace hedonic
