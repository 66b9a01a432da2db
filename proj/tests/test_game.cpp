#include <doctest.h>

#include <random>
#include <vector>

#include "hedonic/game.hpp"
#include "hedonic/instances.hpp"

using namespace hedonic;

namespace {

// players of the parliament3 fixture
constexpr int L = 0, C = 1, R = 2;

std::vector<Coalition> feasible_for(const GameInstance& game, int player) {
    return connected_subsets(game.graph(), player);
}

}  // namespace

TEST_CASE("published three-party comparisons") {
    const GameInstance game = fixture("parliament3");
    CHECK(compare(game, C, {L, C}, {C, R}) == Ordering::Better);
    CHECK(compare(game, R, {L, C, R}, {C, R}) == Ordering::Equal);
    CHECK(compare(game, L, {L, C}, {L}) == Ordering::Better);
    CHECK(compare(game, L, {L}, {L, C, R}) == Ordering::Better);
    CHECK(compare(game, C, {L, C, R}, {L, C}) == Ordering::Equal);
    CHECK(compare(game, C, {C, R}, {C}) == Ordering::Equal);
    CHECK(compare(game, R, {L, R}, {R}) == Ordering::Equal);
    CHECK(compare(game, L, {L, C}, {L, C}) == Ordering::Equal);
    CHECK_THROWS_AS(compare(game, R, {L, C}, {C, R}), PlayerNotMember);
}

TEST_CASE("oracle counter counts compare calls") {
    const GameInstance game = fixture("parliament3");
    game.reset_oracle_count();
    compare(game, C, {L, C}, {C, R});
    compare(game, C, {C}, {C});
    CHECK(game.oracle_count() == 2);
    const GameInstance copy = game;
    CHECK(copy.oracle_count() == 0);
}

TEST_CASE("m-comparison on the fixture") {
    const GameInstance game = fixture("parliament3");
    CHECK(m_compare(game, {L, C}, {L}));
    CHECK_FALSE(m_compare(game, {L, C, R}, {L, C}));  // l strictly loses
    CHECK_FALSE(m_compare(game, {L}, {R}));           // disjoint
    CHECK(m_compare(game, {C, R}, {C}));
}

TEST_CASE("individual rationality on the fixture") {
    const GameInstance game = fixture("parliament3");
    CHECK(individually_rational(game, {L, C}));
    CHECK_FALSE(individually_rational(game, {L, C, R}));
    CHECK(individually_rational(game, {R}));
}

TEST_CASE("additive compare equals the sign of the utility difference") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const GameInstance game =
            random_instance(GraphKind::Tree, n, PreferenceKind::Additive, rng());
        for (int i = 0; i < n; ++i) {
            const auto mine = feasible_for(game, i);
            for (const auto& x : mine)
                for (const auto& y : mine) {
                    const Rational dx = utility(game, i, x);
                    const Rational dy = utility(game, i, y);
                    const Ordering o = compare(game, i, x, y);
                    if (dx == dy) CHECK(o == Ordering::Equal);
                    else if (dx > dy) CHECK(o == Ordering::Better);
                    else CHECK(o == Ordering::Worse);
                }
        }
    }
}

TEST_CASE("compare is a total preorder over feasible coalitions") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto kind = trial % 2 == 0 ? PreferenceKind::Additive : PreferenceKind::Explicit;
        const GameInstance game = random_instance(GraphKind::Tree, n, kind, rng());
        for (int i = 0; i < n; ++i) {
            const auto mine = feasible_for(game, i);
            // completeness + antisymmetry of the coded ordering
            for (const auto& x : mine)
                for (const auto& y : mine) {
                    const Ordering xy = compare(game, i, x, y);
                    const Ordering yx = compare(game, i, y, x);
                    if (xy == Ordering::Better) CHECK(yx == Ordering::Worse);
                    if (xy == Ordering::Equal) CHECK(yx == Ordering::Equal);
                }
            // transitivity of weak preference over all triples
            auto weakly = [&](const Coalition& x, const Coalition& y) {
                return compare(game, i, x, y) != Ordering::Worse;
            };
            for (const auto& x : mine)
                for (const auto& y : mine)
                    for (const auto& z : mine) {
                        if (weakly(x, y) && weakly(y, z)) CHECK(weakly(x, z));
                    }
        }
    }
}

TEST_CASE("explicit preferences respect tiers and the implicit bottom") {
    // two tiers over the 3-path for player c: {l,c} alone, then {c,r};
    // {c} and {l,c,r} are unlisted and land in the implicit bottom
    Graph g({"l", "c", "r"}, {{0, 1}, {1, 2}});
    ExplicitPreferences prefs(3);
    prefs.add_tier(C, {Coalition{L, C}});
    prefs.add_tier(C, {Coalition{C, R}});
    const GameInstance game(std::move(g), std::move(prefs));
    CHECK(compare(game, C, {L, C}, {C, R}) == Ordering::Better);
    CHECK(compare(game, C, {C, R}, {C}) == Ordering::Better);
    CHECK(compare(game, C, {C}, {L, C, R}) == Ordering::Equal);
}

TEST_CASE("tier validation") {
    ExplicitPreferences prefs(2);
    CHECK_THROWS_AS(prefs.add_tier(0, {Coalition{1}}), BadParameter);
    prefs.add_tier(0, {Coalition{0, 1}});
    CHECK_THROWS_AS(prefs.add_tier(0, {Coalition{0, 1}}), BadParameter);
    Graph disconnected({"a", "b"}, {});
    ExplicitPreferences bad(2);
    bad.add_tier(0, {Coalition{0, 1}});
    CHECK_THROWS_AS(GameInstance(std::move(disconnected), std::move(bad)), BadParameter);
}

TEST_CASE("enemy-oriented predicate is exact") {
    UtilityMatrix good(3, true);
    good.set(0, 1, 1);
    good.set(0, 2, -3);
    good.set(1, 2, 1);
    CHECK(good.enemy_oriented());
    UtilityMatrix off(3, true);
    off.set(0, 1, 1);
    off.set(0, 2, -2);  // -|N| would be -3
    off.set(1, 2, 1);
    CHECK_FALSE(off.enemy_oriented());
    UtilityMatrix zero(2, true);
    CHECK_FALSE(zero.enemy_oriented());  // implicit zeros are not in {1, -n}
}

TEST_CASE("utility matrix construction rules") {
    UtilityMatrix u(2, false);
    CHECK_THROWS_AS(u.set(0, 0, Rational(1)), BadParameter);
    u.set(0, 1, Rational(1, 3));
    CHECK(u.at(0, 1) == Rational(1, 3));
    CHECK(u.at(1, 0) == Rational(0));
    UtilityMatrix sym(2, true);
    sym.set(0, 1, Rational(5));
    CHECK(sym.at(1, 0) == Rational(5));
}

TEST_CASE("refinement orders a tie in favor of the superset") {
    // c is indifferent between {c,r} and {c} in the fixture; after refinement
    // the larger coalition must win
    const GameInstance refined = refine(fixture("parliament3"));
    CHECK(compare(refined, C, {C, R}, {C}) == Ordering::Better);
    CHECK(compare(refined, C, {L, C, R}, {L, C}) == Ordering::Better);
    // former strict preferences survive
    CHECK(compare(refined, C, {L, C}, {C, R}) == Ordering::Better);
    CHECK(compare(refined, L, {L, C}, {L}) == Ordering::Better);
}

TEST_CASE("refinement breaks equal-size ties lexicographically") {
    Graph g({"a", "b", "c"}, {{0, 1}, {0, 2}});
    ExplicitPreferences prefs(3);
    prefs.add_tier(0, {Coalition{0, 1}, Coalition{0, 2}});
    const GameInstance refined = refine(GameInstance(std::move(g), std::move(prefs)));
    CHECK(compare(refined, 0, {0, 1}, {0, 2}) == Ordering::Better);
}

TEST_CASE("refining an already strict order changes nothing") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const GameInstance game =
            random_instance(GraphKind::Path, n, PreferenceKind::Additive, rng());
        const GameInstance refined = refine(game);
        for (int i = 0; i < n; ++i) {
            const auto mine = feasible_for(game, i);
            for (const auto& x : mine)
                for (const auto& y : mine) {
                    const Ordering before = compare(game, i, x, y);
                    const Ordering after = compare(refined, i, x, y);
                    if (before != Ordering::Equal) CHECK(before == after);
                }
        }
    }
}

TEST_CASE("refinement is a strict total order refining the original") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto kind = trial % 2 == 0 ? PreferenceKind::Additive : PreferenceKind::Explicit;
        const GameInstance game = random_instance(GraphKind::Tree, n, kind, rng());
        const GameInstance refined = refine(game);
        for (int i = 0; i < n; ++i) {
            const auto mine = feasible_for(game, i);
            for (const auto& x : mine)
                for (const auto& y : mine) {
                    if (x == y) continue;
                    // strict totality
                    CHECK(compare(refined, i, x, y) != Ordering::Equal);
                    // refinement preserves strict preference
                    if (compare(game, i, x, y) == Ordering::Better)
                        CHECK(compare(refined, i, x, y) == Ordering::Better);
                }
            // superset rule within former ties
            for (const auto& x : mine)
                for (const auto& y : mine) {
                    if (x == y || x.size() <= y.size()) continue;
                    bool subset = true;
                    for (int p : y.members())
                        if (!x.contains(p)) subset = false;
                    if (subset && compare(game, i, x, y) == Ordering::Equal)
                        CHECK(compare(refined, i, x, y) == Ordering::Better);
                }
        }
    }
}
