// Acceptance suite: runs every toolkit-level criterion end to end and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hedonic/dynamics.hpp"
#include "hedonic/exhaustive.hpp"
#include "hedonic/instances.hpp"
#include "hedonic/tree_solvers.hpp"

using namespace hedonic;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& title, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty()) {
        std::printf("PASS  %2d  %s (%.1fs)\n", number, title.c_str(), seconds);
    } else {
        ++failures;
        std::printf("FAIL  %2d  %s (%.1fs): %s\n", number, title.c_str(), seconds,
                    problem.c_str());
    }
    std::fflush(stdout);
}

GameInstance random_forest_game(std::uint64_t seed, int max_n) {
    std::mt19937_64 rng(seed);
    const int n = 1 + static_cast<int>(rng() % max_n);
    const GraphKind kinds[] = {GraphKind::Tree, GraphKind::Path, GraphKind::Star};
    const GraphKind kind = kinds[rng() % 3];
    const auto pref = seed % 2 == 0 ? PreferenceKind::Additive : PreferenceKind::Explicit;
    return random_instance(kind, n, pref, rng());
}

bool stable_under(const GameInstance& game, const Partition& pi, Concept c) {
    return !verify(game, pi, c).has_value();
}

bool exhaustive_exists(const GameInstance& game, Concept c) {
    for (const Partition& pi : enumerate_feasible_partitions(game.graph()))
        if (stable_under(game, pi, c)) return true;
    return false;
}

// All labeled simple graphs on 1..5 vertices, plus `extra` random 6-vertex ones.
std::vector<Graph> criterion7_bases(int extra) {
    std::vector<Graph> out;
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
        for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1) edges.push_back(pairs[e]);
            out.push_back(Graph(names, edges));
        }
    }
    std::vector<std::string> names6;
    for (int i = 0; i < 6; ++i) names6.push_back("v" + std::to_string(i));
    for (int trial = 0; trial < extra; ++trial) {
        std::mt19937_64 rng(454500 + trial);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (rng() % 2 == 0) edges.emplace_back(i, j);
        out.push_back(Graph(names6, edges));
    }
    return out;
}

std::set<std::vector<int>> all_max_cliques(const Graph& g) {
    const int n = g.player_count();
    std::set<std::vector<int>> best;
    std::size_t best_size = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(i);
        bool clique = true;
        for (std::size_t a = 0; a < members.size() && clique; ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (!g.has_edge(members[a], members[b])) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        if (members.size() > best_size) {
            best_size = members.size();
            best.clear();
        }
        if (members.size() == best_size) best.insert(members);
    }
    return best;
}

struct OracleSample {
    std::uint64_t n = 0;
    std::uint64_t subsets = 0;
    std::uint64_t calls = 0;
};
std::vector<OracleSample> is_samples;
std::vector<OracleSample> dp_samples;

std::string criterion1() {
    const GameInstance game = fixture("parliament3");
    const Partition pi1({Coalition{0, 1}, Coalition{2}}, 3);

    const Partition solved = solve_core_is(game);
    if (!stable_under(game, solved, Concept::CR)) return "cr-is output is not core stable";
    if (!stable_under(game, solved, Concept::IS)) return "cr-is output is not individually stable";

    bool pi1_cr_is = false;
    for (const Partition& pi : enumerate_feasible_partitions(game.graph())) {
        if (pi == pi1 && stable_under(game, pi, Concept::CR) && stable_under(game, pi, Concept::IS))
            pi1_cr_is = true;
        if (stable_under(game, pi, Concept::NS)) return "a Nash stable partition surfaced";
        if (stable_under(game, pi, Concept::INS)) return "an in-neighbor stable partition surfaced";
    }
    if (!pi1_cr_is) return "{{l,c},{r}} failed the exhaustive CR+IS check";

    const auto constructed = solve_dp(game, Concept::IR_INS);
    if (!constructed || !(*constructed == pi1)) return "IR-INS solve did not return {{l,c},{r}}";
    return "";
}

std::string criterion2() {
    const GameInstance game = fixture("parliament5");
    if (solve_dp(game, Concept::IR_INS)) return "DP claims an IR-INS partition exists";
    if (exhaustive_exists(game, Concept::IR_INS)) return "exhaustive search found an IR-INS partition";
    return "";
}

std::string criterion3() {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const GameInstance game = random_forest_game(seed, 8);
        game.reset_oracle_count();
        const Partition pi = solve_is(game);
        is_samples.push_back({static_cast<std::uint64_t>(game.player_count()), 0,
                              game.oracle_count()});
        if (!stable_under(game, pi, Concept::IS))
            return "seed " + std::to_string(seed) + ": solver output is not IS stable";
        if (!exhaustive_exists(game, Concept::IS))
            return "seed " + std::to_string(seed) + ": no IS partition exists on a forest";
    }
    return "";
}

std::string criterion4() {
    for (int k = 3; k <= 6; ++k) {
        if (exhaustive_exists(cycle_no_is(k), Concept::IS))
            return "k=" + std::to_string(k) + ": an IS partition exists on the engineered cycle";
    }
    return "";
}

std::string criterion5() {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const GameInstance game = random_forest_game(seed * 7 + 3, 8);
        if (!stable_under(game, solve_core(game), Concept::CR))
            return "seed " + std::to_string(seed) + ": core output admits a strong block";
        const Partition both = solve_core_is(game);
        if (!stable_under(game, both, Concept::CR))
            return "seed " + std::to_string(seed) + ": cr-is output admits a strong block";
        if (!stable_under(game, both, Concept::IS))
            return "seed " + std::to_string(seed) + ": cr-is output admits an IS deviation";
    }
    return "";
}

std::string criterion6() {
    const Concept concepts[] = {Concept::NS, Concept::INS, Concept::IR_INS};
    for (Concept alpha : concepts) {
        for (std::uint64_t seed = 1; seed <= 300; ++seed) {
            const GameInstance game = random_forest_game(seed * 13 + 1, 7);
            game.reset_oracle_count();
            const auto constructed = solve_dp(game, alpha);
            dp_samples.push_back(
                {static_cast<std::uint64_t>(game.player_count()),
                 static_cast<std::uint64_t>(connected_subsets(game.graph()).size()),
                 game.oracle_count()});
            const bool brute = exhaustive_exists(game, alpha);
            if (constructed.has_value() != brute)
                return to_string(alpha) + " seed " + std::to_string(seed) +
                       ": DP existence disagrees with brute force";
            if (constructed && !stable_under(game, *constructed, alpha))
                return to_string(alpha) + " seed " + std::to_string(seed) +
                       ": constructed partition fails its verifier";
        }
    }
    return "";
}

std::string criterion7() {
    const std::vector<Graph> bases = criterion7_bases(100);
    for (std::size_t index = 0; index < bases.size(); ++index) {
        const Graph& base = bases[index];
        const std::string tag = "base graph #" + std::to_string(index);
        const auto cliques = all_max_cliques(base);
        const auto clique_info = max_clique_bruteforce(base);
        const int omega = clique_info.size;

        // (a) core blocks of the enemy-star game are exactly the maximum cliques
        {
            const GameInstance game = reduce_clique_enemy_star(base);
            std::set<std::vector<int>> core_blocks;
            bool found_core = false;
            for (const Partition& pi : enumerate_feasible_partitions(game.graph())) {
                if (!stable_under(game, pi, Concept::CR)) continue;
                found_core = true;
                std::vector<int> block;
                for (int p : pi.block_of(0).members())
                    if (p != 0) block.push_back(p - 1);
                core_blocks.insert(block);
            }
            if (!found_core) return tag + ": enemy-star game has an empty core";
            if (core_blocks != cliques) return tag + ": core blocks are not the maximum cliques";
            const Partition solved = solve_core(game);
            std::vector<int> solver_block;
            for (int p : solved.block_of(0).members())
                if (p != 0) solver_block.push_back(p - 1);
            if (!cliques.count(solver_block))
                return tag + ": core solver block is not a maximum clique";

            // (b) strict core exists iff the maximum clique is unique
            bool scr = false;
            for (const Partition& pi : enumerate_feasible_partitions(game.graph()))
                if (stable_under(game, pi, Concept::SCR)) {
                    scr = true;
                    break;
                }
            if (scr != clique_info.unique)
                return tag + ": SCR existence does not track clique uniqueness";
        }

        // (c) thresholded reductions
        for (int t : {2, 3, 4}) {
            const bool expect = omega >= t;
            {
                const GameInstance game = reduce_clique_scr_star(base, t);
                bool scr = false;
                for (const Partition& pi : enumerate_feasible_partitions(game.graph()))
                    if (stable_under(game, pi, Concept::SCR)) {
                        scr = true;
                        break;
                    }
                if (scr != expect)
                    return tag + " t=" + std::to_string(t) + ": SCR-star existence mismatch";
            }
            {
                const GameInstance game = reduce_clique_ins_star(base, t);
                const bool ins = solve_dp(game, Concept::INS).has_value();
                const bool ns = solve_dp(game, Concept::NS).has_value();
                if (ins != expect)
                    return tag + " t=" + std::to_string(t) + ": INS-star existence mismatch";
                if (ns != expect)
                    return tag + " t=" + std::to_string(t) + ": NS-star existence mismatch";
                if (base.player_count() <= 4) {
                    if (exhaustive_exists(game, Concept::INS) != ins)
                        return tag + ": INS DP vs brute force mismatch";
                    if (exhaustive_exists(game, Concept::NS) != ns)
                        return tag + ": NS DP vs brute force mismatch";
                }
            }
            {
                const GameInstance game = reduce_clique_irins_tree(base, t);
                const bool ir_ins = solve_dp(game, Concept::IR_INS).has_value();
                if (ir_ins != expect)
                    return tag + " t=" + std::to_string(t) + ": IR-INS-tree existence mismatch";
                if (base.player_count() <= 4 && exhaustive_exists(game, Concept::IR_INS) != ir_ins)
                    return tag + ": IR-INS DP vs brute force mismatch";
            }
        }

        // (d) max-cut star: INS partitions map exactly onto local max cuts
        std::mt19937_64 wrng(987000 + index);
        for (int variant = 0; variant < 2; ++variant) {
            WeightedGraph wg(base.players());
            for (auto [a, b] : base.edges())
                wg.set_weight(a, b, variant == 0 ? 1 : static_cast<long long>(wrng() % 4));
            const GameInstance game = reduce_maxcut_star(wg);
            const auto cuts = local_maxcut_bruteforce(wg);
            const std::set<std::vector<int>> cut_set(cuts.begin(), cuts.end());
            std::set<std::vector<int>> images;
            for (const Partition& pi : enumerate_feasible_partitions(game.graph())) {
                if (!stable_under(game, pi, Concept::INS)) continue;
                std::vector<int> side;
                for (int p : pi.block_of(0).members())
                    if (p != 0) side.push_back(p - 1);
                images.insert(canonical_cut_side(wg, side));
            }
            if (images != cut_set)
                return tag + ": INS partitions do not map onto the local max cuts";
        }
    }
    return "";
}

std::string criterion8() {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        std::mt19937_64 rng(seed * 3 + 11);
        const int n = 1 + static_cast<int>(rng() % 9);
        const auto pref = seed % 2 == 0 ? PreferenceKind::Additive : PreferenceKind::Explicit;
        const GameInstance game = random_instance(GraphKind::Star, n, pref, rng());
        game.reset_oracle_count();
        const Partition pi = star_greedy_ir_ins(game);
        const std::uint64_t budget =
            10ull * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) *
            static_cast<std::uint64_t>(n);
        if (game.oracle_count() > budget)
            return "seed " + std::to_string(seed) + ": greedy burned " +
                   std::to_string(game.oracle_count()) + " > 10n^3 oracle calls";
        if (!stable_under(game, pi, Concept::IR_INS))
            return "seed " + std::to_string(seed) + ": greedy output is not IR-INS stable";
    }
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        std::mt19937_64 rng(seed * 5 + 17);
        const int n = 1 + static_cast<int>(rng() % 10);
        const GameInstance game = random_instance(GraphKind::Star, n, PreferenceKind::Enemy, rng());
        if (!stable_under(game, star_greedy_enemy_ns(game), Concept::NS))
            return "seed " + std::to_string(seed) + ": enemy greedy output is not NS stable";
    }
    return "";
}

std::string criterion9() {
    std::string problems;
    int failed = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::mt19937_64 rng(seed * 11 + 29);
        const int n = 2 + static_cast<int>(rng() % 19);
        const GameInstance game =
            random_instance(GraphKind::Star, n, PreferenceKind::SymmetricAdditive, rng());
        DynamicsOptions options;
        // convergent runs in this family settle within a few dozen steps;
        // the cap only bounds the provably cycling ones
        options.max_steps = 3000;
        const auto trace = run_dynamics(game, DynamicsRule::NS, options);
        std::string why;
        if (trace.outcome != DynamicsOutcome::Converged) {
            why = "no convergence";
        } else if (!stable_under(game, trace.terminal, Concept::NS)) {
            why = "terminal not NS stable";
        } else {
            for (const auto& step : trace.steps) {
                if (!(*step.potential_after > *step.potential_before)) {
                    why = "potential did not increase at every step";
                    break;
                }
            }
        }
        if (!why.empty()) {
            ++failed;
            if (failed <= 3)
                problems += (problems.empty() ? "" : "; ") + std::string("seed ") +
                            std::to_string(seed) + " n=" + std::to_string(n) + ": " + why;
        }
    }
    if (failed > 0)
        return std::to_string(failed) + "/200 games violate the claim (" + problems + ")";
    return "";
}

std::string criterion10() {
    if (is_samples.empty() || dp_samples.empty()) return "no oracle samples were collected";
    for (const auto& s : is_samples) {
        if (s.calls > 10 * s.n * s.n * s.n * s.n)
            return "an IS solve used " + std::to_string(s.calls) + " calls on n=" +
                   std::to_string(s.n);
    }
    for (const auto& s : dp_samples) {
        if (s.calls > 10 * s.n * s.n * s.subsets * s.subsets)
            return "a DP solve used " + std::to_string(s.calls) + " calls on n=" +
                   std::to_string(s.n) + ", |F|=" + std::to_string(s.subsets);
    }
    for (int n = 1; n <= 12; ++n) {
        std::vector<std::string> names;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        if (connected_subsets(Graph(names, edges)).size() !=
            static_cast<std::size_t>(n * (n + 1) / 2))
            return "path subset count is not n(n+1)/2 at n=" + std::to_string(n);
    }
    return "";
}

}  // namespace

int main() {
    run_criterion(1, "three-party fixture: cr-is solve, exhaustive CR/IS/NS/INS, IR-INS construction",
                  criterion1);
    run_criterion(2, "five-party fixture: IR-INS nonexistence, DP and brute force agree", criterion2);
    run_criterion(3, "IS solver sound on 500 random forests; IS always exists on forests",
                  criterion3);
    run_criterion(4, "engineered cycles k=3..6 have no IS partition", criterion4);
    run_criterion(5, "core and core+IS solvers sound on 300 random forests", criterion5);
    run_criterion(6, "stability DP matches brute-force existence for ns/ins/ir-ins", criterion6);
    run_criterion(7, "clique and max-cut reductions check out on all small base graphs", criterion7);
    run_criterion(8, "star greedies stable on 500 random (enemy) stars within 10n^3 calls",
                  criterion8);
    run_criterion(9, "NS dynamics on 200 random symmetric stars: convergence with rising potential",
                  criterion9);
    run_criterion(10, "oracle budgets: 10n^4 for IS, 10n^2|F|^2 for the DP, path |F|=n(n+1)/2",
                  criterion10);
    if (failures == 0) std::printf("all criteria passed\n");
    return failures;
}
