// hgt — hedonic graph-game toolkit command line.
//
// Subcommands: solve, verify, enumerate, generate, dynamics. Game, graph and
// partition files are JSON (see include/hedonic/json_io.hpp for the schema).
// Exit codes: 0 success (including a proved NONE), 1 instability verdict from
// verify, 2 usage or format error, 3 enumeration budget exceeded, 4 violated
// solver precondition (e.g. a cyclic graph handed to a forest solver).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hedonic/dynamics.hpp"
#include "hedonic/exhaustive.hpp"
#include "hedonic/instances.hpp"
#include "hedonic/json_io.hpp"
#include "hedonic/tree_solvers.hpp"

namespace {

using hedonic::Concept;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUnstable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPrecondition = 4;

std::string block_text(const hedonic::Coalition& block, const hedonic::Graph& graph) {
    std::string out = "{";
    for (std::size_t k = 0; k < block.members().size(); ++k) {
        if (k) out += ",";
        out += graph.player_name(block.members()[k]);
    }
    return out + "}";
}

std::string partition_text(const hedonic::Partition& pi, const hedonic::Graph& graph) {
    std::string out;
    for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
        if (b) out += " ";
        out += block_text(pi.blocks()[b], graph);
    }
    return out;
}

struct SolveArgs {
    std::string concept_name;
    std::string game_path;
    std::optional<std::string> root_name;
    std::string format = "human";
    std::size_t max_subsets = hedonic::kDefaultSubsetCap;
    std::size_t max_partitions = 1'000'000;
    int threads = 1;  // accepted for compatibility; output is identical for any value
};

int run_solve(const SolveArgs& args) {
    const hedonic::GameInstance game = hedonic::load_game_file(args.game_path);
    std::optional<int> root;
    if (args.root_name) {
        root = game.graph().index_of(*args.root_name);
        if (!root) throw hedonic::BadParameter("unknown root player: " + *args.root_name);
    }

    std::optional<hedonic::Partition> result;
    const bool forest = game.graph().is_forest();
    const auto star_center = game.graph().star_center();
    if (args.concept_name == "is") {
        if (!forest) throw hedonic::NotAForest("individual stability needs an acyclic graph");
        result = hedonic::solve_is(game, root);
    } else if (args.concept_name == "cr") {
        if (!forest) throw hedonic::NotAForest("the core solver needs an acyclic graph");
        result = hedonic::solve_core(game, root, nullptr, args.max_subsets);
    } else if (args.concept_name == "cr-is") {
        if (!forest) throw hedonic::NotAForest("the core solver needs an acyclic graph");
        result = hedonic::solve_core_is(game, root, args.max_subsets);
    } else if (args.concept_name == "ns" || args.concept_name == "ins" ||
               args.concept_name == "ir-ins") {
        const Concept concept_tag = *hedonic::concept_from_string(args.concept_name);
        if (concept_tag == Concept::IR_INS && star_center) {
            result = hedonic::star_greedy_ir_ins(game);
        } else if (concept_tag == Concept::NS && star_center && game.additive() &&
                   game.utilities().symmetric() && game.utilities().enemy_oriented()) {
            result = hedonic::star_greedy_enemy_ns(game);
        } else {
            if (!forest)
                throw hedonic::NotAForest("the stability DP needs an acyclic graph");
            result = hedonic::solve_dp(game, concept_tag, root, nullptr, args.max_subsets);
        }
    } else if (args.concept_name == "scr") {
        std::cerr << "warning: no constructive strict-core solver is known; "
                     "falling back to exhaustive search under the enumeration budget\n";
        hedonic::EnumerationBudget budget{args.max_partitions, args.max_subsets};
        const auto stable = hedonic::find_stable_exhaustive(game, Concept::SCR, budget);
        if (!stable.empty()) result = stable.front();
    } else {
        throw hedonic::BadParameter("unknown concept: " + args.concept_name);
    }

    if (args.format == "machine") {
        json doc;
        if (result) {
            doc = hedonic::partition_to_json(*result, game.graph());
            doc["result"] = "partition";
        } else {
            doc["result"] = "none";
        }
        std::cout << doc.dump(2) << "\n";
    } else if (result) {
        std::cout << "PARTITION\n" << partition_text(*result, game.graph()) << "\n";
    } else {
        std::cout << "NONE\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string concept_name;
    std::string game_path;
    std::string partition_path;
    std::string format = "human";
    std::size_t max_subsets = hedonic::kDefaultSubsetCap;
};

int run_verify(const VerifyArgs& args) {
    const auto concept_tag = hedonic::concept_from_string(args.concept_name);
    if (!concept_tag) throw hedonic::BadParameter("unknown concept: " + args.concept_name);
    const hedonic::GameInstance game = hedonic::load_game_file(args.game_path);
    const hedonic::Partition pi = hedonic::load_partition_file(args.partition_path, game.graph());
    const auto witness = hedonic::verify(game, pi, *concept_tag, args.max_subsets);
    if (args.format == "machine") {
        json doc;
        doc["result"] = witness ? "witness" : "stable";
        if (witness) {
            doc["witness"] = hedonic::witness_to_json(*witness, game.graph());
            doc["description"] = hedonic::describe(*witness, game.graph());
        }
        std::cout << doc.dump(2) << "\n";
    } else if (witness) {
        std::cout << "WITNESS\n" << hedonic::describe(*witness, game.graph()) << "\n";
    } else {
        std::cout << "STABLE\n";
    }
    return witness ? kExitUnstable : kExitOk;
}

struct EnumerateArgs {
    std::string what;
    std::string game_path;
    std::string format = "human";
    std::size_t max_subsets = hedonic::kDefaultSubsetCap;
    std::size_t max_partitions = 1'000'000;
};

int run_enumerate(const EnumerateArgs& args) {
    const hedonic::GameInstance game = hedonic::load_game_file(args.game_path);
    json items = json::array();
    if (args.what == "connected-subsets") {
        for (const auto& x :
             hedonic::connected_subsets(game.graph(), std::nullopt, std::nullopt, args.max_subsets)) {
            json names = json::array();
            for (int p : x.members()) names.push_back(game.graph().player_name(p));
            items.push_back(std::move(names));
        }
    } else if (args.what == "feasible-partitions") {
        hedonic::EnumerationBudget budget{args.max_partitions, args.max_subsets};
        for (const auto& pi : hedonic::enumerate_feasible_partitions(game.graph(), budget))
            items.push_back(hedonic::partition_to_json(pi, game.graph())["partition"]);
    } else {
        throw hedonic::BadParameter("--what must be connected-subsets or feasible-partitions");
    }
    if (args.format == "machine") {
        std::cout << json{{"result", "enumeration"},
                          {"what", args.what},
                          {"count", items.size()},
                          {"items", items}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "COUNT " << items.size() << "\n";
        for (const auto& item : items) std::cout << item.dump() << "\n";
    }
    return kExitOk;
}

struct GenerateArgs {
    std::string family;
    int k = 3;
    int t = 2;
    int s = 1;
    int n = 5;
    std::string kind = "tree";
    std::string pref = "additive";
    std::uint64_t seed = 1;
    std::optional<std::string> base_path;
    std::optional<std::string> output_path;
};

int run_generate(const GenerateArgs& args) {
    auto need_base = [&]() -> hedonic::Graph {
        if (!args.base_path)
            throw hedonic::BadParameter("--base GRAPH.json is required for this family");
        return hedonic::load_graph_file(*args.base_path);
    };

    json doc;
    std::string family = args.family;
    for (auto& ch : family)
        if (ch == '_') ch = '-';
    if (family == "parliament3" || family == "parliament5" ||
        family == "parliament3-enemy-variant") {
        std::string fixture_name = family;
        for (auto& ch : fixture_name)
            if (ch == '-') ch = '_';
        doc = hedonic::game_to_json(hedonic::fixture(fixture_name));
    } else if (family == "cycle-no-is") {
        doc = hedonic::game_to_json(hedonic::cycle_no_is(args.k));
    } else if (family == "clique-enemy-star") {
        doc = hedonic::game_to_json(hedonic::reduce_clique_enemy_star(need_base()));
    } else if (family == "clique-scr-star") {
        doc = hedonic::game_to_json(hedonic::reduce_clique_scr_star(need_base(), args.t));
    } else if (family == "clique-ins-star") {
        doc = hedonic::game_to_json(hedonic::reduce_clique_ins_star(need_base(), args.t));
    } else if (family == "clique-irins-tree") {
        doc = hedonic::game_to_json(hedonic::reduce_clique_irins_tree(need_base(), args.t));
    } else if (family == "maxcut-star") {
        if (!args.base_path)
            throw hedonic::BadParameter("--base WEIGHTED_GRAPH.json is required for maxcut-star");
        doc = hedonic::game_to_json(
            hedonic::reduce_maxcut_star(hedonic::load_weighted_graph_file(*args.base_path)));
    } else if (family == "unique-clique") {
        doc = hedonic::graph_to_json(hedonic::unique_clique_family(need_base(), args.s));
    } else if (family == "random") {
        hedonic::GraphKind kind;
        if (args.kind == "tree") kind = hedonic::GraphKind::Tree;
        else if (args.kind == "path") kind = hedonic::GraphKind::Path;
        else if (args.kind == "star") kind = hedonic::GraphKind::Star;
        else if (args.kind == "cycle") kind = hedonic::GraphKind::Cycle;
        else throw hedonic::BadParameter("unknown --kind: " + args.kind);
        hedonic::PreferenceKind pref;
        if (args.pref == "additive") pref = hedonic::PreferenceKind::Additive;
        else if (args.pref == "symmetric-additive") pref = hedonic::PreferenceKind::SymmetricAdditive;
        else if (args.pref == "enemy") pref = hedonic::PreferenceKind::Enemy;
        else if (args.pref == "explicit") pref = hedonic::PreferenceKind::Explicit;
        else throw hedonic::BadParameter("unknown --pref: " + args.pref);
        doc = hedonic::game_to_json(hedonic::random_instance(kind, args.n, pref, args.seed));
    } else {
        throw hedonic::BadParameter("unknown family: " + args.family);
    }

    if (args.output_path) {
        std::ofstream out(*args.output_path);
        if (!out) throw hedonic::BadParameter("cannot write " + *args.output_path);
        out << doc.dump(2) << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    return kExitOk;
}

struct DynamicsArgs {
    std::string game_path;
    std::string rule = "ns";
    std::optional<std::string> start_path;
    std::size_t max_steps = 1000;
    std::optional<std::uint64_t> seed;
    std::string format = "human";
};

int run_dynamics_cmd(const DynamicsArgs& args) {
    const hedonic::GameInstance game = hedonic::load_game_file(args.game_path);
    hedonic::DynamicsRule rule;
    if (args.rule == "ns") rule = hedonic::DynamicsRule::NS;
    else if (args.rule == "ins") rule = hedonic::DynamicsRule::INS;
    else throw hedonic::BadParameter("--rule must be ns or ins");

    hedonic::Partition start = args.start_path
                                   ? hedonic::load_partition_file(*args.start_path, game.graph())
                                   : hedonic::Partition::singletons(game.player_count());
    hedonic::DynamicsOptions options;
    options.max_steps = args.max_steps;
    options.random_seed = args.seed;
    const auto trace = hedonic::run_dynamics(game, start, rule, options);
    const bool converged = trace.outcome == hedonic::DynamicsOutcome::Converged;

    if (args.format == "machine") {
        auto names_of = [&](const hedonic::Coalition& x) {
            json out = json::array();
            for (int p : x.members()) out.push_back(game.graph().player_name(p));
            return out;
        };
        json steps = json::array();
        for (const auto& step : trace.steps) {
            json entry{{"player", game.graph().player_name(step.player)}};
            entry["source"] = names_of(step.source);
            entry["target"] = step.target ? names_of(*step.target) : json();
            if (step.potential_before) entry["potential_before"] = step.potential_before->str();
            if (step.potential_after) entry["potential_after"] = step.potential_after->str();
            steps.push_back(std::move(entry));
        }
        json doc{{"result", converged ? "converged" : "step-limit"},
                 {"steps", trace.steps.size()}};
        doc["trace"] = std::move(steps);
        doc["terminal"] = hedonic::partition_to_json(trace.terminal, game.graph())["partition"];
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << (converged ? "CONVERGED\n" : "STEP-LIMIT\n");
        std::cout << "steps " << trace.steps.size() << "\n"
                  << partition_text(trace.terminal, game.graph()) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hedonic graph-game toolkit"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "compute a stable partition");
    solve->add_option("--concept", solve_args.concept_name,
                      "one of is, cr, cr-is, ns, ins, ir-ins, scr")
        ->required();
    solve->add_option("game", solve_args.game_path, "game JSON file")->required();
    solve->add_option("--root", solve_args.root_name, "root player for the tree solvers");
    solve->add_option("--format", solve_args.format)->check(CLI::IsMember({"human", "machine"}));
    solve->add_option("--max-subsets", solve_args.max_subsets);
    solve->add_option("--max-partitions", solve_args.max_partitions);
    solve->add_option("--threads", solve_args.threads)->check(CLI::PositiveNumber);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a partition against a stability concept");
    verify->add_option("--concept", verify_args.concept_name,
                       "one of ir, is, ns, ins, ir-ins, cr, scr")
        ->required();
    verify->add_option("game", verify_args.game_path)->required();
    verify->add_option("partition", verify_args.partition_path)->required();
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"human", "machine"}));
    verify->add_option("--max-subsets", verify_args.max_subsets);

    EnumerateArgs enumerate_args;
    auto* enumerate = app.add_subcommand("enumerate", "list connected subsets or feasible partitions");
    enumerate->add_option("--what", enumerate_args.what)
        ->required()
        ->check(CLI::IsMember({"connected-subsets", "feasible-partitions"}));
    enumerate->add_option("game", enumerate_args.game_path)->required();
    enumerate->add_option("--format", enumerate_args.format)
        ->check(CLI::IsMember({"human", "machine"}));
    enumerate->add_option("--max-subsets", enumerate_args.max_subsets);
    enumerate->add_option("--max-partitions", enumerate_args.max_partitions);

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "emit one of the built-in game families");
    generate->add_option("--family", generate_args.family,
                         "parliament3 | parliament3-enemy-variant | parliament5 | cycle-no-is | "
                         "clique-enemy-star | clique-scr-star | clique-ins-star | "
                         "clique-irins-tree | maxcut-star | unique-clique | random")
        ->required();
    generate->add_option("--k", generate_args.k, "cycle length for cycle-no-is");
    generate->add_option("--t", generate_args.t, "clique threshold for the clique reductions");
    generate->add_option("--s", generate_args.s, "clique size for unique-clique");
    generate->add_option("--n", generate_args.n, "player count for random");
    generate->add_option("--kind", generate_args.kind, "random graph kind: tree|path|star|cycle");
    generate->add_option("--pref", generate_args.pref,
                         "random preferences: additive|symmetric-additive|enemy|explicit");
    generate->add_option("--seed", generate_args.seed);
    generate->add_option("--base", generate_args.base_path, "base (weighted) graph JSON file");
    generate->add_option("--output,-o", generate_args.output_path, "write to file instead of stdout");

    DynamicsArgs dynamics_args;
    auto* dynamics = app.add_subcommand("dynamics", "run better-response deviation dynamics");
    dynamics->add_option("game", dynamics_args.game_path)->required();
    dynamics->add_option("--rule", dynamics_args.rule)->check(CLI::IsMember({"ns", "ins"}));
    dynamics->add_option("--start", dynamics_args.start_path, "start partition JSON file");
    dynamics->add_option("--max-steps", dynamics_args.max_steps);
    dynamics->add_option("--seed", dynamics_args.seed,
                         "pick random deviations with this seed instead of deterministic-first");
    dynamics->add_option("--format", dynamics_args.format)
        ->check(CLI::IsMember({"human", "machine"}));

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return run_solve(solve_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (enumerate->parsed()) return run_enumerate(enumerate_args);
        if (generate->parsed()) return run_generate(generate_args);
        if (dynamics->parsed()) return run_dynamics_cmd(dynamics_args);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const hedonic::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const hedonic::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const hedonic::BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hedonic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
