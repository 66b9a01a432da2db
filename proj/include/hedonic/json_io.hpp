#pragma once

#include <string>

#include <json.hpp>

#include "hedonic/game.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/stability.hpp"
#include "hedonic/weighted_graph.hpp"

namespace hedonic {

// JSON file formats. A game document is
//   { "players": ["l","c","r"],
//     "edges":   [["l","c"],["c","r"]],
//     "preferences": {
//        "type": "additive", "symmetric": false,
//        "utilities": { "l": {"c": "1", "r": "-2"}, ... } } }
// with rationals as "p/q" or integer strings (plain JSON integers are also
// accepted); missing utility entries are zero. Explicit preferences use
//   "preferences": { "type": "explicit",
//                    "rankings": { "l": [ [["c","l"]], [["l"]] ], ... } }
// where the outer arrays are indifference tiers, best first. A partition
// document is { "partition": [["c","l"],["r"]] }. A bare graph document is a
// game document without the preferences member; a weighted graph is
//   { "nodes": ["u","v"], "weights": [["u","v",3], ...] }.

nlohmann::json game_to_json(const GameInstance& game);
GameInstance game_from_json(const nlohmann::json& doc);

nlohmann::json graph_to_json(const Graph& graph);
Graph graph_from_json(const nlohmann::json& doc);

nlohmann::json weighted_graph_to_json(const WeightedGraph& graph);
WeightedGraph weighted_graph_from_json(const nlohmann::json& doc);

nlohmann::json partition_to_json(const Partition& pi, const Graph& graph);
Partition partition_from_json(const nlohmann::json& doc, const Graph& graph);

nlohmann::json witness_to_json(const Witness& witness, const Graph& graph);

GameInstance load_game_file(const std::string& path);
Graph load_graph_file(const std::string& path);
WeightedGraph load_weighted_graph_file(const std::string& path);
Partition load_partition_file(const std::string& path, const Graph& graph);

}  // namespace hedonic
