#include "hedonic/json_io.hpp"

#include <fstream>

namespace hedonic {

namespace {

using nlohmann::json;

json coalition_to_json(const Coalition& x, const Graph& graph) {
    json out = json::array();
    for (int p : x.members()) out.push_back(graph.player_name(p));
    return out;
}

Coalition coalition_from_json(const json& doc, const Graph& graph) {
    if (!doc.is_array() || doc.empty()) throw ParseError("coalition must be a non-empty array");
    std::vector<int> members;
    for (const auto& name : doc) {
        if (!name.is_string()) throw ParseError("player names must be strings");
        const auto idx = graph.index_of(name.get<std::string>());
        if (!idx) throw ParseError("unknown player: " + name.get<std::string>());
        members.push_back(*idx);
    }
    return Coalition(std::move(members));
}

Rational rational_from_json(const json& value) {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long long>());
    throw ParseError("utilities must be rational strings or integers");
}

std::vector<std::pair<int, int>> edges_from_json(const json& doc, const std::vector<std::string>& players) {
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < players.size(); ++i)
            if (players[i] == name) return static_cast<int>(i);
        throw ParseError("edge endpoint is not a player: " + name);
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& edge : doc) {
        if (!edge.is_array() || edge.size() != 2) throw ParseError("edges must be 2-arrays");
        edges.emplace_back(index_of(edge.at(0).get<std::string>()),
                           index_of(edge.at(1).get<std::string>()));
    }
    return edges;
}

}  // namespace

json graph_to_json(const Graph& graph) {
    json doc;
    doc["players"] = graph.players();
    json edges = json::array();
    for (auto [a, b] : graph.edges())
        edges.push_back(json::array({graph.player_name(a), graph.player_name(b)}));
    doc["edges"] = std::move(edges);
    return doc;
}

Graph graph_from_json(const json& doc) {
    if (!doc.contains("players") || !doc["players"].is_array())
        throw ParseError("graph document needs a players array");
    std::vector<std::string> players;
    for (const auto& name : doc["players"]) {
        if (!name.is_string()) throw ParseError("player names must be strings");
        players.push_back(name.get<std::string>());
    }
    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges")) edges = edges_from_json(doc["edges"], players);
    return Graph(std::move(players), std::move(edges));
}

json game_to_json(const GameInstance& game) {
    json doc = graph_to_json(game.graph());
    json prefs;
    if (game.additive()) {
        const UtilityMatrix& u = game.utilities();
        prefs["type"] = "additive";
        prefs["symmetric"] = u.symmetric();
        json utilities = json::object();
        for (int i = 0; i < game.player_count(); ++i) {
            json row = json::object();
            for (int j = 0; j < game.player_count(); ++j) {
                if (i == j) continue;
                const Rational& v = u.at(i, j);
                if (!v.is_zero()) row[game.graph().player_name(j)] = v.str();
            }
            if (!row.empty()) utilities[game.graph().player_name(i)] = std::move(row);
        }
        prefs["utilities"] = std::move(utilities);
    } else {
        prefs["type"] = "explicit";
        json rankings = json::object();
        for (int i = 0; i < game.player_count(); ++i) {
            json tiers = json::array();
            for (const auto& tier : game.explicit_preferences().tiers(i)) {
                json tier_doc = json::array();
                for (const Coalition& x : tier) tier_doc.push_back(coalition_to_json(x, game.graph()));
                tiers.push_back(std::move(tier_doc));
            }
            rankings[game.graph().player_name(i)] = std::move(tiers);
        }
        prefs["rankings"] = std::move(rankings);
    }
    doc["preferences"] = std::move(prefs);
    return doc;
}

GameInstance game_from_json(const json& doc) {
    Graph graph = graph_from_json(doc);
    if (!doc.contains("preferences")) throw ParseError("game document needs preferences");
    const json& prefs = doc["preferences"];
    const std::string type = prefs.value("type", "");
    if (type == "additive") {
        UtilityMatrix u(graph.player_count(), prefs.value("symmetric", false));
        if (prefs.contains("utilities")) {
            for (const auto& [row_name, row] : prefs["utilities"].items()) {
                const auto i = graph.index_of(row_name);
                if (!i) throw ParseError("utilities mention unknown player: " + row_name);
                for (const auto& [col_name, value] : row.items()) {
                    const auto j = graph.index_of(col_name);
                    if (!j) throw ParseError("utilities mention unknown player: " + col_name);
                    if (*i == *j) throw ParseError("diagonal utilities are fixed to zero");
                    const Rational v = rational_from_json(value);
                    if (u.symmetric() && !(u.at(*i, *j).is_zero()) && !(u.at(*i, *j) == v))
                        throw ParseError("conflicting symmetric utilities for " + row_name + "," +
                                         col_name);
                    u.set(*i, *j, v);
                }
            }
        }
        return GameInstance(std::move(graph), std::move(u));
    }
    if (type == "explicit") {
        ExplicitPreferences p(graph.player_count());
        if (!prefs.contains("rankings") || !prefs["rankings"].is_object())
            throw ParseError("explicit preferences need a rankings object");
        for (const auto& [name, tiers] : prefs["rankings"].items()) {
            const auto i = graph.index_of(name);
            if (!i) throw ParseError("rankings mention unknown player: " + name);
            if (!tiers.is_array()) throw ParseError("rankings must be arrays of tiers");
            for (const auto& tier_doc : tiers) {
                if (!tier_doc.is_array()) throw ParseError("each tier must be an array");
                std::vector<Coalition> tier;
                for (const auto& coalition_doc : tier_doc)
                    tier.push_back(coalition_from_json(coalition_doc, graph));
                p.add_tier(*i, std::move(tier));
            }
        }
        try {
            return GameInstance(std::move(graph), std::move(p));
        } catch (const BadParameter& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("preferences.type must be \"additive\" or \"explicit\"");
}

json weighted_graph_to_json(const WeightedGraph& graph) {
    json doc;
    doc["nodes"] = graph.nodes();
    json weights = json::array();
    for (const auto& [edge, w] : graph.weights()) {
        weights.push_back(json::array(
            {graph.nodes()[edge.first], graph.nodes()[edge.second], w}));
    }
    doc["weights"] = std::move(weights);
    return doc;
}

WeightedGraph weighted_graph_from_json(const json& doc) {
    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        throw ParseError("weighted graph needs a nodes array");
    std::vector<std::string> nodes;
    for (const auto& name : doc["nodes"]) nodes.push_back(name.get<std::string>());
    WeightedGraph graph(nodes);
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == name) return static_cast<int>(i);
        throw ParseError("weight endpoint is not a node: " + name);
    };
    if (doc.contains("weights")) {
        for (const auto& entry : doc["weights"]) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("weights must be [u, v, w] triples");
            if (!entry.at(2).is_number_integer())
                throw ParseError("cut weights must be integers");
            graph.set_weight(index_of(entry.at(0).get<std::string>()),
                             index_of(entry.at(1).get<std::string>()),
                             entry.at(2).get<long long>());
        }
    }
    return graph;
}

json partition_to_json(const Partition& pi, const Graph& graph) {
    json blocks = json::array();
    for (const Coalition& block : pi.blocks()) blocks.push_back(coalition_to_json(block, graph));
    return json{{"partition", std::move(blocks)}};
}

Partition partition_from_json(const json& doc, const Graph& graph) {
    if (!doc.contains("partition") || !doc["partition"].is_array())
        throw ParseError("partition document needs a partition array");
    std::vector<Coalition> blocks;
    for (const auto& block : doc["partition"]) blocks.push_back(coalition_from_json(block, graph));
    try {
        return Partition(std::move(blocks), graph.player_count());
    } catch (const BadParameter& e) {
        throw ParseError(e.what());
    }
}

json witness_to_json(const Witness& witness, const Graph& graph) {
    if (const auto* dev = std::get_if<IndividualDeviation>(&witness)) {
        json out{{"kind", "deviation"}, {"player", graph.player_name(dev->player)}};
        out["target"] = dev->target ? coalition_to_json(*dev->target, graph) : json();
        return out;
    }
    const auto& blocking = std::get<BlockingCoalition>(witness);
    return json{{"kind", "blocking"},
                {"coalition", coalition_to_json(blocking.coalition, graph)},
                {"strong", blocking.strong}};
}

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return doc;
}

}  // namespace

GameInstance load_game_file(const std::string& path) { return game_from_json(load_json_file(path)); }
Graph load_graph_file(const std::string& path) { return graph_from_json(load_json_file(path)); }
WeightedGraph load_weighted_graph_file(const std::string& path) {
    return weighted_graph_from_json(load_json_file(path));
}
Partition load_partition_file(const std::string& path, const Graph& graph) {
    return partition_from_json(load_json_file(path), graph);
}

}  // namespace hedonic
