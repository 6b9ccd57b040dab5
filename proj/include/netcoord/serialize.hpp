#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "netcoord/bounds.hpp"
#include "netcoord/decomposition.hpp"
#include "netcoord/errors.hpp"
#include "netcoord/game.hpp"
#include "netcoord/graph.hpp"
#include "netcoord/oracle.hpp"
#include "netcoord/params.hpp"
#include "netcoord/worst_case.hpp"

namespace netcoord {

using json = nlohmann::json;

// A parsed graph file: the graph plus the optional strategy assignment.
struct GraphDocument {
    Graph graph;
    std::optional<Profile> profile;
};

inline json graph_to_json(const Graph& g, const Profile* profile = nullptr) {
    json doc;
    doc["nodes"] = g.nodes();
    json edges = json::array();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_ids(e);
        edges.push_back(json::array({u, v}));
    }
    doc["edges"] = std::move(edges);
    if (profile) {
        json strategies = json::object();
        for (const auto& [id, s] : profile->to_map(g)) strategies[id] = std::string(1, strategy_char(s));
        doc["strategies"] = std::move(strategies);
    }
    return doc;
}

inline GraphDocument graph_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
        throw Error(ErrorCode::ParseError, "graph JSON needs \"nodes\" and \"edges\"");
    std::vector<std::string> nodes;
    for (const auto& n : doc.at("nodes")) {
        if (!n.is_string()) throw Error(ErrorCode::ParseError, "node ids must be strings");
        nodes.push_back(n.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw Error(ErrorCode::ParseError, "each edge must be a 2-element array of node ids");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    GraphDocument result{Graph::build(std::move(nodes), edges), std::nullopt};
    if (doc.contains("strategies")) {
        const auto& raw = doc.at("strategies");
        if (!raw.is_object()) throw Error(ErrorCode::ParseError, "\"strategies\" must be an object");
        std::map<std::string, Strategy> assignment;
        for (const auto& [id, value] : raw.items()) {
            if (!value.is_string()) throw Error(ErrorCode::ParseError, "strategies must be \"A\" or \"B\"");
            assignment.emplace(id, strategy_from_string(value.get<std::string>()));
        }
        result.profile = Profile::from_map(result.graph, assignment);
    }
    return result;
}

// Plain-text edge list: one "u v" pair per line, '#' starts a comment,
// blank lines ignored. Nodes appear in order of first mention.
inline GraphDocument graph_from_edge_list(const std::string& text) {
    std::vector<std::string> nodes;
    std::map<std::string, bool> seen;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string u, v, extra;
        if (!(fields >> u)) continue;
        if (!(fields >> v) || (fields >> extra))
            throw Error(ErrorCode::ParseError, "edge list line " + std::to_string(line_no) +
                                                   ": expected exactly two node ids");
        for (const auto& id : {u, v})
            if (!seen[id]) {
                seen[id] = true;
                nodes.push_back(id);
            }
        edges.emplace_back(u, v);
    }
    return {Graph::build(std::move(nodes), edges), std::nullopt};
}

inline GraphDocument parse_graph_text(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error(ErrorCode::ParseError, "empty graph input");
    if (text[first] == '{') {
        json doc = json::parse(text, nullptr, false);
        if (doc.is_discarded()) throw Error(ErrorCode::ParseError, "malformed graph JSON");
        return graph_from_json(doc);
    }
    return graph_from_edge_list(text);
}

inline GraphDocument load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write file '" + path + "'");
    out << content;
}

inline json to_json(const EdgeState& n) {
    return {{"a_edges", format_rational(n.a_edges)},
            {"b_edges", format_rational(n.b_edges)},
            {"c_edges", format_rational(n.c_edges)}};
}

inline json to_json(const NashReport& r) {
    json deviators = json::array();
    for (const auto& d : r.deviators)
        deviators.push_back({{"node", d.node},
                             {"current_utility", format_rational(d.current_utility)},
                             {"deviation_utility", format_rational(d.deviation_utility)}});
    return {{"is_nash", r.is_nash}, {"deviators", std::move(deviators)}};
}

inline json to_json(const BoundReport& r) {
    return {{"alpha", format_rational(r.alpha)},
            {"beta", format_rational(r.beta)},
            {"gamma", format_rational(r.gamma)},
            {"bound", format_rational(r.bound)},
            {"corollary_bound", format_rational(r.corollary_bound)},
            {"all_b_ratio", format_rational(r.all_b_ratio)},
            {"degenerate", r.degenerate}};
}

inline json to_json(const WorstCasePlan& plan) {
    return {{"fractional_state", to_json(plan.fractional_state)},
            {"integral_state", to_json(plan.integral_state)},
            {"n_c_min", format_rational(plan.n_c_min)},
            {"scaling_factor", format_rational(plan.scaling_factor)},
            {"realizability_multiplier", plan.realizability_multiplier},
            {"a_edges_per_a_player", plan.a_edges_per_a_player},
            {"c_edges_per_a_player", plan.c_edges_per_a_player},
            {"b_edges_per_b_player", plan.b_edges_per_b_player},
            {"c_edges_per_b_player", plan.c_edges_per_b_player},
            {"num_a_players", plan.num_a_players},
            {"num_b_players", plan.num_b_players}};
}

inline json to_json(const WorstCaseReport& r) {
    json doc{{"alpha", format_rational(r.alpha)},
             {"beta", format_rational(r.beta)},
             {"gamma", format_rational(r.gamma)},
             {"construction", r.all_b ? "all_b" : "c_edge"},
             {"instance", graph_to_json(r.graph, &r.profile)},
             {"achieved_state", to_json(r.achieved_state)},
             {"achieved_ratio", format_rational(r.achieved_ratio)},
             {"social_welfare", format_rational(r.social_welfare_value)},
             {"optimal_welfare", format_rational(r.optimal_welfare_value)},
             {"bound", format_rational(r.bound)},
             {"exact_match", r.exact_match},
             {"degenerate_bound", r.degenerate_bound}};
    if (r.plan) doc["plan"] = to_json(*r.plan);
    return doc;
}

inline json to_json(const OracleResult& r, const Graph& g) {
    return {{"nodes", g.node_count()},
            {"edges", g.edge_count()},
            {"nash_count", r.nash_profiles.size()},
            {"worst_profile", graph_to_json(g, &r.worst_profile).at("strategies")},
            {"worst_ne_welfare", format_rational(r.worst_ne_welfare)},
            {"optimal_welfare", format_rational(r.optimal_welfare)},
            {"exact_poa", format_rational(r.exact_poa)},
            {"bound", format_rational(r.bound)},
            {"margin", format_rational(r.margin)}};
}

inline json to_json(const CampaignReport& r) {
    json params_list = json::array();
    for (const Params& p : r.config.params_list)
        params_list.push_back(json::array(
            {format_rational(p.alpha()), format_rational(p.beta()), format_rational(p.gamma())}));
    json graphs = json::array();
    for (const auto& g : r.graphs) {
        json per_params = json::array();
        for (const auto& pr : g.per_params)
            per_params.push_back({{"alpha", format_rational(pr.alpha)},
                                  {"beta", format_rational(pr.beta)},
                                  {"gamma", format_rational(pr.gamma)},
                                  {"nash_count", pr.nash_count},
                                  {"worst_ne_welfare", format_rational(pr.worst_ne_welfare)},
                                  {"exact_poa", format_rational(pr.exact_poa)},
                                  {"bound", format_rational(pr.bound)},
                                  {"margin", format_rational(pr.margin)}});
        graphs.push_back({{"seed", g.graph_seed},
                          {"nodes", g.nodes},
                          {"edges", g.edges},
                          {"results", std::move(per_params)}});
    }
    return {{"config",
             {{"num_graphs", r.config.num_graphs},
              {"nodes", r.config.nodes},
              {"edge_probability", format_rational(r.config.edge_probability)},
              {"params_list", std::move(params_list)},
              {"seed", r.config.seed},
              {"cap", r.config.cap}}},
            {"prng", r.prng},
            {"graphs", std::move(graphs)},
            {"violations", r.violations},
            {"graphs_skipped_empty", r.graphs_skipped_empty},
            {"nash_checked", r.nash_checked},
            {"wall_time_ms", r.wall_time_ms}};
}

inline CampaignConfig campaign_config_from_json(const json& doc) {
    CampaignConfig config;
    try {
        config.num_graphs = doc.at("num_graphs").get<std::size_t>();
        config.nodes = doc.at("nodes").get<std::size_t>();
        config.edge_probability = parse_rational(doc.at("edge_probability").get<std::string>());
        config.seed = doc.at("seed").get<std::uint64_t>();
        if (doc.contains("cap")) config.cap = doc.at("cap").get<std::size_t>();
        for (const auto& triple : doc.at("params_list")) {
            if (!triple.is_array() || triple.size() != 3)
                throw Error(ErrorCode::ParseError, "params_list entries must be [alpha, beta, gamma]");
            config.params_list.push_back(Params::validate(parse_rational(triple[0].get<std::string>()),
                                                          parse_rational(triple[1].get<std::string>()),
                                                          parse_rational(triple[2].get<std::string>())));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad campaign config: ") + e.what());
    }
    return config;
}

inline json to_json(const DynamicsTrace& trace, const Graph& g, Schedule schedule, std::uint64_t seed) {
    json steps = json::array();
    for (const auto& step : trace.steps)
        steps.push_back({{"node", step.node},
                         {"from", std::string(1, strategy_char(step.from))},
                         {"to", std::string(1, strategy_char(step.to))},
                         {"potential_after", format_rational(step.potential_after)}});
    json final_strategies = json::object();
    for (const auto& [id, s] : trace.final.to_map(g)) final_strategies[id] = std::string(1, strategy_char(s));
    return {{"schedule", schedule == Schedule::RoundRobin ? "round-robin" : "random"},
            {"seed", seed},
            {"steps", std::move(steps)},
            {"step_count", trace.steps.size()},
            {"final", std::move(final_strategies)},
            {"converged", trace.converged}};
}

}  // namespace netcoord
