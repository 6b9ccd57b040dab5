#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "netcoord/netcoord.hpp"

using namespace netcoord;

TEST_CASE("graph JSON round-trips with strategies") {
    Graph g = Graph::build({"v1", "v2", "v3"}, {{"v1", "v2"}, {"v2", "v3"}});
    Profile s = Profile::from_map(g, {{"v1", Strategy::A}, {"v2", Strategy::A}, {"v3", Strategy::B}});
    json doc = graph_to_json(g, &s);
    GraphDocument parsed = graph_from_json(doc);
    CHECK(parsed.graph.nodes() == g.nodes());
    CHECK(parsed.graph.edges() == g.edges());
    REQUIRE(parsed.profile.has_value());
    CHECK(*parsed.profile == s);

    CHECK(graph_to_json(parsed.graph, &*parsed.profile).dump() == doc.dump());
}

TEST_CASE("graph JSON rejects malformed documents") {
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), Error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"nodes": [1], "edges": []})")), Error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"nodes": ["a"], "edges": [["a"]]})")), Error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"nodes": ["a","b"], "edges": [["a","b"]],
                                                  "strategies": {"a": "X", "b": "B"}})")),
                    Error);
    CHECK_THROWS_AS(parse_graph_text("{not json"), Error);
    CHECK_THROWS_AS(parse_graph_text("   "), Error);
}

TEST_CASE("edge list format parses with comments") {
    GraphDocument doc = graph_from_edge_list("# a comment\nv1 v2\nv2 v3  # trailing\n\nv3 v4\n");
    CHECK(doc.graph.node_count() == 4);
    CHECK(doc.graph.edge_count() == 3);
    CHECK_FALSE(doc.profile.has_value());

    CHECK_THROWS_AS(graph_from_edge_list("v1 v2 v3\n"), Error);
    CHECK_THROWS_AS(graph_from_edge_list("v1\n"), Error);
}

TEST_CASE("rationals serialize as p/q strings everywhere") {
    json report = to_json(poa_upper_bound(Params::validate(3, 2, 1)));
    CHECK(report.at("bound") == "9/5");
    CHECK(report.at("corollary_bound") == "5/2");
    CHECK(report.at("alpha") == "3");

    json state = to_json(EdgeState{Rational(3, 4), 3, 0});
    CHECK(state.at("a_edges") == "3/4");
    CHECK(state.at("b_edges") == "3");
}

TEST_CASE("worst case report serializes its instance for re-analysis") {
    WorstCaseReport report = worst_case_report(Params::validate(3, 2, 1));
    json doc = to_json(report);
    GraphDocument parsed = graph_from_json(doc.at("instance"));
    REQUIRE(parsed.profile.has_value());
    Params p = Params::validate(3, 2, 1);
    CHECK(is_nash(parsed.graph, *parsed.profile, p));
    CHECK(quotient(classify_edges(parsed.graph, *parsed.profile), p) == Rational(9, 5));
    CHECK(doc.at("exact_match") == true);
}

TEST_CASE("campaign config parses from JSON") {
    json doc = json::parse(R"({
        "num_graphs": 5, "nodes": 6, "edge_probability": "1/2", "seed": 7,
        "params_list": [["1","1","0"], ["3","2","1"]]
    })");
    CampaignConfig config = campaign_config_from_json(doc);
    CHECK(config.num_graphs == 5);
    CHECK(config.edge_probability == Rational(1, 2));
    REQUIRE(config.params_list.size() == 2);
    CHECK(config.params_list[1].alpha() == 3);
    CHECK(config.cap == kDefaultEnumerationCap);

    CHECK_THROWS_AS(campaign_config_from_json(json::parse(R"({"num_graphs": 2})")), Error);
    CHECK_THROWS_AS(campaign_config_from_json(json::parse(
                        R"({"num_graphs": 1, "nodes": 3, "edge_probability": "1/2", "seed": 0,
                            "params_list": [["1","2","0"]]})")),
                    Error);
}

TEST_CASE("campaign report JSON is deterministic apart from wall time") {
    CampaignConfig config;
    config.num_graphs = 3;
    config.nodes = 5;
    config.edge_probability = Rational(1, 2);
    config.params_list = {Params::validate(2, 1, 0)};
    config.seed = 5;
    json first = to_json(verify_bound_campaign(config));
    json second = to_json(verify_bound_campaign(config));
    first.erase("wall_time_ms");
    second.erase("wall_time_ms");
    CHECK(first.dump() == second.dump());
}
