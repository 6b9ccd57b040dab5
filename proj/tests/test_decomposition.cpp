#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "netcoord/decomposition.hpp"
#include "netcoord/oracle.hpp"

using namespace netcoord;

namespace {

Graph four_cycle() {
    return Graph::build({"v1", "v2", "v3", "v4"}, {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"}});
}

Profile aabb(const Graph& cycle) {
    return Profile::from_strategies(cycle, {Strategy::A, Strategy::A, Strategy::B, Strategy::B});
}

Graph random_graph_local(std::mt19937& rng, std::size_t n) {
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 2) edges.emplace_back(nodes[i], nodes[j]);
    return Graph::build(nodes, edges);
}

}  // namespace

TEST_CASE("decompose: no C-edges leaves everything uniform") {
    Graph cycle = four_cycle();
    Decomposition d = decompose(cycle, Profile::uniform(cycle, Strategy::A));
    CHECK(d.frontier_edges.empty());
    CHECK(d.uniform_state == EdgeState{4, 0, 0});
}

TEST_CASE("decompose: mixed 4-cycle is all frontier") {
    Graph cycle = four_cycle();
    Decomposition d = decompose(cycle, aabb(cycle));
    CHECK(d.frontier_edges.size() == 4);
    CHECK(d.uniform_edges.empty());
    CHECK(d.frontier_state == EdgeState{1, 1, 2});
}

TEST_CASE("decompose: path with one C-edge splits as expected") {
    Graph path = Graph::build({"v1", "v2", "v3", "v4"}, {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}});
    Profile aaab = Profile::from_strategies(path, {Strategy::A, Strategy::A, Strategy::A, Strategy::B});
    Decomposition d = decompose(path, aaab);
    CHECK(d.frontier_state == EdgeState{1, 0, 1});
    CHECK(d.uniform_state == EdgeState{1, 0, 0});
    REQUIRE(d.uniform_edges.size() == 1);
    CHECK(path.edge_ids(d.uniform_edges[0]) == std::pair<std::string, std::string>{"v1", "v2"});
}

TEST_CASE("decomposition partitions the edge set and owns all C-edges") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph_local(rng, 2 + rng() % 7);
        std::vector<Strategy> strategies(g.node_count());
        for (auto& s : strategies) s = rng() % 2 ? Strategy::A : Strategy::B;
        Profile p = Profile::from_strategies(g, strategies);
        Decomposition d = decompose(g, p);
        CHECK(d.frontier_edges.size() + d.uniform_edges.size() == g.edge_count());
        CHECK(d.uniform_state.c_edges == 0);
        CHECK(d.frontier_state + d.uniform_state == classify_edges(g, p));

        // within each uniform-part component everyone plays one strategy
        Graph uniform = edge_induced_subgraph(g, d.uniform_edges);
        for (const auto& [u, v] : uniform.edges()) {
            CHECK(p.at(g.index_of(uniform.node_id(u))) == p.at(g.index_of(uniform.node_id(v))));
        }
    }
}

TEST_CASE("equilibria stay equilibria on both decomposition sides") {
    Graph cycle = four_cycle();
    Params ones = Params::validate(1, 1, 0);
    CHECK(nash_decomposition_check(cycle, aabb(cycle), ones));
    CHECK(nash_decomposition_check(cycle, Profile::uniform(cycle, Strategy::B), ones));

    Profile not_nash = Profile::from_strategies(cycle, {Strategy::A, Strategy::B, Strategy::A, Strategy::B});
    CHECK_THROWS_AS(nash_decomposition_check(cycle, not_nash, Params::validate(2, 1, 0)), Error);

    std::mt19937 rng(29);
    Params p = Params::validate(3, 2, 1);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph_local(rng, 2 + rng() % 5);
        for (const Profile& ne : enumerate_nash(g, p)) CHECK(nash_decomposition_check(g, ne, p));
    }
}

TEST_CASE("mediant check on the worked splits") {
    Params p321 = Params::validate(3, 2, 1);
    Decomposition d1;
    d1.frontier_state = {1, 4, 4};
    d1.uniform_state = {0, 0, 0};
    CHECK(mediant_check({1, 4, 4}, d1, p321));

    Params ones = Params::validate(1, 1, 0);
    Decomposition d2;
    d2.frontier_state = {1, 0, 1};
    d2.uniform_state = {1, 0, 0};
    CHECK(quotient({2, 0, 1}, ones) == Rational(3, 2));
    CHECK(quotient(d2.frontier_state, ones) == 2);
    CHECK(quotient(d2.uniform_state, ones) == 1);
    CHECK(mediant_check({2, 0, 1}, d2, ones));

    Decomposition mismatched;
    mismatched.frontier_state = {1, 0, 0};
    mismatched.uniform_state = {0, 1, 0};
    CHECK_THROWS_AS(mediant_check({5, 5, 5}, mismatched, ones), std::invalid_argument);
}

TEST_CASE("mediant inequality holds for arbitrary nonnegative splits") {
    std::mt19937 rng(41);
    Params p = Params::validate(Rational(5, 2), Rational(3, 2), Rational(1, 2));
    int checked = 0;
    while (checked < 200) {
        auto part = [&] {
            return EdgeState{Rational(static_cast<long>(rng() % 6), 1 + rng() % 3),
                             Rational(static_cast<long>(rng() % 6), 1 + rng() % 3),
                             Rational(static_cast<long>(rng() % 6), 1 + rng() % 3)};
        };
        EdgeState x = part(), y = part();
        if (x.is_zero() && y.is_zero()) continue;
        Decomposition d;
        d.frontier_state = x;
        d.uniform_state = y;
        CHECK(mediant_check(x + y, d, p));
        ++checked;
    }
}

TEST_CASE("uniform part never beats the all-B ratio") {
    Params p = Params::validate(3, 2, 0);
    CHECK(uniform_part_bound_check({0, 5, 0}, p));
    CHECK(quotient({0, 5, 0}, p) == Rational(3, 2));  // equality at all-B
    CHECK(uniform_part_bound_check({4, 0, 0}, p));
    CHECK(uniform_part_bound_check({1, 1, 0}, p));
    CHECK(quotient({1, 1, 0}, p) == Rational(6, 5));

    CHECK_THROWS_AS(uniform_part_bound_check({1, 1, 1}, p), Error);
    CHECK_THROWS_AS(uniform_part_bound_check({0, 0, 0}, p), Error);
}

TEST_CASE("frontier counting bounds hold with equality on the tight state") {
    Graph nine = Graph::build({"a1", "a2", "b1", "b2", "b3", "b4"},
                              {{"a1", "a2"},
                               {"a1", "b1"},
                               {"a1", "b2"},
                               {"a2", "b3"},
                               {"a2", "b4"},
                               {"b1", "b2"},
                               {"b2", "b3"},
                               {"b3", "b4"},
                               {"b4", "b1"}});
    std::vector<Strategy> s;
    for (const auto& id : nine.nodes()) s.push_back(id.front() == 'a' ? Strategy::A : Strategy::B);
    Profile profile = Profile::from_strategies(nine, s);
    Params p = Params::validate(3, 2, 1);
    CHECK(frontier_counting_check(nine, profile, p));

    EdgeState f = decompose(nine, profile).frontier_state;
    Rational da = p.alpha() - p.gamma(), db = p.beta() - p.gamma();
    CHECK(f.a_edges == db / (2 * da) * f.c_edges);
    CHECK(f.b_edges == da / (2 * db) * f.c_edges);

    CHECK_THROWS_AS(frontier_counting_check(nine, profile, Params::validate(3, 2, 2)), Error);

    Graph cycle = four_cycle();
    CHECK(frontier_counting_check(cycle, Profile::uniform(cycle, Strategy::A), p));  // no C-edges
}

TEST_CASE("every enumerated equilibrium passes all structural checks") {
    std::mt19937 rng(53);
    Params p = Params::validate(3, 2, 1);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph_local(rng, 8);
        if (g.edge_count() == 0) continue;
        for (const Profile& ne : enumerate_nash(g, p)) {
            EdgeState n = classify_edges(g, ne);
            Decomposition d = decompose(g, ne);
            CHECK(nash_decomposition_check(g, ne, p));
            CHECK(mediant_check(n, d, p));
            if (!d.uniform_edges.empty()) CHECK(uniform_part_bound_check(d.uniform_state, p));
            CHECK(frontier_counting_check(g, ne, p));
            CHECK(quotient(n, p) <= poa_upper_bound(p).bound);
        }
    }
}
