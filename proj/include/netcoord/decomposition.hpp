#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netcoord/errors.hpp"
#include "netcoord/game.hpp"
#include "netcoord/graph.hpp"
#include "netcoord/params.hpp"

namespace netcoord {

// Splits the edge set into the frontier part (every C-edge plus every edge
// sharing an endpoint with a C-edge) and the uniform remainder, where each
// connected component is played with a single strategy.
struct Decomposition {
    std::vector<std::size_t> frontier_edges;  // indices into Graph::edges()
    std::vector<std::size_t> uniform_edges;
    EdgeState frontier_state;
    EdgeState uniform_state;
};

inline Decomposition decompose(const Graph& g, const Profile& s) {
    s.require_covers(g);
    std::vector<bool> touches_c(g.node_count(), false);
    for (const auto& [u, v] : g.edges())
        if (s.at(u) != s.at(v)) touches_c[static_cast<std::size_t>(u)] = touches_c[static_cast<std::size_t>(v)] = true;

    Decomposition d;
    auto bump = [](EdgeState& state, Strategy su, Strategy sv) {
        if (su != sv)
            state.c_edges += 1;
        else if (su == Strategy::A)
            state.a_edges += 1;
        else
            state.b_edges += 1;
    };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges()[e];
        bool frontier = touches_c[static_cast<std::size_t>(u)] || touches_c[static_cast<std::size_t>(v)];
        if (frontier) {
            d.frontier_edges.push_back(e);
            bump(d.frontier_state, s.at(u), s.at(v));
        } else {
            d.uniform_edges.push_back(e);
            bump(d.uniform_state, s.at(u), s.at(v));
        }
    }
    return d;
}

// Subgraph induced by a set of edges; its nodes are exactly the endpoints,
// in the parent graph's declaration order.
inline Graph edge_induced_subgraph(const Graph& g, const std::vector<std::size_t>& edge_indices) {
    std::vector<bool> used(g.node_count(), false);
    for (std::size_t e : edge_indices) {
        const auto& [u, v] = g.edges().at(e);
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
    }
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        if (used[i]) nodes.push_back(g.node_id(static_cast<int>(i)));
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(edge_indices.size());
    for (std::size_t e : edge_indices) edges.push_back(g.edge_ids(e));
    return Graph::build(std::move(nodes), edges);
}

inline Profile restrict_profile(const Graph& g, const Profile& s, const Graph& sub) {
    std::vector<Strategy> strategies;
    strategies.reserve(sub.node_count());
    for (const auto& id : sub.nodes()) strategies.push_back(s.at(g.index_of(id)));
    return Profile::from_strategies(sub, std::move(strategies));
}

// An equilibrium restricted to either side of the decomposition stays an
// equilibrium there. Always true; exists so the claim can be exercised.
inline bool nash_decomposition_check(const Graph& g, const Profile& s, const Params& p) {
    if (!is_nash(g, s, p))
        throw Error(ErrorCode::NotAnEquilibrium, "profile is not a Nash equilibrium of the full graph");
    Decomposition d = decompose(g, s);
    Graph frontier = edge_induced_subgraph(g, d.frontier_edges);
    Graph uniform = edge_induced_subgraph(g, d.uniform_edges);
    return is_nash(frontier, restrict_profile(g, s, frontier), p) &&
           is_nash(uniform, restrict_profile(g, s, uniform), p);
}

// quotient(x + y) <= max(quotient(x), quotient(y)) for nonnegative splits;
// a part with zero state is absent from the max.
inline bool mediant_check(const EdgeState& n, const Decomposition& d, const Params& p) {
    if (!(d.frontier_state + d.uniform_state == n))
        throw std::invalid_argument("mediant_check: state does not match the decomposition parts");
    Rational whole = quotient(n, p);
    bool any = false;
    Rational best;
    for (const EdgeState* part : {&d.frontier_state, &d.uniform_state}) {
        if (part->is_zero()) continue;
        Rational r = quotient(*part, p);
        if (!any || r > best) best = r;
        any = true;
    }
    if (!any) throw Error(ErrorCode::ZeroWelfare, "both decomposition parts are empty");
    return whole <= best;
}

// The uniform part never beats the ratio of the all-B assignment.
inline bool uniform_part_bound_check(const EdgeState& uniform_state, const Params& p) {
    if (uniform_state.c_edges != 0)
        throw Error(ErrorCode::InvalidUniformState,
                    "uniform part contains " + format_rational(uniform_state.c_edges) + " C-edges");
    return quotient(uniform_state, p) <= p.alpha() / p.beta();
}

// Counting bounds on the frontier part of an equilibrium: both per-half
// lower bounds and both strengthened simple-graph variants.
inline bool frontier_counting_check(const Graph& g, const Profile& s, const Params& p) {
    if (p.gamma() == p.beta() || p.gamma() == p.alpha())
        throw Error(ErrorCode::DegenerateRatio, "counting bounds divide by alpha-gamma and beta-gamma");
    if (!is_nash(g, s, p))
        throw Error(ErrorCode::NotAnEquilibrium, "profile is not a Nash equilibrium");
    EdgeState f = decompose(g, s).frontier_state;
    Rational da = p.alpha() - p.gamma();
    Rational db = p.beta() - p.gamma();
    Rational pair_slack = f.c_edges * (f.c_edges - 1) / 2;
    return f.a_edges >= db / (2 * da) * f.c_edges && f.b_edges >= da / (2 * db) * f.c_edges &&
           f.a_edges >= db / da * f.c_edges - pair_slack && f.b_edges >= da / db * f.c_edges - pair_slack;
}

}  // namespace netcoord
