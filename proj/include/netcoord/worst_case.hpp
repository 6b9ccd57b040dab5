#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netcoord/bounds.hpp"
#include "netcoord/errors.hpp"
#include "netcoord/game.hpp"
#include "netcoord/graph.hpp"
#include "netcoord/params.hpp"
#include "netcoord/rational.hpp"

namespace netcoord {

// Worst-equilibrium state for given payoffs, before realization. For
// gamma < beta this is the fractional C-edge construction; at gamma = beta
// no C-edge can survive an equilibrium and the worst case is everyone
// playing B.
struct WorstState {
    enum class Kind { CEdgeConstruction, AllB };
    Kind kind = Kind::CEdgeConstruction;
    EdgeState state;  // fractional for CEdgeConstruction, (0, 1, 0) for AllB
    Rational ratio;   // quotient of the state; equals the closed-form bound
};

// State ((b-g)/(2(a-g))*n_c, (a-g)/(2(b-g))*n_c, n_c) with the smallest
// C-edge count n_c = (a-g)/(b-g) + 1 that admits enough distinct players.
// Its quotient equals the closed-form bound for every n_c, so the choice
// of n_c only affects realizability.
inline WorstState fractional_worst_state(const Params& p) {
    WorstState ws;
    if (p.gamma() == p.beta()) {
        ws.kind = WorstState::Kind::AllB;
        ws.state = {0, 1, 0};
        ws.ratio = p.alpha() / p.beta();
        return ws;
    }
    Rational da = p.alpha() - p.gamma();
    Rational db = p.beta() - p.gamma();
    Rational n_c = da / db + 1;
    ws.state = {db / (2 * da) * n_c, da / (2 * db) * n_c, n_c};
    ws.ratio = quotient(ws.state, p);
    return ws;
}

// Smallest positive scaling that makes all components integers with overall
// gcd 1. The quotient is scale-invariant, so it is preserved exactly.
inline std::pair<EdgeState, Rational> scale_to_integral(const EdgeState& n) {
    if (!n.is_nonnegative()) throw std::invalid_argument("scale_to_integral: negative component");
    if (n.is_zero()) throw Error(ErrorCode::ZeroState, "cannot scale the zero state");
    BigInt common_den = lcm(lcm(denominator(n.a_edges), denominator(n.b_edges)), denominator(n.c_edges));
    BigInt a = numerator(n.a_edges) * (common_den / denominator(n.a_edges));
    BigInt b = numerator(n.b_edges) * (common_den / denominator(n.b_edges));
    BigInt c = numerator(n.c_edges) * (common_den / denominator(n.c_edges));
    BigInt g = gcd(gcd(a, b), c);
    Rational factor(common_den, g);
    return {{Rational(a / g), Rational(b / g), Rational(c / g)}, factor};
}

struct WorstCasePlan {
    EdgeState fractional_state;
    EdgeState integral_state;         // coprime integer components
    Rational n_c_min;                 // feasibility threshold on the C-edge count
    Rational scaling_factor;          // fractional -> integral
    std::int64_t realizability_multiplier = 1;  // realized state = multiplier * integral_state
    std::int64_t a_edges_per_a_player = 0;
    std::int64_t c_edges_per_a_player = 0;
    std::int64_t b_edges_per_b_player = 0;
    std::int64_t c_edges_per_b_player = 0;
    std::int64_t num_a_players = 0;
    std::int64_t num_b_players = 0;
};

struct WorstCaseInstance {
    Graph graph;
    Profile profile;
    WorstCasePlan plan;
};

namespace detail {

// Edges of the circulant graph on `count` vertices where every vertex has
// degree `degree`: offsets 1..degree/2, plus the antipodal matching when the
// degree is odd. Requires degree < count and degree*count even.
inline std::vector<std::pair<std::int64_t, std::int64_t>> circulant_edges(std::int64_t count,
                                                                          std::int64_t degree) {
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (std::int64_t offset = 1; offset <= degree / 2; ++offset)
        for (std::int64_t i = 0; i < count; ++i) edges.emplace_back(i, (i + offset) % count);
    if (degree % 2 == 1)
        for (std::int64_t i = 0; i < count / 2; ++i) edges.emplace_back(i, i + count / 2);
    return edges;
}

inline std::int64_t to_int64(const BigInt& v, const char* what) {
    if (v > BigInt(INT64_MAX))
        throw std::length_error(std::string("worst-case construction: ") + what + " does not fit a 64-bit count");
    return v.convert_to<std::int64_t>();
}

}  // namespace detail

// Builds a concrete simple graph and profile achieving the bound exactly.
//
// With (beta-gamma)/(alpha-gamma) = a/b in lowest terms, every A-player gets
// a A-edges and b C-edges, and every B-player b B-edges and a C-edges (the
// reciprocal ratio), which makes every node exactly indifferent. A-edges
// form an a-regular circulant on the A-players, B-edges a circulant on the
// B-players, C-edges a biregular bipartite circulant. The C-edge count is
// the least multiple of lcm of the per-player group sizes that is above the
// feasibility threshold and admits simple regular graphs on both sides.
inline WorstCaseInstance realize_graph(const Params& p) {
    if (p.gamma() == p.beta())
        throw Error(ErrorCode::PerfectCompatibility,
                    "gamma = beta leaves no C-edge construction; the worst equilibrium is all-B");

    Rational da = p.alpha() - p.gamma();
    Rational db = p.beta() - p.gamma();
    Rational a_ratio = db / da;  // A-edges per C-edge at an indifferent A-player
    std::int64_t a = detail::to_int64(numerator(a_ratio), "A-side degree");
    std::int64_t b = detail::to_int64(denominator(a_ratio), "A-side group size");
    std::int64_t c = b;  // reciprocal ratio in lowest terms
    std::int64_t d = a;

    WorstCasePlan plan;
    plan.a_edges_per_a_player = a;
    plan.c_edges_per_a_player = b;
    plan.b_edges_per_b_player = c;
    plan.c_edges_per_b_player = d;
    plan.n_c_min = da / db + 1;

    WorstState fractional = fractional_worst_state(p);
    plan.fractional_state = fractional.state;
    auto [integral, factor] = scale_to_integral(fractional.state);
    plan.integral_state = integral;
    plan.scaling_factor = factor;

    const std::int64_t step = std::lcm(b, d);
    std::int64_t n_ec = 0, n_a = 0, n_b = 0;
    for (std::int64_t m = 1;; ++m) {
        n_ec = m * step;
        if (Rational(n_ec) < plan.n_c_min) continue;
        n_a = n_ec / b;
        n_b = n_ec / d;
        if (a >= n_a || (a * n_a) % 2 != 0) continue;
        if (c >= n_b || (c * n_b) % 2 != 0) continue;
        if (b > n_b || d > n_a) continue;
        break;
    }
    plan.num_a_players = n_a;
    plan.num_b_players = n_b;
    Rational multiplier = Rational(n_ec) / integral.c_edges;
    if (!is_integer(multiplier))
        throw Error(ErrorCode::InternalRealizationFailure, "realized state is not an integer multiple");
    plan.realizability_multiplier = detail::to_int64(numerator(multiplier), "realizability multiplier");

    std::vector<std::string> nodes;
    nodes.reserve(static_cast<std::size_t>(n_a + n_b));
    for (std::int64_t i = 1; i <= n_a; ++i) nodes.push_back("a" + std::to_string(i));
    for (std::int64_t i = 1; i <= n_b; ++i) nodes.push_back("b" + std::to_string(i));

    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [i, j] : detail::circulant_edges(n_a, a))
        edges.emplace_back("a" + std::to_string(i + 1), "a" + std::to_string(j + 1));
    for (auto [i, j] : detail::circulant_edges(n_b, c))
        edges.emplace_back("b" + std::to_string(i + 1), "b" + std::to_string(j + 1));
    for (std::int64_t t = 0; t < n_ec; ++t)
        edges.emplace_back("a" + std::to_string(t / b + 1), "b" + std::to_string(t % n_b + 1));

    WorstCaseInstance instance{Graph::build(std::move(nodes), edges), Profile(), plan};
    std::vector<Strategy> strategies(instance.graph.node_count(), Strategy::B);
    for (std::size_t i = 0; i < instance.graph.node_count(); ++i)
        if (instance.graph.nodes()[i].front() == 'a') strategies[i] = Strategy::A;
    instance.profile = Profile::from_strategies(instance.graph, std::move(strategies));

    EdgeState realized = classify_edges(instance.graph, instance.profile);
    EdgeState expected = integral * Rational(plan.realizability_multiplier);
    if (!(realized == expected))
        throw Error(ErrorCode::InternalRealizationFailure, "classified state differs from the plan");
    if (!is_nash(instance.graph, instance.profile, p))
        throw Error(ErrorCode::InternalRealizationFailure, "constructed profile is not an equilibrium");
    if (quotient(realized, p) != poa_upper_bound(p).bound)
        throw Error(ErrorCode::InternalRealizationFailure, "achieved ratio differs from the bound");
    return instance;
}

struct WorstCaseReport {
    Rational alpha, beta, gamma;
    bool all_b = false;  // gamma = beta route: a single B-edge, everyone plays B
    std::optional<WorstCasePlan> plan;
    Graph graph;
    Profile profile;
    EdgeState achieved_state;
    Rational achieved_ratio;
    Rational social_welfare_value;
    Rational optimal_welfare_value;
    Rational bound;
    bool exact_match = false;
    bool degenerate_bound = false;
};

inline WorstCaseReport worst_case_report(const Params& p) {
    WorstCaseReport report;
    report.alpha = p.alpha();
    report.beta = p.beta();
    report.gamma = p.gamma();
    BoundReport bound = poa_upper_bound(p);
    report.bound = bound.bound;
    report.degenerate_bound = bound.degenerate;
    if (p.gamma() == p.beta()) {
        report.all_b = true;
        report.graph = Graph::build({"b1", "b2"}, {{"b1", "b2"}});
        report.profile = Profile::uniform(report.graph, Strategy::B);
    } else {
        WorstCaseInstance instance = realize_graph(p);
        report.plan = instance.plan;
        report.graph = std::move(instance.graph);
        report.profile = std::move(instance.profile);
    }
    report.achieved_state = classify_edges(report.graph, report.profile);
    report.achieved_ratio = quotient(report.achieved_state, p);
    report.social_welfare_value = social_welfare(report.graph, report.profile, p);
    report.optimal_welfare_value = optimal_welfare(report.graph, p);
    report.exact_match = report.achieved_ratio == report.bound;
    return report;
}

}  // namespace netcoord
