#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "netcoord/bounds.hpp"
#include "netcoord/decomposition.hpp"
#include "netcoord/errors.hpp"
#include "netcoord/game.hpp"
#include "netcoord/graph.hpp"
#include "netcoord/params.hpp"

namespace netcoord {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

namespace detail {

// Adjacency as bitmasks plus integer comparison coefficients so the
// per-profile Nash test is pure integer arithmetic: an A-node with na
// A-neighbors and nb B-neighbors stays iff na*ca >= nb*cb, a B-node iff
// nb*cb >= na*ca, where ca/cb clear the denominators of alpha-gamma and
// beta-gamma.
struct EnumerationContext {
    std::vector<std::uint64_t> adjacency;
    BigInt ca;
    BigInt cb;

    EnumerationContext(const Graph& g, const Params& p) {
        adjacency.assign(g.node_count(), 0);
        for (const auto& [u, v] : g.edges()) {
            adjacency[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adjacency[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
        Rational da = p.alpha() - p.gamma();
        Rational db = p.beta() - p.gamma();
        ca = numerator(da) * denominator(db);
        cb = numerator(db) * denominator(da);
    }

    bool is_nash_mask(std::uint64_t a_mask) const {
        for (std::size_t v = 0; v < adjacency.size(); ++v) {
            std::uint64_t adj = adjacency[v];
            long na = std::popcount(adj & a_mask);
            long nb = std::popcount(adj) - na;
            if (a_mask >> v & 1) {
                if (na * ca < nb * cb) return false;
            } else {
                if (nb * cb < na * ca) return false;
            }
        }
        return true;
    }
};

inline Profile profile_from_mask(const Graph& g, std::uint64_t a_mask) {
    std::vector<Strategy> strategies(g.node_count(), Strategy::B);
    for (std::size_t i = 0; i < g.node_count(); ++i)
        if (a_mask >> i & 1) strategies[i] = Strategy::A;
    return Profile::from_strategies(g, std::move(strategies));
}

// Nash profiles with mask in [begin, end); masks count node i on bit i with
// a set bit meaning strategy A, so disjoint ranges partition the scan.
inline std::vector<Profile> enumerate_nash_range(const Graph& g, const EnumerationContext& ctx,
                                                 std::uint64_t begin, std::uint64_t end) {
    std::vector<Profile> found;
    for (std::uint64_t mask = begin; mask < end; ++mask)
        if (ctx.is_nash_mask(mask)) found.push_back(profile_from_mask(g, mask));
    return found;
}

}  // namespace detail

// All weak Nash equilibria, in ascending profile-mask order (all-B first,
// all-A last). Guarded by the 2^|V| cap.
inline std::vector<Profile> enumerate_nash(const Graph& g, const Params& p,
                                           std::size_t cap = kDefaultEnumerationCap) {
    if (g.node_count() > std::min<std::size_t>(cap, 62))
        throw Error(ErrorCode::TooLarge, "graph has " + std::to_string(g.node_count()) +
                                             " nodes, enumeration cap is " + std::to_string(cap));
    detail::EnumerationContext ctx(g, p);
    return detail::enumerate_nash_range(g, ctx, 0, std::uint64_t{1} << g.node_count());
}

struct OracleResult {
    std::vector<Profile> nash_profiles;
    Profile worst_profile;
    Rational worst_ne_welfare;
    Rational optimal_welfare;
    Rational exact_poa;
    Rational bound;
    Rational margin;  // bound - exact_poa, nonnegative
};

// Ground-truth price of anarchy by exhaustive enumeration. The all-B
// equilibrium always exists with positive welfare, so the minimum is safe.
inline OracleResult exact_poa(const Graph& g, const Params& p, std::size_t cap = kDefaultEnumerationCap) {
    if (g.edge_count() == 0)
        throw Error(ErrorCode::EmptyGraph, "price of anarchy is undefined without edges");
    OracleResult result;
    result.nash_profiles = enumerate_nash(g, p, cap);
    bool first = true;
    for (const Profile& s : result.nash_profiles) {
        Rational welfare = social_welfare(g, s, p);
        if (first || welfare < result.worst_ne_welfare) {
            result.worst_ne_welfare = welfare;
            result.worst_profile = s;
            first = false;
        }
    }
    result.optimal_welfare = optimal_welfare(g, p);
    result.exact_poa = result.optimal_welfare / result.worst_ne_welfare;
    result.bound = poa_upper_bound(p).bound;
    result.margin = result.bound - result.exact_poa;
    return result;
}

// Erdos-Renyi G(n, p) sample. One mt19937_64 draw per vertex pair in
// row-major order; the pair is an edge iff draw * denominator(p) <
// numerator(p) * 2^64, an exact comparison, so output is identical on
// every platform.
inline Graph random_graph(std::size_t n, const Rational& edge_probability, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_graph: need at least one node");
    if (edge_probability < 0 || edge_probability > 1)
        throw std::invalid_argument("random_graph: edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    const BigInt num = numerator(edge_probability);
    const BigInt den = denominator(edge_probability);
    const BigInt scale = BigInt(1) << 64;
    std::vector<std::string> nodes;
    nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) nodes.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            BigInt draw = rng();
            if (draw * den < num * scale) edges.emplace_back(nodes[i], nodes[j]);
        }
    return Graph::build(std::move(nodes), edges);
}

struct CampaignConfig {
    std::size_t num_graphs = 0;
    std::size_t nodes = 0;
    Rational edge_probability;
    std::vector<Params> params_list;
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultEnumerationCap;
};

struct CampaignParamsResult {
    Rational alpha, beta, gamma;
    std::size_t nash_count = 0;
    Rational worst_ne_welfare;
    Rational exact_poa;
    Rational bound;
    Rational margin;
};

struct CampaignGraphResult {
    std::uint64_t graph_seed = 0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::vector<CampaignParamsResult> per_params;
};

struct CampaignReport {
    CampaignConfig config;
    std::string prng = "mt19937_64";
    std::vector<CampaignGraphResult> graphs;
    std::vector<std::string> violations;
    std::size_t graphs_skipped_empty = 0;
    std::size_t nash_checked = 0;
    double wall_time_ms = 0.0;

    bool ok() const { return violations.empty(); }
};

// Samples graphs (graph i uses seed config.seed + i), runs the exact oracle
// for every parameter triple and checks every enumerated equilibrium against
// the bound and all four structural lemma checks. Violations would falsify
// the closed-form bound; the expected count is zero.
inline CampaignReport verify_bound_campaign(const CampaignConfig& config) {
    auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.config = config;
    for (std::size_t i = 0; i < config.num_graphs; ++i) {
        std::uint64_t graph_seed = config.seed + i;
        Graph g = random_graph(config.nodes, config.edge_probability, graph_seed);
        if (g.edge_count() == 0) {
            ++report.graphs_skipped_empty;
            continue;
        }
        CampaignGraphResult graph_result;
        graph_result.graph_seed = graph_seed;
        graph_result.nodes = g.node_count();
        graph_result.edges = g.edge_count();
        for (const Params& p : config.params_list) {
            OracleResult oracle = exact_poa(g, p, config.cap);
            CampaignParamsResult pr;
            pr.alpha = p.alpha();
            pr.beta = p.beta();
            pr.gamma = p.gamma();
            pr.nash_count = oracle.nash_profiles.size();
            pr.worst_ne_welfare = oracle.worst_ne_welfare;
            pr.exact_poa = oracle.exact_poa;
            pr.bound = oracle.bound;
            pr.margin = oracle.margin;
            auto flag = [&](const std::string& what) {
                report.violations.push_back("graph seed " + std::to_string(graph_seed) + ", params (" +
                                            format_rational(p.alpha()) + ", " + format_rational(p.beta()) + ", " +
                                            format_rational(p.gamma()) + "): " + what);
            };
            if (oracle.exact_poa > oracle.bound) flag("exact PoA exceeds the bound");
            for (const Profile& s : oracle.nash_profiles) {
                ++report.nash_checked;
                EdgeState n = classify_edges(g, s);
                Decomposition d = decompose(g, s);
                if (!nash_decomposition_check(g, s, p)) flag("decomposition parts are not equilibria");
                if (!mediant_check(n, d, p)) flag("mediant inequality failed");
                if (!d.uniform_edges.empty() && !uniform_part_bound_check(d.uniform_state, p))
                    flag("uniform part exceeded alpha/beta");
                if (p.gamma() < p.beta() && !frontier_counting_check(g, s, p))
                    flag("frontier counting bounds failed");
            }
            graph_result.per_params.push_back(std::move(pr));
        }
        report.graphs.push_back(std::move(graph_result));
    }
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace netcoord
