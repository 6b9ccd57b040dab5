#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "netcoord/errors.hpp"
#include "netcoord/graph.hpp"
#include "netcoord/params.hpp"
#include "netcoord/rational.hpp"

namespace netcoord {

namespace detail {

// Counts of A- and B-playing neighbors of a node.
struct NeighborCounts {
    long a = 0;
    long b = 0;
};

inline NeighborCounts neighbor_counts(const Graph& g, const Profile& s, int v) {
    NeighborCounts c;
    for (int w : g.adjacency()[static_cast<std::size_t>(v)])
        (s.at(w) == Strategy::A ? c.a : c.b) += 1;
    return c;
}

inline Rational utility_of_counts(const NeighborCounts& c, Strategy own, const Params& p) {
    if (own == Strategy::A) return c.a * p.alpha() + c.b * p.gamma();
    return c.a * p.gamma() + c.b * p.beta();
}

}  // namespace detail

inline Rational utility(const Graph& g, const Profile& s, const Params& p, int v) {
    s.require_covers(g);
    return detail::utility_of_counts(detail::neighbor_counts(g, s, v), s.at(v), p);
}

inline Rational utility(const Graph& g, const Profile& s, const Params& p, const std::string& node) {
    return utility(g, s, p, g.index_of(node));
}

// Sum of all node utilities; equals 2*(n_a*alpha + n_b*beta + n_c*gamma)
// since every edge pays both endpoints.
inline Rational social_welfare(const Graph& g, const Profile& s, const Params& p) {
    s.require_covers(g);
    EdgeState n = classify_edges(g, s);
    return 2 * (n.a_edges * p.alpha() + n.b_edges * p.beta() + n.c_edges * p.gamma());
}

inline Rational social_welfare(const EdgeState& n, const Params& p) {
    return 2 * (n.a_edges * p.alpha() + n.b_edges * p.beta() + n.c_edges * p.gamma());
}

// Welfare of the all-A assignment, the maximum over all profiles.
inline Rational optimal_welfare(const Graph& g, const Params& p) {
    return 2 * Rational(static_cast<long>(g.edge_count())) * p.alpha();
}

struct Deviation {
    std::string node;
    Rational current_utility;
    Rational deviation_utility;

    bool operator==(const Deviation&) const = default;
};

struct NashReport {
    bool is_nash = false;
    std::vector<Deviation> deviators;  // nodes that strictly gain by switching
};

// Weak Nash check: a profile is an equilibrium iff no node strictly improves
// by unilaterally switching strategy. Indifferent nodes stay put.
inline NashReport nash_report(const Graph& g, const Profile& s, const Params& p) {
    s.require_covers(g);
    NashReport report;
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        auto counts = detail::neighbor_counts(g, s, static_cast<int>(v));
        Strategy own = s.at(static_cast<int>(v));
        Rational current = detail::utility_of_counts(counts, own, p);
        Rational switched = detail::utility_of_counts(counts, flipped(own), p);
        if (switched > current)
            report.deviators.push_back({g.node_id(static_cast<int>(v)), current, switched});
    }
    report.is_nash = report.deviators.empty();
    return report;
}

inline bool is_nash(const Graph& g, const Profile& s, const Params& p) {
    return nash_report(g, s, p).is_nash;
}

// Optimal welfare of an equally sized edge set divided by the welfare of
// state n: r(n) = total(n) * alpha / (n_a*alpha + n_b*beta + n_c*gamma).
inline Rational quotient(const EdgeState& n, const Params& p) {
    if (!n.is_nonnegative()) throw std::invalid_argument("quotient: edge state has a negative component");
    Rational denom = n.a_edges * p.alpha() + n.b_edges * p.beta() + n.c_edges * p.gamma();
    if (denom == 0)
        throw Error(ErrorCode::ZeroWelfare, "state (" + format_rational(n.a_edges) + ", " +
                                                format_rational(n.b_edges) + ", " + format_rational(n.c_edges) +
                                                ") has zero welfare");
    return n.total() * p.alpha() / denom;
}

// Half the social welfare; an exact potential for unilateral switches.
inline Rational potential(const Graph& g, const Profile& s, const Params& p) {
    return social_welfare(g, s, p) / 2;
}

enum class Schedule { RoundRobin, RandomPermutationPerRound };

struct DynamicsStep {
    std::string node;
    Strategy from;
    Strategy to;
    Rational potential_after;
};

struct DynamicsTrace {
    std::vector<DynamicsStep> steps;
    Profile final;
    bool converged = false;
};

namespace detail {

// Unbiased bounded draw; kept explicit so traces are identical across platforms.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

inline std::vector<int> round_order(Schedule schedule, std::size_t n, std::mt19937_64& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (schedule == Schedule::RandomPermutationPerRound)
        for (std::size_t i = n; i > 1; --i)
            std::swap(order[i - 1], order[bounded_draw(rng, i)]);
    return order;
}

}  // namespace detail

// Sequential strict best-response dynamics. A node switches only when the
// switch strictly improves its utility, so the potential rises with every
// recorded step and the walk must reach a (weak) Nash equilibrium.
inline DynamicsTrace run_dynamics(const Graph& g, const Profile& s0, const Params& p, Schedule schedule,
                                  std::uint64_t seed) {
    s0.require_covers(g);
    DynamicsTrace trace;
    std::mt19937_64 rng(seed);
    std::vector<Strategy> current(s0.strategies());
    Profile view = s0;
    bool changed = true;
    while (changed && g.node_count() > 0) {
        changed = false;
        for (int v : detail::round_order(schedule, g.node_count(), rng)) {
            auto counts = detail::neighbor_counts(g, view, v);
            Strategy own = current[static_cast<std::size_t>(v)];
            Rational now = detail::utility_of_counts(counts, own, p);
            Rational then = detail::utility_of_counts(counts, flipped(own), p);
            if (then > now) {
                current[static_cast<std::size_t>(v)] = flipped(own);
                view = Profile::from_strategies(g, current);
                trace.steps.push_back({g.node_id(v), own, flipped(own), potential(g, view, p)});
                changed = true;
            }
        }
    }
    trace.final = g.node_count() > 0 ? view : s0;
    trace.converged = true;
    return trace;
}

}  // namespace netcoord
