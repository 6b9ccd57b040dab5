#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "netcoord/game.hpp"
#include "netcoord/params.hpp"
#include "netcoord/rational.hpp"

namespace netcoord {

struct BoundReport {
    Rational bound;           // alpha*(alpha+beta-2*gamma) / (alpha*beta - gamma^2)
    Rational corollary_bound; // alpha/beta + 1, the gamma = 0 value
    Rational all_b_ratio;     // alpha/beta, the gamma = beta value
    bool degenerate = false;  // alpha = beta = gamma; every profile has equal welfare
    Rational alpha, beta, gamma;
};

// Closed-form price-of-anarchy upper bound. The denominator vanishes only
// at alpha = beta = gamma, where all profiles are welfare-equal and the
// bound is reported as 1 with the degenerate flag set.
inline BoundReport poa_upper_bound(const Params& p) {
    BoundReport r;
    r.alpha = p.alpha();
    r.beta = p.beta();
    r.gamma = p.gamma();
    r.corollary_bound = p.alpha() / p.beta() + 1;
    r.all_b_ratio = p.alpha() / p.beta();
    Rational denom = p.alpha() * p.beta() - p.gamma() * p.gamma();
    if (denom == 0) {
        r.degenerate = true;
        r.bound = 1;
        return r;
    }
    r.bound = p.alpha() * (p.alpha() + p.beta() - 2 * p.gamma()) / denom;
    return r;
}

struct MonotonicityReport {
    std::size_t checks = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string describe_state(const EdgeState& n) {
    return "(" + format_rational(n.a_edges) + ", " + format_rational(n.b_edges) + ", " +
           format_rational(n.c_edges) + ")";
}

inline std::string describe_params(const Params& p) {
    return "(" + format_rational(p.alpha()) + ", " + format_rational(p.beta()) + ", " +
           format_rational(p.gamma()) + ")";
}

inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace detail

// Exact finite-difference verification of the quotient's direction of change
// per component and of the bound's decrease in gamma. Unit steps carry the
// exact derivative sign because the quotient is a ratio of affine forms.
inline MonotonicityReport monotonicity_report(const std::vector<Params>& params_grid,
                                              const std::vector<EdgeState>& state_grid) {
    if (params_grid.empty() || state_grid.empty())
        throw std::invalid_argument("monotonicity_report: grids must be nonempty");
    MonotonicityReport report;
    for (const Params& p : params_grid) {
        for (const EdgeState& n : state_grid) {
            Rational base = quotient(n, p);  // throws ZeroWelfare on bad grid entries

            ++report.checks;
            if (quotient({n.a_edges + 1, n.b_edges, n.c_edges}, p) > base)
                report.violations.push_back("quotient increased in a_edges at " + detail::describe_state(n) +
                                            " with params " + detail::describe_params(p));
            ++report.checks;
            if (quotient({n.a_edges, n.b_edges, n.c_edges + 1}, p) < base)
                report.violations.push_back("quotient decreased in c_edges at " + detail::describe_state(n) +
                                            " with params " + detail::describe_params(p));
            ++report.checks;
            Rational diff = quotient({n.a_edges, n.b_edges + 1, n.c_edges}, p) - base;
            Rational predictor = n.a_edges * (p.alpha() - p.beta()) + n.c_edges * (p.gamma() - p.beta());
            if (detail::sign(diff) != detail::sign(predictor))
                report.violations.push_back("b_edges difference sign mismatch at " + detail::describe_state(n) +
                                            " with params " + detail::describe_params(p));
        }
    }

    std::map<std::pair<Rational, Rational>, std::vector<std::pair<Rational, Rational>>> by_alpha_beta;
    for (const Params& p : params_grid)
        by_alpha_beta[{p.alpha(), p.beta()}].emplace_back(p.gamma(), poa_upper_bound(p).bound);
    for (auto& [key, points] : by_alpha_beta) {
        std::sort(points.begin(), points.end());
        for (std::size_t i = 1; i < points.size(); ++i) {
            ++report.checks;
            if (points[i].second > points[i - 1].second)
                report.violations.push_back("bound increased from gamma = " + format_rational(points[i - 1].first) +
                                            " to gamma = " + format_rational(points[i].first) + " at alpha = " +
                                            format_rational(key.first) + ", beta = " + format_rational(key.second));
        }
    }
    return report;
}

}  // namespace netcoord
