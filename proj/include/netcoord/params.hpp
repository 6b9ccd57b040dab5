#pragma once

#include "netcoord/errors.hpp"
#include "netcoord/graph.hpp"
#include "netcoord/rational.hpp"

namespace netcoord {

// Payoff matrix entries: coordinating on A pays alpha, on B pays beta,
// a mixed edge pays gamma. Valid iff 0 <= gamma <= beta <= alpha and beta > 0.
class Params {
public:
    static Params validate(Rational alpha, Rational beta, Rational gamma) {
        if (!(beta > 0))
            throw Error(ErrorCode::InvalidParams, "beta > 0 violated (beta = " + format_rational(beta) + ")");
        if (!(beta <= alpha))
            throw Error(ErrorCode::InvalidParams, "beta <= alpha violated (beta = " + format_rational(beta) +
                                                      ", alpha = " + format_rational(alpha) + ")");
        if (!(gamma >= 0))
            throw Error(ErrorCode::InvalidParams, "gamma >= 0 violated (gamma = " + format_rational(gamma) + ")");
        if (!(gamma <= beta))
            throw Error(ErrorCode::InvalidParams, "gamma <= beta violated (gamma = " + format_rational(gamma) +
                                                      ", beta = " + format_rational(beta) + ")");
        return Params(std::move(alpha), std::move(beta), std::move(gamma));
    }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const Rational& gamma() const { return gamma_; }

    // Payoff one endpoint of an edge receives given the two endpoint strategies.
    const Rational& edge_payoff(Strategy a, Strategy b) const {
        if (a != b) return gamma_;
        return a == Strategy::A ? alpha_ : beta_;
    }

    bool operator==(const Params&) const = default;

private:
    Params(Rational alpha, Rational beta, Rational gamma)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {}

    Rational alpha_;
    Rational beta_;
    Rational gamma_;
};

}  // namespace netcoord
