#pragma once

#include <cmath>
#include <stdexcept>

namespace tfrac {

/// Order and tempering rate of the tempered fractional derivative /
/// tempered stable subordinator. beta must lie strictly inside (0,1);
/// lambda = 0 is the untempered special case.
class TemperedParams {
public:
    TemperedParams(double beta, double lambda) : beta_(beta), lambda_(lambda) {
        if (!(beta > 0.0) || !(beta < 1.0))
            throw std::invalid_argument("TemperedParams: beta must be in (0,1)");
        if (!(lambda >= 0.0))
            throw std::invalid_argument("TemperedParams: lambda must be >= 0");
    }

    double beta() const { return beta_; }
    double lambda() const { return lambda_; }

    /// lambda^beta, the constant subtracted by the Laplace symbol.
    double lambda_pow_beta() const { return lambda_ == 0.0 ? 0.0 : std::pow(lambda_, beta_); }

private:
    double beta_;
    double lambda_;
};

/// One evaluation point of the relaxation function: spatial eigenvalue mu
/// and time t for given (beta, lambda).
struct RelaxationQuery {
    TemperedParams params;
    double mu;
    double t;

    RelaxationQuery(TemperedParams p, double mu_, double t_) : params(p), mu(mu_), t(t_) {
        if (!(mu > 0.0)) throw std::invalid_argument("RelaxationQuery: mu must be positive");
        if (!(t >= 0.0)) throw std::invalid_argument("RelaxationQuery: t must be nonnegative");
    }

    /// True when mu coincides with lambda^beta, the point excluded by the
    /// integral-representation theorem. Values there are computed by
    /// continuity but flagged in validation reports.
    bool outside_theorem() const {
        const double lb = params.lambda_pow_beta();
        return std::abs(mu - lb) <= 1e-12 * std::max(1.0, std::max(mu, lb));
    }
};

}  // namespace tfrac
