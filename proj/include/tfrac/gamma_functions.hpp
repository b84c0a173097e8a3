#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tfrac {

namespace detail {

// Regularized lower incomplete gamma P(a,x) by power series (x < a+1).
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-17)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p_series: no convergence");
}

// Regularized upper incomplete gamma Q(a,x) by Lentz continued fraction (x >= a+1).
inline double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
    throw std::runtime_error("gamma_q_cf: no convergence");
}

}  // namespace detail

/// Regularized upper incomplete gamma Q(a,x) = Gamma(a,x)/Gamma(a), a > 0, x >= 0.
inline double upper_gamma_regularized(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("upper_gamma_regularized: a must be positive");
    if (x < 0.0) throw std::invalid_argument("upper_gamma_regularized: x must be nonnegative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_cf(a, x);
}

/// Unregularized upper incomplete gamma Gamma(a,x).
inline double upper_incomplete_gamma(double a, double x) {
    return upper_gamma_regularized(a, x) * std::tgamma(a);
}

}  // namespace tfrac
