#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

namespace tfrac {

/// Outcome of a numerical integration.
struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;     ///< estimated absolute error
    int evaluations = 0;
    bool converged = false;
};

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_segments = 4000;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1] (positive half).
inline constexpr double kK15Nodes[8] = {
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};
inline constexpr double kK15Weights[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};
// Gauss-7 weights aligned with the even-index Kronrod nodes (0,2,4,6).
inline constexpr double kG7Weights[4] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
};

struct Segment {
    double a, b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

// Single G7K15 panel with a QUADPACK-style error estimate.
template <class F>
Segment gk15_panel(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    fv[7] = f(center);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kK15Nodes[i];
        fv[7 - i] = f(center - dx);
        fv[7 + i] = f(center + dx);
    }

    double kronrod = kK15Weights[0] * fv[7];
    double gauss = kG7Weights[0] * fv[7];
    for (int i = 1; i < 8; ++i) {
        kronrod += kK15Weights[i] * (fv[7 - i] + fv[7 + i]);
        if (i % 2 == 0) gauss += kG7Weights[i / 2] * (fv[7 - i] + fv[7 + i]);
    }
    kronrod *= half;
    gauss *= half;

    // resasc: Kronrod integral of |f - mean|, used to rescale the raw
    // |K - G| difference the way QUADPACK does.
    const double mean = kronrod / (b - a);
    double resasc = kK15Weights[0] * std::abs(fv[7] - mean);
    for (int i = 1; i < 8; ++i)
        resasc += kK15Weights[i] * (std::abs(fv[7 - i] - mean) + std::abs(fv[7 + i] - mean));
    resasc *= std::abs(half);

    double err = std::abs(kronrod - gauss);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    double resabs = 0.0;
    for (int i = 0; i < 15; ++i) resabs += std::abs(fv[i]);
    resabs *= std::abs(half) * 0.13;  // rough scale only
    err = std::max(err, eps50 * resabs);
    return {a, b, kronrod, err};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration over the segments delimited by
/// `points` (sorted, at least two entries). The segment with the largest
/// error estimate is bisected until the global tolerance is met.
template <class F>
QuadratureResult integrate_segments(F&& f, std::span<const double> points,
                                    const QuadratureOptions& opts = {}) {
    if (points.size() < 2) throw std::invalid_argument("integrate: need at least two breakpoints");
    std::priority_queue<detail::Segment> heap;
    double total = 0.0, total_err = 0.0;
    int evals = 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i] < points[i + 1]))
            throw std::invalid_argument("integrate: breakpoints must be strictly increasing");
        auto seg = detail::gk15_panel(f, points[i], points[i + 1]);
        evals += 15;
        total += seg.value;
        total_err += seg.error;
        heap.push(seg);
    }
    int n_segments = static_cast<int>(points.size()) - 1;
    while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) &&
           n_segments < opts.max_segments) {
        auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // cannot split further
            total_err -= worst.error;
            continue;
        }
        auto left = detail::gk15_panel(f, worst.a, mid);
        auto right = detail::gk15_panel(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n_segments;
    }
    const bool ok = total_err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    return {total, total_err, evals, ok};
}

template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
    const double pts[2] = {a, b};
    return integrate_segments(f, pts, opts);
}

template <class F>
QuadratureResult integrate(F&& f, std::initializer_list<double> points,
                           const QuadratureOptions& opts = {}) {
    std::vector<double> pts(points);
    return integrate_segments(f, std::span<const double>(pts), opts);
}

/// Integrate f over [a, inf) for integrands that decay at least
/// exponentially on the scale `decay_scale`: successive windows of
/// geometrically growing width are integrated until two consecutive
/// windows contribute less than a tenth of the tolerance.
template <class F>
QuadratureResult integrate_exp_tail(F&& f, double a, double decay_scale,
                                    const QuadratureOptions& opts = {}) {
    if (!(decay_scale > 0.0)) throw std::invalid_argument("integrate_exp_tail: bad decay scale");
    QuadratureResult acc;
    acc.converged = true;
    double x = a;
    double w = 5.0 * decay_scale;
    int quiet = 0;
    for (int k = 0; k < 120; ++k) {
        QuadratureOptions wopts = opts;
        wopts.abs_tol = 0.25 * std::max(opts.abs_tol, opts.rel_tol * std::abs(acc.value));
        auto win = integrate(f, x, x + w, wopts);
        acc.value += win.value;
        acc.error += win.error;
        acc.evaluations += win.evaluations;
        acc.converged = acc.converged && win.converged;
        x += w;
        const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(acc.value));
        quiet = (std::abs(win.value) <= 0.1 * tol) ? quiet + 1 : 0;
        if (quiet >= 2) return acc;
        if (k >= 8) w *= 2.0;
    }
    acc.converged = false;
    return acc;
}

}  // namespace tfrac
