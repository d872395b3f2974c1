#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "extropy/errors.hpp"

namespace extropy {

struct QuadratureSettings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    double tail_mass_eps = 1e-12;  // quantile truncation level for infinite upper limits

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(tail_mass_eps > 0.0))
            throw Error(ErrorKind::invalid_parameter, "quadrature tolerances must be > 0");
        if (max_subdivisions < 1)
            throw Error(ErrorKind::invalid_parameter, "max_subdivisions must be >= 1");
    }
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
    bool diverged = false;
    std::string failure_reason;  // set when diverged or not converged
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes on [-1, 1]: {abscissa, gauss weight, kronrod weight}.
// Gauss weight 0 marks Kronrod-only nodes.
inline constexpr double g7k15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class Func>
double panel_g7k15(const Func& f, double a, double b, double& err, int& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double g7 = g7k15[0][1] * f0;
    double k15 = g7k15[0][2] * f0;
    evals += 1;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * g7k15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += g7k15[i][1] * fi;
        k15 += g7k15[i][2] * fi;
        evals += 2;
    }
    g7 *= half;
    k15 *= half;

    // Conservative error model: the raw embedded difference. The usual
    // (200|G-K|)^{3/2} acceleration under-reports near endpoint
    // singularities, which these integrands routinely have.
    err = std::fabs(g7 - k15);
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    return k15;
}

struct Panel {
    double a, b, value, error;
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration over a finite interval [a, b].
/// Endpoints are never evaluated, so integrable endpoint singularities are
/// handled by subdivision refinement.
template <class Func>
IntegralResult integrate_finite(const Func& f, double a, double b,
                                const QuadratureSettings& settings = {}) {
    settings.validate();
    IntegralResult out;
    if (!(b > a)) {
        out.converged = true;
        return out;
    }

    std::vector<detail::Panel> heap;
    auto by_error = [](const detail::Panel& x, const detail::Panel& y) { return x.error < y.error; };

    detail::Panel root{a, b, 0.0, 0.0};
    root.value = detail::panel_g7k15(f, a, b, root.error, out.evaluations);
    heap.push_back(root);

    double total = root.value;
    double total_err = root.error;
    int splits = 0;
    while (splits < settings.max_subdivisions) {
        const double tol = std::max(settings.abs_tol, settings.rel_tol * std::fabs(total));
        if (total_err <= tol) break;

        std::pop_heap(heap.begin(), heap.end(), by_error);
        detail::Panel worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval exhausted at machine resolution; keep its contribution.
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), by_error);
            break;
        }
        detail::Panel left{worst.a, mid, 0.0, 0.0};
        detail::Panel right{mid, worst.b, 0.0, 0.0};
        left.value = detail::panel_g7k15(f, left.a, left.b, left.error, out.evaluations);
        right.value = detail::panel_g7k15(f, right.a, right.b, right.error, out.evaluations);

        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);
        ++splits;

        if (std::fabs(total) > 1e15) {
            out.value = total;
            out.error_estimate = total_err;
            out.diverged = true;
            out.failure_reason = "partial sums exceed 1e15";
            return out;
        }
    }

    // Recompute the error sum from the heap to avoid drift from incremental updates.
    total = 0.0;
    total_err = 0.0;
    for (const auto& p : heap) {
        total += p.value;
        total_err += p.error;
    }
    out.value = total;
    out.error_estimate = total_err;
    out.converged = total_err <= std::max(settings.abs_tol, settings.rel_tol * std::fabs(total));
    if (!out.converged) out.failure_reason = "error bound not met within max_subdivisions";
    return out;
}

/// Integration over [a, infinity) by doubling segments [a+2^j-1, a+2^{j+1}-1].
/// Divergence is flagged when segment contributions stop decaying (harmonic or
/// worse tails) or the running sum grows past 1e15 monotonically.
template <class Func>
IntegralResult integrate_semi_infinite(const Func& f, double a,
                                       const QuadratureSettings& settings = {}) {
    settings.validate();
    IntegralResult out;
    QuadratureSettings seg = settings;
    seg.max_subdivisions = std::max(50, settings.max_subdivisions / 10);

    double sum = 0.0;
    double err = 0.0;
    double prev_contrib = std::numeric_limits<double>::infinity();
    int non_decaying = 0;
    int small_in_a_row = 0;

    const int max_segments = 220;  // reaches x - a ~ 2^220
    double lo = a;
    for (int j = 0; j < max_segments; ++j) {
        const double hi = a + std::ldexp(1.0, j + 1) - 1.0;
        IntegralResult part = integrate_finite(f, lo, hi, seg);
        out.evaluations += part.evaluations;
        sum += part.value;
        err += part.error_estimate;
        lo = hi;

        const double contrib = std::fabs(part.value);
        const double tol = std::max(settings.abs_tol, settings.rel_tol * std::fabs(sum));

        if (std::fabs(sum) > 1e15 && contrib >= prev_contrib * 0.999) {
            out.value = sum;
            out.error_estimate = err;
            out.diverged = true;
            out.failure_reason = "partial sums exceed 1e15 monotonically";
            return out;
        }
        if (contrib > tol && contrib >= prev_contrib * 0.999) {
            if (++non_decaying >= 6) {
                out.value = sum;
                out.error_estimate = err;
                out.diverged = true;
                out.failure_reason = "tail contributions are non-decreasing across doubling segments";
                return out;
            }
        } else {
            non_decaying = 0;
        }

        if (contrib <= 0.25 * tol) {
            if (++small_in_a_row >= 2) {
                // Geometric tail allowance for what was truncated.
                const double ratio = prev_contrib > 0 ? std::min(contrib / prev_contrib, 0.9) : 0.0;
                err += contrib * ratio / (1.0 - ratio);
                out.value = sum;
                out.error_estimate = err;
                out.converged = err <= std::max(settings.abs_tol, 10.0 * settings.rel_tol * std::fabs(sum));
                if (!out.converged) out.failure_reason = "segment error bound not met";
                return out;
            }
        } else {
            small_in_a_row = 0;
        }
        prev_contrib = contrib;
    }

    out.value = sum;
    out.error_estimate = err;
    out.converged = false;
    out.failure_reason = "tail did not resolve within segment budget";
    return out;
}

/// Adaptive integration of f over (a, b); b may be +infinity.
template <class Func>
IntegralResult integrate(const Func& f, double a, double b,
                         const QuadratureSettings& settings = {}) {
    if (std::isinf(b)) return integrate_semi_infinite(f, a, settings);
    return integrate_finite(f, a, b, settings);
}

}  // namespace extropy
