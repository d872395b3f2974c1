#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "extropy/distributions.hpp"
#include "extropy/quadrature.hpp"
#include "extropy/weights.hpp"

namespace extropy {

enum class FunctionalSide { survival, cdf };

namespace detail {

inline bool weight_is_zero(const WeightFunction& w) {
    if (const auto* c = std::get_if<ConstantWeight>(&w.kind)) return c->w0 == 0.0;
    if (const auto* t = std::get_if<TransformedWeight>(&w.kind)) return weight_is_zero(*t->base);
    return false;
}

// Regular-variation bookkeeping for the survival tail on (x0, inf):
// the integrand w(x) sf(x)^p decays like x^{deg(w)} times the family tail,
// and converges only when the combined exponent drops below -1.
inline std::optional<std::string> survival_tail_divergence(const DistributionSpec& spec,
                                                           const WeightFunction& w, double p) {
    const int m = weight_tail_degree(w);
    std::ostringstream msg;
    if (const auto* pareto = std::get_if<ParetoII>(&spec.family)) {
        if (!(p * pareto->h > m + 1)) {
            msg << "ParetoII: requires p*h > m+1 (p=" << p << ", h=" << pareto->h
                << ", weight degree m=" << m << ")";
            return msg.str();
        }
        return std::nullopt;
    }
    if (std::holds_alternative<FoldedCramer>(spec.family)) {
        if (!(p > m + 1)) {
            msg << "FoldedCramer: requires p > m+1 (p=" << p << ", weight degree m=" << m << ")";
            return msg.str();
        }
        return std::nullopt;
    }
    if (const auto* mix = std::get_if<FiniteMixture>(&spec.family)) {
        for (const auto& [prob, sub] : mix->components)
            if (auto r = survival_tail_divergence(sub, w, p)) return r;
        return std::nullopt;
    }
    // Weibull / Exponential decay faster than any power; bounded supports have
    // no tail.
    return std::nullopt;
}

// Change of variable u = sf(x): \int_{t}^{upper} w sf^p dx becomes
// \int_0^{sf(t)} w(Q(1-u)) u^p / pdf(Q(1-u)) du. A second substitution
// u = v^2 softens the u -> 0 power singularity that heavy tails leave behind
// (exponent q > -1 becomes 2q + 1 > -1, bounded once q >= -1/2).
template <class Shape>
IntegralResult integrate_survival_by_quantile(const Distribution& dist, const WeightFunction& w,
                                              const Shape& power_of_u, double u_hi,
                                              const QuadratureSettings& settings) {
    auto integrand = [&](double v) {
        const double u = v * v;
        const double x = dist.quantile(1.0 - u);
        const double f = dist.pdf(x);
        if (!(f > 0.0) || !std::isfinite(f)) return 0.0;
        return 2.0 * v * weight_eval(w, x) * power_of_u(u) / f;
    };
    return integrate_finite(integrand, 0.0, std::sqrt(u_hi), settings);
}

}  // namespace detail

/// Computes \int w(x) G(x)^p dx over [t_lo, t_hi] with G = sf or cdf.
/// Survival-side integrals over infinite supports are pre-checked
/// analytically and reported as diverged (never integrated) when the tail
/// exponent cannot beat -1.
inline IntegralResult integrate_power_functional(const Distribution& dist, const WeightFunction& w,
                                                 double p, FunctionalSide side, double t_lo,
                                                 double t_hi,
                                                 const QuadratureSettings& settings = {}) {
    if (!(p > 0.0)) throw Error(ErrorKind::invalid_parameter, "power functional requires p > 0");
    t_lo = std::max(t_lo, dist.lower());
    t_hi = std::min(t_hi, dist.upper());
    if (!(t_lo <= t_hi))
        throw Error(ErrorKind::invalid_parameter, "empty integration interval");

    IntegralResult out;
    if (detail::weight_is_zero(w)) {
        out.converged = true;
        return out;
    }

    const bool infinite = std::isinf(t_hi);
    if (infinite && side == FunctionalSide::cdf) {
        out.diverged = true;
        out.failure_reason = "cdf-power integrand does not vanish on an unbounded support";
        return out;
    }
    if (infinite) {
        if (auto reason = detail::survival_tail_divergence(dist.spec(), w, p)) {
            out.diverged = true;
            out.failure_reason = *reason;
            return out;
        }
        if (std::holds_alternative<FiniteMixture>(dist.spec().family)) {
            // Mixture quantiles are iterative; integrate in x-space instead.
            auto integrand = [&](double x) { return weight_eval(w, x) * std::pow(dist.sf(x), p); };
            return integrate_semi_infinite(integrand, t_lo, settings);
        }
        auto upow = [p](double u) { return std::pow(u, p); };
        return detail::integrate_survival_by_quantile(dist, w, upow, dist.sf(t_lo), settings);
    }

    auto integrand = [&](double x) {
        const double g = side == FunctionalSide::survival ? dist.sf(x) : dist.cdf(x);
        if (g <= 0.0) return 0.0;
        return weight_eval(w, x) * std::pow(g, p);
    };
    return integrate_finite(integrand, t_lo, t_hi, settings);
}

}  // namespace extropy
