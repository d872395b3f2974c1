#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "extropy/errors.hpp"
#include "extropy/quadrature.hpp"

namespace extropy {

struct DistributionSpec;

struct Uniform {
    double a = 0.0, b = 1.0;
};

/// F(x) = 1 - (1 - a x)^b on (0, 1/a).
struct FiniteRange {
    double a = 1.0, b = 1.0;
};

/// F(x) = 1 - exp(-k x^h) on (0, inf).
struct Weibull {
    double k = 1.0, h = 1.0;
};

/// F(x) = 1 - 1/(1 + h x) on (0, inf).
struct FoldedCramer {
    double h = 1.0;
};

/// sf(x) = (k / (x + k))^h on (0, inf).
struct ParetoII {
    double k = 1.0, h = 1.0;
};

/// F(x) = (x / b)^c on [0, b].
struct PowerDist {
    double b = 1.0, c = 1.0;
};

struct Exponential {
    double lambda = 1.0;
};

struct FiniteMixture {
    std::vector<std::pair<double, DistributionSpec>> components;
};

struct DistributionSpec {
    std::variant<Uniform, FiniteRange, Weibull, FoldedCramer, ParetoII, PowerDist, Exponential,
                 FiniteMixture>
        family;
};

enum class Quantity { cdf, sf, pdf, quantile, hazard, reversed_hazard };

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Immutable lifetime distribution with resolved support bounds. All
/// evaluations are pure; values are safe to share across threads.
class Distribution {
public:
    explicit Distribution(DistributionSpec spec);

    const DistributionSpec& spec() const { return spec_; }
    double lower() const { return lower_; }
    double upper() const { return upper_; }
    bool bounded() const { return std::isfinite(upper_); }

    // Total on the real line: cdf clamps to 0/1 outside the support.
    double cdf(double x) const;
    double sf(double x) const;
    double pdf(double x) const;
    double quantile(double u) const;

    std::string describe() const;

private:
    DistributionSpec spec_;
    double lower_ = 0.0;
    double upper_ = kInf;
};

namespace detail {

inline void require(bool ok, const std::string& constraint) {
    if (!ok) throw Error(ErrorKind::invalid_parameter, constraint);
}

inline void validate_spec(const DistributionSpec& spec) {
    std::visit(
        [](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Uniform>) {
                require(std::isfinite(f.a) && std::isfinite(f.b), "Uniform requires finite a, b");
                require(f.a < f.b, "Uniform requires a < b");
                require(f.a >= 0.0, "Uniform requires a >= 0 (nonnegative support)");
            } else if constexpr (std::is_same_v<F, FiniteRange>) {
                require(f.a > 0.0, "FiniteRange requires a > 0");
                require(f.b > 0.0, "FiniteRange requires b > 0");
            } else if constexpr (std::is_same_v<F, Weibull>) {
                require(f.k > 0.0, "Weibull requires k > 0");
                require(f.h > 0.0, "Weibull requires h > 0");
            } else if constexpr (std::is_same_v<F, FoldedCramer>) {
                require(f.h > 0.0, "FoldedCramer requires h > 0");
            } else if constexpr (std::is_same_v<F, ParetoII>) {
                require(f.k > 0.0, "ParetoII requires k > 0");
                require(f.h > 0.0, "ParetoII requires h > 0");
            } else if constexpr (std::is_same_v<F, PowerDist>) {
                require(f.b > 0.0, "Power requires b > 0");
                require(f.c > 0.0, "Power requires c > 0");
            } else if constexpr (std::is_same_v<F, Exponential>) {
                require(f.lambda > 0.0, "Exponential requires lambda > 0");
            } else if constexpr (std::is_same_v<F, FiniteMixture>) {
                require(!f.components.empty(), "FiniteMixture requires at least one component");
                double total = 0.0;
                for (const auto& [p, sub] : f.components) {
                    require(p > 0.0, "FiniteMixture weights must be positive");
                    total += p;
                    validate_spec(sub);
                }
                require(std::fabs(total - 1.0) <= 1e-12,
                        "FiniteMixture weights must sum to 1 within 1e-12");
            }
        },
        spec.family);
}

// Normalizes mixture weights exactly so cdf + sf stays at 1 to rounding.
inline void normalize_mixtures(DistributionSpec& spec) {
    if (auto* mix = std::get_if<FiniteMixture>(&spec.family)) {
        double total = 0.0;
        for (const auto& [p, sub] : mix->components) total += p;
        for (auto& [p, sub] : mix->components) {
            p /= total;
            normalize_mixtures(sub);
        }
    }
}

inline std::pair<double, double> support_of(const DistributionSpec& spec) {
    return std::visit(
        [](const auto& f) -> std::pair<double, double> {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Uniform>) {
                return {f.a, f.b};
            } else if constexpr (std::is_same_v<F, FiniteRange>) {
                return {0.0, 1.0 / f.a};
            } else if constexpr (std::is_same_v<F, PowerDist>) {
                return {0.0, f.b};
            } else if constexpr (std::is_same_v<F, FiniteMixture>) {
                double lo = kInf, hi = -kInf;
                for (const auto& [p, sub] : f.components) {
                    auto [l, u] = support_of(sub);
                    lo = std::min(lo, l);
                    hi = std::max(hi, u);
                }
                return {lo, hi};
            } else {
                return {0.0, kInf};
            }
        },
        spec.family);
}

inline double sf_of(const DistributionSpec& spec, double x);
inline double cdf_of(const DistributionSpec& spec, double x);

// Survival in its natural closed form (no 1 - cdf cancellation); exact deep
// tails matter for hazard rates and tail integrals.
inline double sf_of(const DistributionSpec& spec, double x) {
    return std::visit(
        [&](const auto& f) -> double {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Uniform>) {
                if (x <= f.a) return 1.0;
                if (x >= f.b) return 0.0;
                return (f.b - x) / (f.b - f.a);
            } else if constexpr (std::is_same_v<F, FiniteRange>) {
                if (x <= 0.0) return 1.0;
                if (x >= 1.0 / f.a) return 0.0;
                return std::pow(1.0 - f.a * x, f.b);
            } else if constexpr (std::is_same_v<F, Weibull>) {
                if (x <= 0.0) return 1.0;
                return std::exp(-f.k * std::pow(x, f.h));
            } else if constexpr (std::is_same_v<F, FoldedCramer>) {
                if (x <= 0.0) return 1.0;
                return 1.0 / (1.0 + f.h * x);
            } else if constexpr (std::is_same_v<F, ParetoII>) {
                if (x <= 0.0) return 1.0;
                return std::pow(f.k / (x + f.k), f.h);
            } else if constexpr (std::is_same_v<F, PowerDist>) {
                return 1.0 - cdf_of(spec, x);
            } else if constexpr (std::is_same_v<F, Exponential>) {
                if (x <= 0.0) return 1.0;
                return std::exp(-f.lambda * x);
            } else {
                double acc = 0.0;
                for (const auto& [p, sub] : f.components) acc += p * sf_of(sub, x);
                return acc;
            }
        },
        spec.family);
}

inline double cdf_of(const DistributionSpec& spec, double x) {
    return std::visit(
        [&](const auto& f) -> double {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Uniform>) {
                if (x <= f.a) return 0.0;
                if (x >= f.b) return 1.0;
                return (x - f.a) / (f.b - f.a);
            } else if constexpr (std::is_same_v<F, PowerDist>) {
                if (x <= 0.0) return 0.0;
                if (x >= f.b) return 1.0;
                return std::pow(x / f.b, f.c);
            } else if constexpr (std::is_same_v<F, FiniteMixture>) {
                double acc = 0.0;
                for (const auto& [p, sub] : f.components) acc += p * cdf_of(sub, x);
                return acc;
            } else {
                return 1.0 - sf_of(spec, x);
            }
        },
        spec.family);
}

inline double pdf_of(const DistributionSpec& spec, double x) {
    return std::visit(
        [&](const auto& f) -> double {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Uniform>) {
                return (x < f.a || x > f.b) ? 0.0 : 1.0 / (f.b - f.a);
            } else if constexpr (std::is_same_v<F, FiniteRange>) {
                if (x < 0.0 || x > 1.0 / f.a) return 0.0;
                return f.a * f.b * std::pow(1.0 - f.a * x, f.b - 1.0);
            } else if constexpr (std::is_same_v<F, Weibull>) {
                if (x < 0.0) return 0.0;
                if (x == 0.0) return f.h < 1.0 ? kInf : (f.h == 1.0 ? f.k : 0.0);
                return f.k * f.h * std::pow(x, f.h - 1.0) * std::exp(-f.k * std::pow(x, f.h));
            } else if constexpr (std::is_same_v<F, FoldedCramer>) {
                if (x < 0.0) return 0.0;
                const double den = 1.0 + f.h * x;
                return f.h / (den * den);
            } else if constexpr (std::is_same_v<F, ParetoII>) {
                if (x < 0.0) return 0.0;
                return (f.h / f.k) * std::pow(f.k / (x + f.k), f.h + 1.0);
            } else if constexpr (std::is_same_v<F, PowerDist>) {
                if (x < 0.0 || x > f.b) return 0.0;
                if (x == 0.0) return f.c < 1.0 ? kInf : (f.c == 1.0 ? 1.0 / f.b : 0.0);
                return f.c * std::pow(x / f.b, f.c - 1.0) / f.b;
            } else if constexpr (std::is_same_v<F, Exponential>) {
                if (x < 0.0) return 0.0;
                return f.lambda * std::exp(-f.lambda * x);
            } else {
                double acc = 0.0;
                for (const auto& [p, sub] : f.components) acc += p * pdf_of(sub, x);
                return acc;
            }
        },
        spec.family);
}

inline std::string describe_spec(const DistributionSpec& spec) {
    return std::visit(
        [](const auto& f) -> std::string {
            using F = std::decay_t<decltype(f)>;
            auto num = [](double v) {
                std::string s = std::to_string(v);
                return s;
            };
            if constexpr (std::is_same_v<F, Uniform>) {
                return "uniform:a=" + num(f.a) + ",b=" + num(f.b);
            } else if constexpr (std::is_same_v<F, FiniteRange>) {
                return "finite-range:a=" + num(f.a) + ",b=" + num(f.b);
            } else if constexpr (std::is_same_v<F, Weibull>) {
                return "weibull:k=" + num(f.k) + ",h=" + num(f.h);
            } else if constexpr (std::is_same_v<F, FoldedCramer>) {
                return "folded-cramer:h=" + num(f.h);
            } else if constexpr (std::is_same_v<F, ParetoII>) {
                return "pareto2:k=" + num(f.k) + ",h=" + num(f.h);
            } else if constexpr (std::is_same_v<F, PowerDist>) {
                return "power:b=" + num(f.b) + ",c=" + num(f.c);
            } else if constexpr (std::is_same_v<F, Exponential>) {
                return "exponential:lambda=" + num(f.lambda);
            } else {
                std::string out = "mix:";
                bool first = true;
                for (const auto& [p, sub] : f.components) {
                    if (!first) out += "+";
                    out += num(p) + "*" + describe_spec(sub);
                    first = false;
                }
                return out;
            }
        },
        spec.family);
}

}  // namespace detail

inline Distribution::Distribution(DistributionSpec spec) : spec_(std::move(spec)) {
    detail::validate_spec(spec_);
    detail::normalize_mixtures(spec_);
    auto [lo, hi] = detail::support_of(spec_);
    lower_ = lo;
    upper_ = hi;
}

inline double Distribution::cdf(double x) const { return detail::cdf_of(spec_, x); }

inline double Distribution::sf(double x) const { return detail::sf_of(spec_, x); }

inline double Distribution::pdf(double x) const { return detail::pdf_of(spec_, x); }

inline double Distribution::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0))
        throw Error(ErrorKind::out_of_support, "quantile requires u in [0, 1]");
    if (u == 0.0) return lower_;
    if (u == 1.0) return upper_;
    return std::visit(
        [&](const auto& f) -> double {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Uniform>) {
                return f.a + u * (f.b - f.a);
            } else if constexpr (std::is_same_v<F, FiniteRange>) {
                return (1.0 - std::pow(1.0 - u, 1.0 / f.b)) / f.a;
            } else if constexpr (std::is_same_v<F, Weibull>) {
                return std::pow(-std::log1p(-u) / f.k, 1.0 / f.h);
            } else if constexpr (std::is_same_v<F, FoldedCramer>) {
                return u / (f.h * (1.0 - u));
            } else if constexpr (std::is_same_v<F, ParetoII>) {
                return f.k * (std::pow(1.0 - u, -1.0 / f.h) - 1.0);
            } else if constexpr (std::is_same_v<F, PowerDist>) {
                return f.b * std::pow(u, 1.0 / f.c);
            } else if constexpr (std::is_same_v<F, Exponential>) {
                return -std::log1p(-u) / f.lambda;
            } else {
                // Bisection on the mixture cdf; bracket the upper end first
                // when the support is unbounded.
                double lo = lower_;
                double hi = bounded() ? upper_ : std::max(1.0, lower_ + 1.0);
                if (!bounded()) {
                    while (cdf(hi) < u) hi = lo + 2.0 * (hi - lo);
                }
                for (int i = 0; i < 200; ++i) {
                    const double mid = 0.5 * (lo + hi);
                    if (mid <= lo || mid >= hi) break;
                    if (cdf(mid) < u)
                        lo = mid;
                    else
                        hi = mid;
                }
                return 0.5 * (lo + hi);
            }
        },
        spec_.family);
}

inline std::string Distribution::describe() const { return detail::describe_spec(spec_); }

inline Distribution make_distribution(const DistributionSpec& spec) { return Distribution(spec); }

/// Strict pointwise evaluation used by the CLI surface; rejects x outside the
/// support closure and degenerate hazard denominators.
inline double eval(const Distribution& dist, Quantity q, double x) {
    if (q == Quantity::quantile) {
        if (!(x > 0.0 && x < 1.0))
            throw Error(ErrorKind::out_of_support, "quantile argument must lie in (0, 1)");
        return dist.quantile(x);
    }
    if (!(x >= dist.lower() && x <= dist.upper()))
        throw Error(ErrorKind::out_of_support, "x outside the support of " + dist.describe());
    switch (q) {
        case Quantity::cdf: return dist.cdf(x);
        case Quantity::sf: return dist.sf(x);
        case Quantity::pdf: return dist.pdf(x);
        case Quantity::hazard: {
            const double s = dist.sf(x);
            if (!(s > 0.0))
                throw Error(ErrorKind::degenerate_denominator, "hazard undefined where sf(x) = 0");
            return dist.pdf(x) / s;
        }
        case Quantity::reversed_hazard: {
            const double c = dist.cdf(x);
            if (!(c > 0.0))
                throw Error(ErrorKind::degenerate_denominator,
                            "reversed hazard undefined where cdf(x) = 0");
            return dist.pdf(x) / c;
        }
        default: break;
    }
    throw Error(ErrorKind::invalid_parameter, "unknown quantity");
}

/// Mean residual life d(t) = E[X - t | X > t]. Closed forms where the family
/// admits one; low-noise quadrature otherwise.
inline double mean_residual_life(const Distribution& dist, double t,
                                 const QuadratureSettings& settings = {}) {
    const double s = dist.sf(t);
    if (!(s > 0.0))
        throw Error(ErrorKind::degenerate_denominator, "mean residual life requires sf(t) > 0");
    if (t < dist.lower()) t = dist.lower();

    const auto& fam = dist.spec().family;
    if (const auto* e = std::get_if<Exponential>(&fam)) return 1.0 / e->lambda;
    if (const auto* u = std::get_if<Uniform>(&fam)) return 0.5 * (u->b - std::max(t, u->a));
    if (const auto* p = std::get_if<ParetoII>(&fam)) {
        if (p->h <= 1.0)
            throw Error(ErrorKind::divergent_integral,
                        "ParetoII mean residual life requires h > 1");
        return (p->k + t) / (p->h - 1.0);
    }
    if (const auto* fr = std::get_if<FiniteRange>(&fam))
        return (1.0 - fr->a * t) / (fr->a * (fr->b + 1.0));
    if (std::get_if<FoldedCramer>(&fam))
        throw Error(ErrorKind::divergent_integral,
                    "FoldedCramer mean residual life diverges (harmonic survival tail)");
    if (const auto* mix = std::get_if<FiniteMixture>(&fam)) {
        for (const auto& [p, sub] : mix->components) {
            if (std::holds_alternative<FoldedCramer>(sub.family))
                throw Error(ErrorKind::divergent_integral,
                            "mixture component has divergent mean residual life");
            if (const auto* pp = std::get_if<ParetoII>(&sub.family); pp && pp->h <= 1.0)
                throw Error(ErrorKind::divergent_integral,
                            "mixture component has divergent mean residual life");
        }
    }

    auto integrand = [&](double x) { return dist.sf(x); };
    IntegralResult r = integrate(integrand, t, dist.upper(), settings);
    if (r.diverged) throw Error(ErrorKind::divergent_integral, r.failure_reason);
    if (!r.converged) throw Error(ErrorKind::not_converged, r.failure_reason);
    return r.value / s;
}

namespace detail {

inline double binomial(int n, int j) {
    double r = 1.0;
    for (int i = 1; i <= j; ++i) r *= static_cast<double>(n - j + i) / static_cast<double>(i);
    return r;
}

}  // namespace detail

/// P(X_{k:n} > x) = sum_{j<k} C(n,j) F^j (1-F)^{n-j}.
inline double order_statistic_sf(const Distribution& dist, int k, int n, double x) {
    if (k < 1 || n < 1 || k > n)
        throw Error(ErrorKind::invalid_index, "order statistic requires 1 <= k <= n");
    const double F = dist.cdf(x);
    const double S = dist.sf(x);
    double acc = 0.0;
    for (int j = 0; j < k; ++j)
        acc += detail::binomial(n, j) * std::pow(F, j) * std::pow(S, n - j);
    return std::min(1.0, std::max(0.0, acc));
}

}  // namespace extropy
