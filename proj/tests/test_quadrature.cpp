#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "extropy/power_functional.hpp"
#include "extropy/quadrature.hpp"
#include "extropy/rng.hpp"

using namespace extropy;

TEST_CASE("polynomials up to degree 12 integrate exactly on [0,1]") {
    UniformStream rng(5150);
    for (int deg = 0; deg <= 12; ++deg) {
        std::vector<double> coeff(deg + 1);
        for (auto& c : coeff) c = 2.0 * rng.next() - 1.0;
        auto poly = [&](double x) {
            double acc = 0.0;
            for (int j = deg; j >= 0; --j) acc = acc * x + coeff[j];
            return acc;
        };
        double exact = 0.0;
        for (int j = 0; j <= deg; ++j) exact += coeff[j] / (j + 1.0);
        auto r = integrate(poly, 0.0, 1.0);
        REQUIRE(r.converged);
        CHECK(std::fabs(r.value - exact) <= 1e-12);
    }
}

TEST_CASE("basic definite integrals") {
    auto r1 = integrate([](double x) { return x * x; }, 0.0, 1.0);
    REQUIRE(r1.converged);
    CHECK(std::fabs(r1.value - 1.0 / 3.0) <= 1e-12);

    auto r2 = integrate([](double x) { return std::exp(-2.0 * x); }, 0.0, kInf);
    REQUIRE(r2.converged);
    CHECK(r2.value == Catch::Approx(0.5).epsilon(1e-10));

    auto r3 = integrate([](double x) { return 1.0 / (1.0 + x); }, 0.0, kInf);
    CHECK(r3.diverged);
    CHECK_FALSE(r3.converged);

    // integrable endpoint singularity
    auto r4 = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    REQUIRE(r4.converged);
    CHECK(r4.value == Catch::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("settings are validated and degenerate intervals are empty") {
    QuadratureSettings bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, bad), Error);
    auto r = integrate([](double x) { return x; }, 1.0, 1.0);
    CHECK(r.converged);
    CHECK(r.value == 0.0);
}

TEST_CASE("power functional spot values") {
    auto w1 = WeightFunction::constant(1.0);
    auto r1 = integrate_power_functional(Distribution({Uniform{0.0, 1.0}}), w1, 2.0,
                                         FunctionalSide::survival, 0.0, 1.0);
    REQUIRE(r1.converged);
    CHECK(r1.value == Catch::Approx(1.0 / 3.0).epsilon(1e-10));

    auto r2 = integrate_power_functional(Distribution({ParetoII{1.0, 2.0}}), w1, 2.0,
                                         FunctionalSide::survival, 0.0, kInf);
    REQUIRE(r2.converged);
    CHECK(r2.value == Catch::Approx(1.0 / 3.0).epsilon(1e-9));

    auto r3 = integrate_power_functional(Distribution({FoldedCramer{1.0}}),
                                         WeightFunction::identity(), 2.0,
                                         FunctionalSide::survival, 0.0, kInf);
    CHECK(r3.diverged);
    CHECK_THAT(r3.failure_reason, Catch::Matchers::ContainsSubstring("FoldedCramer"));
}

TEST_CASE("survival functional is nonincreasing in the power") {
    auto w = WeightFunction::identity();
    const Distribution dist({Weibull{1.0, 2.0}});
    double prev = kInf;
    for (double p : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        auto r = integrate_power_functional(dist, w, p, FunctionalSide::survival, 0.0, kInf);
        REQUIRE(r.converged);
        CHECK(r.value <= prev + 1e-12);
        prev = r.value;
    }
}

namespace {

// Independent slow oracle: composite trapezoid with 10^6 + 1 nodes; linear
// spacing for light tails, log spacing for power tails.
double trapezoid_oracle(const Distribution& dist, const WeightFunction& w, double p) {
    auto f = [&](double x) { return weight_eval(w, x) * std::pow(dist.sf(x), p); };
    const int N = 1000000;
    const bool heavy = std::isinf(dist.upper()) &&
                       (std::holds_alternative<ParetoII>(dist.spec().family) ||
                        std::holds_alternative<FoldedCramer>(dist.spec().family));
    double lo = dist.lower(), hi;
    if (!std::isinf(dist.upper())) {
        hi = dist.upper();
    } else {
        hi = dist.quantile(1.0 - 1e-13);
    }
    double acc = 0.0;
    if (!heavy) {
        const double h = (hi - lo) / N;
        double prev = f(lo + 1e-300);
        for (int i = 1; i <= N; ++i) {
            const double x = lo + h * i;
            const double cur = f(x);
            acc += 0.5 * (prev + cur) * h;
            prev = cur;
        }
    } else {
        // head [0, x0] is nearly flat; one trapezoid suffices at x0 ~ 1e-9 scale
        const double x0 = dist.quantile(1e-9);
        acc += 0.5 * (f(1e-300) + f(x0)) * x0;
        const double step = std::log(hi / x0) / N;
        double prev = f(x0);
        double xprev = x0;
        for (int i = 1; i <= N; ++i) {
            const double x = x0 * std::exp(step * i);
            const double cur = f(x);
            acc += 0.5 * (prev + cur) * (x - xprev);
            prev = cur;
            xprev = x;
        }
    }
    return acc;
}

}  // namespace

TEST_CASE("agreement with a million-point trapezoid oracle on randomized cases") {
    UniformStream rng(31415);
    int done = 0;
    while (done < 20) {
        const int fam = static_cast<int>(rng.next() * 5);
        const int wk = static_cast<int>(rng.next() * 3);
        const double p = (rng.next() < 0.5) ? 2.0 : 4.0;
        const int m = wk == 0 ? 0 : (wk == 1 ? 1 : 2);
        WeightFunction w = wk == 0 ? WeightFunction::constant(1.0)
                                   : (wk == 1 ? WeightFunction::identity()
                                              : WeightFunction::power(2));
        DistributionSpec spec;
        switch (fam) {
            case 0: spec = {Uniform{rng.next(), 1.5 + rng.next()}}; break;
            case 1: spec = {PowerDist{0.5 + rng.next(), 0.5 + 2.0 * rng.next()}}; break;
            case 2: spec = {FiniteRange{0.5 + rng.next(), 0.8 + 2.0 * rng.next()}}; break;
            case 3: spec = {Weibull{0.5 + rng.next(), 0.8 + 1.5 * rng.next()}}; break;
            default: {
                // keep p*h within [m+3, 6] so truncation and curvature stay benign
                const double lo = (m + 3.0) / p, hi = 6.0 / p;
                spec = {ParetoII{0.5 + rng.next(), lo + (hi - lo) * rng.next()}};
                break;
            }
        }
        Distribution dist(spec);
        auto r = integrate_power_functional(dist, w, p, FunctionalSide::survival, dist.lower(),
                                            dist.upper());
        REQUIRE(r.converged);
        const double oracle = trapezoid_oracle(dist, w, p);
        CHECK(std::fabs(r.value - oracle) <= 1e-8 * std::max(std::fabs(oracle), 1e-8));
        ++done;
    }
}

TEST_CASE("cdf-side functional diverges on unbounded supports") {
    auto r = integrate_power_functional(Distribution({Exponential{1.0}}),
                                        WeightFunction::constant(1.0), 2.0, FunctionalSide::cdf,
                                        0.0, kInf);
    CHECK(r.diverged);
}
