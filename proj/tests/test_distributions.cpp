#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "extropy/distributions.hpp"
#include "extropy/rng.hpp"

using namespace extropy;

namespace {

std::vector<DistributionSpec> catalog() {
    FiniteMixture mix;
    mix.components.push_back({0.4, DistributionSpec{Uniform{0.0, 1.0}}});
    mix.components.push_back({0.6, DistributionSpec{PowerDist{2.0, 3.0}}});
    return {
        {Uniform{0.0, 1.0}},  {Uniform{2.0, 3.0}},   {FiniteRange{2.0, 3.0}},
        {Weibull{1.0, 2.0}},  {Weibull{0.5, 0.7}},   {FoldedCramer{1.5}},
        {ParetoII{1.0, 2.0}}, {PowerDist{1.0, 2.0}}, {Exponential{2.0}},
        {mix},
    };
}

}  // namespace

TEST_CASE("construction resolves supports") {
    CHECK(Distribution({Uniform{0.0, 1.0}}).lower() == 0.0);
    CHECK(Distribution({Uniform{0.0, 1.0}}).upper() == 1.0);
    CHECK(Distribution({ParetoII{1.0, 2.0}}).upper() == kInf);
    CHECK(Distribution({FiniteRange{2.0, 3.0}}).upper() == 0.5);
    CHECK(Distribution({PowerDist{2.5, 1.0}}).upper() == 2.5);
}

TEST_CASE("construction rejects bad parameters by name") {
    CHECK_THROWS_WITH(Distribution({Uniform{1.0, 1.0}}),
                      Catch::Matchers::ContainsSubstring("a < b"));
    CHECK_THROWS_WITH(Distribution({Uniform{-0.5, 1.0}}),
                      Catch::Matchers::ContainsSubstring("a >= 0"));
    CHECK_THROWS_AS(Distribution({Weibull{0.0, 1.0}}), Error);
    CHECK_THROWS_AS(Distribution({ParetoII{1.0, -2.0}}), Error);
    FiniteMixture bad;
    bad.components.push_back({0.5, DistributionSpec{Uniform{0.0, 1.0}}});
    bad.components.push_back({0.6, DistributionSpec{Uniform{0.0, 1.0}}});
    CHECK_THROWS_WITH(Distribution({bad}), Catch::Matchers::ContainsSubstring("sum to 1"));
}

TEST_CASE("pointwise evaluation examples") {
    const Distribution exp1({Exponential{1.0}});
    CHECK(eval(exp1, Quantity::hazard, 3.7) == Catch::Approx(1.0).margin(1e-14));

    const Distribution pareto({ParetoII{1.0, 2.0}});
    CHECK(eval(pareto, Quantity::sf, 1.0) == Catch::Approx(0.25).margin(1e-15));

    const Distribution power({PowerDist{1.0, 2.0}});
    CHECK(eval(power, Quantity::reversed_hazard, 0.5) == Catch::Approx(4.0).margin(1e-12));

    CHECK_THROWS_AS(eval(power, Quantity::pdf, 1.5), Error);  // outside support
    CHECK_THROWS_AS(eval(power, Quantity::reversed_hazard, 0.0), Error);
    const Distribution uni({Uniform{0.0, 1.0}});
    CHECK_THROWS_AS(eval(uni, Quantity::hazard, 1.0), Error);  // sf = 0
    CHECK_THROWS_AS(eval(uni, Quantity::quantile, 1.5), Error);
}

TEST_CASE("cdf + sf = 1 across the catalog") {
    for (const auto& spec : catalog()) {
        Distribution dist(spec);
        UniformStream rng(2024);
        for (int i = 0; i < 1000; ++i) {
            const double x = dist.quantile(rng.next());
            CHECK(std::fabs(dist.cdf(x) + dist.sf(x) - 1.0) <= 1e-14);
        }
    }
}

TEST_CASE("quantile inverts the cdf on the interior") {
    for (const auto& spec : catalog()) {
        Distribution dist(spec);
        UniformStream rng(77);
        for (int i = 0; i < 200; ++i) {
            const double u = 0.001 + 0.998 * rng.next();
            const double x = dist.quantile(u);
            const double back = dist.quantile(dist.cdf(x));
            CHECK(std::fabs(back - x) <= 1e-10 * std::max(1e-10, std::fabs(x)));
        }
    }
}

TEST_CASE("order statistic survival: binomial tail values") {
    const Distribution uni({Uniform{0.0, 1.0}});
    CHECK(order_statistic_sf(uni, 1, 3, 0.5) == Catch::Approx(0.125).margin(1e-15));
    CHECK(order_statistic_sf(uni, 3, 3, 0.5) == Catch::Approx(0.875).margin(1e-15));
    CHECK(order_statistic_sf(uni, 2, 3, 0.5) == Catch::Approx(0.5).margin(1e-15));
    CHECK_THROWS_AS(order_statistic_sf(uni, 0, 3, 0.5), Error);
    CHECK_THROWS_AS(order_statistic_sf(uni, 4, 3, 0.5), Error);
}

TEST_CASE("order statistic survival is monotone in x and k") {
    const Distribution dist({Weibull{1.0, 2.0}});
    const int n = 5;
    for (int k = 1; k <= n; ++k) {
        double prev = 1.0;
        for (double x = 0.1; x < 3.0; x += 0.1) {
            const double s = order_statistic_sf(dist, k, n, x);
            CHECK(s <= prev + 1e-14);
            prev = s;
            if (k > 1) CHECK(s >= order_statistic_sf(dist, k - 1, n, x) - 1e-14);
        }
    }
}

TEST_CASE("mean residual life closed forms and divergence") {
    CHECK(mean_residual_life(Distribution({Exponential{2.0}}), 5.0) ==
          Catch::Approx(0.5).margin(1e-14));
    CHECK(mean_residual_life(Distribution({ParetoII{1.0, 2.0}}), 1.0) ==
          Catch::Approx(2.0).margin(1e-12));
    CHECK(mean_residual_life(Distribution({Uniform{0.0, 2.0}}), 0.5) ==
          Catch::Approx(0.75).margin(1e-14));
    CHECK_THROWS_AS(mean_residual_life(Distribution({ParetoII{1.0, 1.0}}), 0.0), Error);
    CHECK_THROWS_AS(mean_residual_life(Distribution({FoldedCramer{1.0}}), 1.0), Error);

    // exponential is memoryless: constant over a grid
    const Distribution exp1({Exponential{1.0}});
    for (double t = 0.0; t < 5.0; t += 0.5)
        CHECK(std::fabs(mean_residual_life(exp1, t) - 1.0) <= 1e-10);

    // closed forms agree with direct quadrature of the survival tail
    for (const auto& spec :
         std::vector<DistributionSpec>{{ParetoII{2.0, 3.0}}, {FiniteRange{1.0, 2.0}}}) {
        Distribution dist(spec);
        for (double q : {0.2, 0.5, 0.8}) {
            const double t = dist.quantile(q);
            auto tail = integrate([&](double x) { return dist.sf(x); }, t, dist.upper());
            REQUIRE(tail.converged);
            CHECK(mean_residual_life(dist, t) ==
                  Catch::Approx(tail.value / dist.sf(t)).epsilon(1e-9));
        }
    }

    // quadrature route for the weibull family
    const Distribution wei({Weibull{1.0, 2.0}});
    auto tail = integrate([&](double x) { return wei.sf(x); }, 0.5, kInf);
    REQUIRE(tail.converged);
    CHECK(mean_residual_life(wei, 0.5) == Catch::Approx(tail.value / wei.sf(0.5)).epsilon(1e-9));

    CHECK_THROWS_AS(mean_residual_life(Distribution({Uniform{0.0, 1.0}}), 1.0), Error);
}

TEST_CASE("mixtures combine convexly and normalize weights") {
    FiniteMixture mix;
    mix.components.push_back({0.25, DistributionSpec{Uniform{0.0, 1.0}}});
    mix.components.push_back({0.75, DistributionSpec{Uniform{0.0, 2.0}}});
    Distribution dist({mix});
    const Distribution a({Uniform{0.0, 1.0}}), b({Uniform{0.0, 2.0}});
    for (double x : {0.2, 0.7, 1.3, 1.9}) {
        CHECK(dist.cdf(x) == Catch::Approx(0.25 * a.cdf(x) + 0.75 * b.cdf(x)).margin(1e-14));
        CHECK(dist.pdf(x) == Catch::Approx(0.25 * a.pdf(x) + 0.75 * b.pdf(x)).margin(1e-14));
    }
    CHECK(dist.lower() == 0.0);
    CHECK(dist.upper() == 2.0);
}
