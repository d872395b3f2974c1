#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "extropy/distributions.hpp"
#include "extropy/empirical.hpp"
#include "extropy/rng.hpp"

namespace extropy {

/// Monte Carlo estimate with a batch-means standard error.
struct McEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    int replicates = 0;
    std::uint64_t seed = 0;
};

inline std::vector<double> sample_iid(const Distribution& dist, int m, std::uint64_t seed) {
    UniformStream rng(seed);
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i) out[i] = dist.quantile(rng.next());
    return out;
}

/// m independent draws of X_{k:n} by inverse transform: sort n uniforms, keep
/// the k-th, map through the quantile.
inline Sample sample_order_statistic(const Distribution& dist, int k, int n, int m,
                                     std::uint64_t seed) {
    if (k < 1 || n < 1 || k > n)
        throw Error(ErrorKind::invalid_index, "order statistic requires 1 <= k <= n");
    if (m < 2) throw Error(ErrorKind::too_few_observations, "need at least 2 draws");
    UniformStream rng(seed);
    std::vector<double> u(n);
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) u[j] = rng.next();
        std::nth_element(u.begin(), u.begin() + (k - 1), u.end());
        out[i] = dist.quantile(u[k - 1]);
    }
    std::sort(out.begin(), out.end());
    return Sample{out};
}

namespace detail {

constexpr int kMcBatches = 10;

template <class DrawBatch>
McEstimate mc_from_batches(int m, std::uint64_t seed, const DrawBatch& draw_batch,
                           EstimatorKind kind, const WeightFunction& w, int n) {
    const int per_batch = m / kMcBatches;
    std::vector<double> pooled;
    pooled.reserve(static_cast<std::size_t>(per_batch) * kMcBatches);
    std::vector<double> batch_stats(kMcBatches);
    for (int b = 0; b < kMcBatches; ++b) {
        std::vector<double> batch = draw_batch(per_batch, seed + static_cast<std::uint64_t>(b));
        std::sort(batch.begin(), batch.end());
        batch_stats[b] = empirical_measure(Sample{batch}, kind, w, n).signed_value;
        pooled.insert(pooled.end(), batch.begin(), batch.end());
    }
    std::sort(pooled.begin(), pooled.end());

    McEstimate est;
    est.value = empirical_measure(Sample{pooled}, kind, w, n).signed_value;
    double mean = 0.0;
    for (double s : batch_stats) mean += s;
    mean /= kMcBatches;
    double var = 0.0;
    for (double s : batch_stats) var += (s - mean) * (s - mean);
    var /= (kMcBatches - 1);
    est.stderr_ = std::sqrt(var / kMcBatches);
    est.replicates = per_batch * kMcBatches;
    est.seed = seed;
    return est;
}

}  // namespace detail

/// Simulation cross-check of a static measure: iid sample of size m, plug-in
/// estimator, batch-means stderr from 10 sub-batches with derived seeds.
inline McEstimate mc_measure(const Distribution& dist, const WeightFunction& w, int n,
                             EstimatorKind kind, int m, std::uint64_t seed) {
    if (m < 1000) throw Error(ErrorKind::invalid_parameter, "mc_measure requires m >= 1000");
    auto draw = [&](int count, std::uint64_t s) { return sample_iid(dist, count, s); };
    return detail::mc_from_batches(m, seed, draw, kind, w, n);
}

/// Past extropy of the sum Z = X + Y from pairwise-independent draws.
inline McEstimate mc_sum_cpex(const Distribution& dist_x, const Distribution& dist_y,
                              const WeightFunction& w, int m, std::uint64_t seed) {
    if (m < 10000) throw Error(ErrorKind::invalid_parameter, "mc_sum_cpex requires m >= 10^4");
    if (!dist_x.bounded() || !dist_y.bounded())
        throw Error(ErrorKind::unbounded_support, "sum extropy requires bounded supports");
    auto draw = [&](int count, std::uint64_t s) {
        UniformStream rng(s);
        std::vector<double> out(count);
        for (int i = 0; i < count; ++i) {
            const double x = dist_x.quantile(rng.next());
            const double y = dist_y.quantile(rng.next());
            out[i] = x + y;
        }
        return out;
    };
    return detail::mc_from_batches(m, seed, draw, EstimatorKind::gwcpex_max, w, 1);
}

}  // namespace extropy
