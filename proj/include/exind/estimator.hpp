#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exind/empirical.hpp"
#include "exind/parallel.hpp"
#include "exind/rng.hpp"
#include "exind/series.hpp"

namespace exind {

// Rank transform onto the standard Frechet scale: x -> -1/log(F(x)) with F
// the modified empirical df of the whole series. The output depends on the
// data only through ranks; a strictly increasing transform of the input
// leaves it bit-identical. Tied values share the maximal rank of their tie
// group.
inline FrechetSeries to_frechet(const TimeSeries& series) {
    const SortedSample sorted(series.values());
    std::vector<double> out(series.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = -1.0 / std::log(sorted.modified_cdf(series[i]));
    }
    return FrechetSeries(std::move(out));
}

// n iid standard Frechet draws, df exp(-1/x), via inverse transform.
inline FrechetSeries sample_frechet(std::size_t n, Rng& rng) {
    if (n == 0) throw std::invalid_argument("sample_frechet: n must be positive");
    std::vector<double> out(n);
    for (auto& v : out) v = rng.standard_frechet();
    return FrechetSeries(std::move(out));
}

// Pairs (aux_i, aux_i/2 v x_i/2): an iid coordinate beside a mixture whose
// dependence on the original series carries the extremal index.
inline PairSeries build_pairs(const FrechetSeries& x, const FrechetSeries& aux) {
    if (x.size() != aux.size()) {
        throw std::invalid_argument("build_pairs: length mismatch (" + std::to_string(x.size()) +
                                    " vs " + std::to_string(aux.size()) + ")");
    }
    std::vector<PairSeries::Pair> pairs(x.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        pairs[i] = {aux[i], std::max(0.5 * aux[i], 0.5 * x[i])};
    }
    return PairSeries(std::move(pairs));
}

// Component-wise maxima over disjoint blocks of length r; a trailing partial
// block is dropped. Requires at least two complete blocks.
inline PairSeries block_maxima(const PairSeries& pairs, std::size_t r) {
    if (r == 0) throw std::invalid_argument("block_maxima: block length must be positive");
    const std::size_t blocks = pairs.size() / r;
    if (blocks < 2) {
        throw std::invalid_argument("block_maxima: need at least 2 complete blocks, got " +
                                    std::to_string(blocks));
    }
    std::vector<PairSeries::Pair> maxima(blocks);
    for (std::size_t j = 0; j < blocks; ++j) {
        double first = pairs[j * r].first;
        double second = pairs[j * r].second;
        for (std::size_t i = j * r + 1; i < (j + 1) * r; ++i) {
            first = std::max(first, pairs[i].first);
            second = std::max(second, pairs[i].second);
        }
        maxima[j] = {first, second};
    }
    return PairSeries(std::move(maxima));
}

// Plug-in estimate of the stable tail dependence function at (1, 1):
// 1/(1 - mean_i max_j G_j(Z_ij)) - 1 with G_j the modified empirical dfs of
// the pair sample. Rank counts are summed in integers (S over denominator
// D = m(m+1)), and the expression simplifies to S/(D - S), whose single
// division is the only rounding step; comonotone input yields exactly 1.
inline double estimate_stdf11(const PairSeries& pairs) {
    const std::size_t m = pairs.size();
    if (m < 2) throw std::invalid_argument("estimate_stdf11: need at least 2 pairs");
    std::vector<double> first(m), second(m);
    for (std::size_t i = 0; i < m; ++i) {
        first[i] = pairs[i].first;
        second[i] = pairs[i].second;
    }
    const SortedSample sorted_first(first), sorted_second(second);
    std::uint64_t rank_sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
        rank_sum += std::max(sorted_first.count_leq(pairs[i].first),
                             sorted_second.count_leq(pairs[i].second));
    }
    const std::uint64_t denom = static_cast<std::uint64_t>(m) * (m + 1);
    return static_cast<double>(rank_sum) / static_cast<double>(denom - rank_sum);
}

// Tail dependence coefficient from the stdf at (1, 1).
inline double lambda_from_stdf(double stdf11) { return 2.0 - stdf11; }

// Extremal index from the tail dependence coefficient. The coefficient is
// clamped into its feasible interval [1/2, 1] first, so theta lands in
// [0, 1]: theta == 1 exactly when lambda <= 1/2, theta == 0 exactly when
// lambda >= 1.
inline double theta_from_lambda(double lambda) {
    if (!std::isfinite(lambda)) throw std::invalid_argument("theta_from_lambda: non-finite lambda");
    const double clamped = std::clamp(lambda, 0.5, 1.0);
    return 1.0 / clamped - 1.0;
}

// One estimate from an already-transformed series and a given auxiliary
// sequence. Exposed so callers (and tests) can pin the auxiliary draw.
inline ThetaEstimate theta_replicate(const FrechetSeries& x, const FrechetSeries& aux,
                                     std::size_t block_length) {
    const double stdf = estimate_stdf11(block_maxima(build_pairs(x, aux), block_length));
    const double lambda = lambda_from_stdf(stdf);
    return ThetaEstimate{theta_from_lambda(lambda), lambda, {}};
}

// Single-replicate pipeline: rank transform, one auxiliary iid draw, block
// maxima of length r, tail dependence estimate, extremal index.
inline ThetaEstimate estimate_theta_single(const TimeSeries& series, std::size_t block_length,
                                           Rng& rng) {
    const FrechetSeries x = to_frechet(series);
    return theta_replicate(x, sample_frechet(series.size(), rng), block_length);
}

// Replicate-averaged estimator: M single-replicate estimates with
// independent auxiliary draws, combined by arithmetic mean. Replicate s
// draws from derive_seed(config.seed, s) whether replicates run serially or
// across threads, and the mean is reduced in replicate order, so the result
// is bit-identical for any thread count. The rank transform is deterministic
// and computed once.
inline ThetaEstimate estimate_theta(const TimeSeries& series, const EstimatorConfig& config,
                                    unsigned threads = 1) {
    if (config.block_length == 0 || config.block_length > series.size())
        throw std::invalid_argument("estimate_theta: block length must be in [1, n]");
    if (series.size() / config.block_length < 2)
        throw std::invalid_argument("estimate_theta: need at least 2 complete blocks");
    if (config.replicates == 0)
        throw std::invalid_argument("estimate_theta: replicate count must be positive");

    const FrechetSeries x = to_frechet(series);
    const std::size_t n = series.size();
    std::vector<ThetaEstimate> replicates(config.replicates);
    detail::parallel_for(config.replicates, threads, [&](std::size_t s) {
        Rng rng(derive_seed(config.seed, s));
        replicates[s] = theta_replicate(x, sample_frechet(n, rng), config.block_length);
    });

    ThetaEstimate out;
    out.per_replicate.reserve(config.replicates);
    double theta_sum = 0.0;
    double lambda_sum = 0.0;
    for (const auto& rep : replicates) {
        theta_sum += rep.theta;
        lambda_sum += rep.lambda;
        out.per_replicate.push_back(rep.theta);
    }
    out.theta = theta_sum / static_cast<double>(config.replicates);
    out.lambda = lambda_sum / static_cast<double>(config.replicates);
    return out;
}

// Bivariate extreme value copula min(u v^(theta/(1+theta)), v) whose tail
// dependence coefficient is 1 - theta/(1+theta); the numerical oracle for
// the relation the estimator inverts.
inline double bev_copula(double u, double v, double theta) {
    if (!(u >= 0.0 && u <= 1.0) || !(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("bev_copula: u, v must lie in [0, 1]");
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::invalid_argument("bev_copula: theta must lie in [0, 1]");
    return std::min(u * std::pow(v, theta / (1.0 + theta)), v);
}

}  // namespace exind
