#pragma once

// Independent reference implementations used to check the library. These
// deliberately avoid the library's code paths: plain loops, explicit
// materialized intermediates, no shared helpers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracles {

// Intervals estimator, straight from the interexceedance times.
inline double naive_ferro_segers(const std::vector<double>& values, double threshold) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > threshold) positions.push_back(i + 1);
    }
    std::vector<double> gaps;
    for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
        gaps.push_back(static_cast<double>(positions[i + 1] - positions[i]));
    }
    const double n_gaps = static_cast<double>(gaps.size());
    double max_gap = 0.0;
    for (double t : gaps) max_gap = std::max(max_gap, t);
    double estimate;
    if (max_gap <= 2.0) {
        double sum = 0.0, sum_sq = 0.0;
        for (double t : gaps) {
            sum += t;
            sum_sq += t * t;
        }
        estimate = 2.0 * sum * sum / (n_gaps * sum_sq);
    } else {
        double sum = 0.0, sum_prod = 0.0;
        for (double t : gaps) {
            sum += t - 1.0;
            sum_prod += (t - 1.0) * (t - 2.0);
        }
        estimate = 2.0 * sum * sum / (n_gaps * sum_prod);
    }
    return std::min(1.0, estimate);
}

// Blocks estimator with the empirical df evaluated by counting.
inline double naive_northrop(const std::vector<double>& values, std::size_t b, bool sliding) {
    const std::size_t n = values.size();
    std::vector<double> maxima;
    if (sliding) {
        for (std::size_t i = 0; i + b <= n; ++i) {
            double m = values[i];
            for (std::size_t j = i + 1; j < i + b; ++j) m = std::max(m, values[j]);
            maxima.push_back(m);
        }
    } else {
        for (std::size_t j = 0; (j + 1) * b <= n; ++j) {
            double m = values[j * b];
            for (std::size_t i = j * b + 1; i < (j + 1) * b; ++i) m = std::max(m, values[i]);
            maxima.push_back(m);
        }
    }
    double v_sum = 0.0;
    for (double m : maxima) {
        std::size_t count = 0;
        for (double v : values) count += (v <= m) ? 1u : 0u;
        const double cdf = static_cast<double>(count) / static_cast<double>(n + 1);
        v_sum += -static_cast<double>(b) * std::log(cdf);
    }
    const double v_mean = v_sum / static_cast<double>(maxima.size());
    return std::min(1.0, 1.0 / v_mean);
}

// One-sample Kolmogorov-Smirnov statistic against a continuous df.
template <typename Cdf>
double ks_statistic(std::vector<double> sample, Cdf&& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] <= b[ib]) {
            ++ia;
        } else {
            ++ib;
        }
        const double fa = static_cast<double>(ia) / static_cast<double>(a.size());
        const double fb = static_cast<double>(ib) / static_cast<double>(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

inline double standard_cauchy_cdf(double x) { return 0.5 + std::atan(x) / std::numbers::pi; }
inline double standard_gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }
inline double standard_frechet_cdf(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
inline double uniform01_cdf(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace oracles
