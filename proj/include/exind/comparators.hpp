#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "exind/empirical.hpp"
#include "exind/series.hpp"

namespace exind::comparators {

enum class BlockMode { disjoint, sliding };

struct BlockConfig {
    std::size_t block_length = 2;  // b
    BlockMode mode = BlockMode::sliding;
};

// Positions (1-based, increasing) of the strict exceedances of a threshold.
struct ExceedanceRecord {
    std::vector<std::size_t> positions;
    double threshold = 0.0;
};

inline ExceedanceRecord exceedances(const TimeSeries& series, double threshold) {
    ExceedanceRecord record;
    record.threshold = threshold;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i] > threshold) record.positions.push_back(i + 1);
    }
    return record;
}

// Intervals estimator of Ferro & Segers (2003). Built from the
// interexceedance times T_i; uses the plain moment ratio when every gap is
// at most 2 and the shifted variant otherwise. Capped at 1. Depends on the
// data only through exceedance positions.
inline double ferro_segers(const TimeSeries& series, double threshold) {
    const ExceedanceRecord record = exceedances(series, threshold);
    const std::size_t n_exceedances = record.positions.size();
    if (n_exceedances < 2) {
        throw EstimationError("ferro_segers: need at least 2 exceedances, got " +
                              std::to_string(n_exceedances));
    }
    const std::size_t n_gaps = n_exceedances - 1;
    std::uint64_t max_gap = 0;
    std::uint64_t sum = 0, sum_sq = 0, sum_shift = 0, sum_shift_prod = 0;
    for (std::size_t i = 0; i < n_gaps; ++i) {
        const std::uint64_t gap = record.positions[i + 1] - record.positions[i];
        max_gap = std::max(max_gap, gap);
        sum += gap;
        sum_sq += gap * gap;
        sum_shift += gap - 1;
        sum_shift_prod += (gap - 1) * (gap >= 2 ? gap - 2 : 0);
    }
    double estimate;
    if (max_gap <= 2) {
        estimate = 2.0 * static_cast<double>(sum) * static_cast<double>(sum) /
                   (static_cast<double>(n_gaps) * static_cast<double>(sum_sq));
    } else {
        estimate = 2.0 * static_cast<double>(sum_shift) * static_cast<double>(sum_shift) /
                   (static_cast<double>(n_gaps) * static_cast<double>(sum_shift_prod));
    }
    return std::min(1.0, estimate);
}

// Blocks estimator of Northrop (2015). Block maxima mapped through
// -b log F(.), with F the modified empirical df of the full series, behave
// like Exp(1/theta) draws; theta is the reciprocal sample mean, capped at 1.
// Sliding mode averages over all n-b+1 windows, disjoint over floor(n/b)
// blocks. Depends on the data only through ranks.
inline double northrop(const TimeSeries& series, const BlockConfig& config) {
    const std::size_t n = series.size();
    const std::size_t b = config.block_length;
    if (b < 2 || b > n) throw std::invalid_argument("northrop: block length must be in [2, n]");

    std::vector<double> maxima;
    if (config.mode == BlockMode::disjoint) {
        const std::size_t blocks = n / b;
        if (blocks < 2)
            throw std::invalid_argument("northrop: need at least 2 complete disjoint blocks");
        maxima.reserve(blocks);
        for (std::size_t j = 0; j < blocks; ++j) {
            maxima.push_back(*std::max_element(series.values().begin() + j * b,
                                               series.values().begin() + (j + 1) * b));
        }
    } else {
        if (n - b + 1 < 2)
            throw std::invalid_argument("northrop: need at least 2 sliding windows");
        maxima.reserve(n - b + 1);
        for (std::size_t i = 0; i + b <= n; ++i) {
            maxima.push_back(*std::max_element(series.values().begin() + i,
                                               series.values().begin() + i + b));
        }
    }

    const SortedSample sorted(series.values());
    double v_sum = 0.0;
    for (double m : maxima) {
        v_sum += -static_cast<double>(b) * std::log(sorted.modified_cdf(m));
    }
    const double v_mean = v_sum / static_cast<double>(maxima.size());
    return std::min(1.0, 1.0 / v_mean);
}

}  // namespace exind::comparators
