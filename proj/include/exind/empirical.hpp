#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace exind {

// Empirical distribution function with denominator n + 1. Counts with <=,
// stays strictly below 1, so logs of it (and -1/log of it) remain finite.
inline double modified_empirical_cdf(std::span<const double> sample, double x) {
    if (sample.empty()) throw std::invalid_argument("modified_empirical_cdf: empty sample");
    std::size_t count = 0;
    for (double v : sample) count += (v <= x) ? 1u : 0u;
    return static_cast<double>(count) / static_cast<double>(sample.size() + 1);
}

// Sorted copy of a sample for repeated rank lookups.
class SortedSample {
public:
    explicit SortedSample(std::span<const double> sample)
        : sorted_(sample.begin(), sample.end()) {
        if (sorted_.empty()) throw std::invalid_argument("SortedSample: empty sample");
        std::sort(sorted_.begin(), sorted_.end());
    }

    // #{ values <= x }
    std::size_t count_leq(double x) const {
        return static_cast<std::size_t>(
            std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin());
    }

    double modified_cdf(double x) const {
        return static_cast<double>(count_leq(x)) / static_cast<double>(sorted_.size() + 1);
    }

    std::size_t size() const noexcept { return sorted_.size(); }
    const std::vector<double>& values() const noexcept { return sorted_; }

private:
    std::vector<double> sorted_;
};

// Type-1 empirical quantile: the order statistic at 1-based index
// ceil(level * n). The nudge keeps products like 0.9 * 1000, which are
// integers in real arithmetic, from being pushed up one rank by their binary
// representation.
inline double empirical_quantile(std::span<const double> sample, double level) {
    if (sample.empty()) throw std::invalid_argument("empirical_quantile: empty sample");
    if (!(level > 0.0) || level > 1.0)
        throw std::invalid_argument("empirical_quantile: level must be in (0, 1]");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = level * static_cast<double>(sorted.size());
    auto index = static_cast<std::size_t>(std::ceil(pos - 1e-9));
    index = std::clamp<std::size_t>(index, 1, sorted.size());
    return sorted[index - 1];
}

}  // namespace exind
