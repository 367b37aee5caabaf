#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exind {

// Estimation failed on the given data (for example, too few exceedances
// above the threshold). Distinct from std::invalid_argument so callers can
// record a missing value instead of treating it as a usage bug.
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_finite(const std::vector<double>& values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument(std::string(what) + ": non-finite value at index " +
                                        std::to_string(i));
        }
    }
}

}  // namespace detail

// Ordered univariate sample. The order carries the serial dependence, so it
// is never permuted. All values must be finite.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("TimeSeries: empty sample");
        detail::require_finite(values_, "TimeSeries");
    }

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    std::vector<double> values_;
};

// Ordered sample on the standard Frechet scale; every value is finite and
// strictly positive.
class FrechetSeries {
public:
    explicit FrechetSeries(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("FrechetSeries: empty sample");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i]) || values_[i] <= 0.0) {
                throw std::invalid_argument("FrechetSeries: value at index " + std::to_string(i) +
                                            " is not a positive finite real");
            }
        }
    }

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    std::vector<double> values_;
};

// Ordered bivariate sample with strictly positive finite coordinates.
class PairSeries {
public:
    using Pair = std::pair<double, double>;

    explicit PairSeries(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
        if (pairs_.empty()) throw std::invalid_argument("PairSeries: empty sample");
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            const auto& [a, b] = pairs_[i];
            if (!std::isfinite(a) || a <= 0.0 || !std::isfinite(b) || b <= 0.0) {
                throw std::invalid_argument("PairSeries: pair at index " + std::to_string(i) +
                                            " has a non-positive or non-finite coordinate");
            }
        }
    }

    std::size_t size() const noexcept { return pairs_.size(); }
    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    const Pair& operator[](std::size_t i) const noexcept { return pairs_[i]; }

private:
    std::vector<Pair> pairs_;
};

// Tuning of the replicate-averaged blocks estimator.
struct EstimatorConfig {
    std::size_t block_length = 0;  // r: component-wise maxima are taken over blocks of this length
    std::size_t replicates = 1;    // M: auxiliary draws averaged over
    std::uint64_t seed = 0;        // master seed; replicate s draws from derive_seed(seed, s)
};

// Result of the blocks estimator. `lambda` keeps the unclamped tail
// dependence estimate, so theta == 1/clamp(lambda) - 1 holds exactly for a
// single replicate. For replicate-averaged runs both scalars are means over
// replicates and `per_replicate` holds the individual theta estimates.
struct ThetaEstimate {
    double theta = 0.0;
    double lambda = 0.0;
    std::vector<double> per_replicate;
};

}  // namespace exind
