#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exind/comparators.hpp"
#include "exind/empirical.hpp"
#include "exind/estimator.hpp"
#include "exind/parallel.hpp"
#include "exind/rng.hpp"
#include "exind/sim.hpp"

namespace exind::bench {

enum class Estimator { new_blocks, northrop, ferro_segers };

inline const char* estimator_name(Estimator e) {
    switch (e) {
        case Estimator::new_blocks: return "new";
        case Estimator::northrop: return "northrop";
        case Estimator::ferro_segers: return "ferro_segers";
    }
    return "?";
}

inline std::optional<Estimator> estimator_from_name(std::string_view name) {
    if (name == "new") return Estimator::new_blocks;
    if (name == "northrop") return Estimator::northrop;
    if (name == "ferro_segers") return Estimator::ferro_segers;
    return std::nullopt;
}

// One cell of a study grid: a model, an estimator and its single tuning
// value (block length for the blocks estimators, quantile level for
// ferro_segers).
struct BenchCell {
    sim::ModelSpec model;
    Estimator estimator = Estimator::new_blocks;
    double tuning = 0.0;
    std::size_t n = 0;
    std::size_t replicates = 0;           // K
    std::size_t inner_replicates = 100;   // M, used by the new estimator only
    std::uint64_t seed = 0;
};

// Cell summary against the model's theoretical extremal index. `estimates`
// keeps one slot per requested replicate; replicates whose estimator failed
// hold NaN and are excluded from the summaries.
struct BenchResult {
    BenchCell cell;
    double theta = 0.0;
    std::vector<double> estimates;
    std::size_t effective_replicates = 0;
    double rmse = 0.0;
    double abias = 0.0;
};

// Study entries keep the input cell order; a cell that cannot produce a
// result carries the error text instead.
struct CellOutcome {
    BenchCell cell;
    std::optional<BenchResult> result;
    std::string error;
};

struct ErrorSummary {
    double rmse = 0.0;
    double abias = 0.0;
    std::size_t effective = 0;
};

// rmse and absolute mean bias of the finite entries against theta.
inline ErrorSummary summarize(std::span<const double> estimates, double theta) {
    ErrorSummary s;
    double sq_sum = 0.0;
    double sum = 0.0;
    for (double e : estimates) {
        if (!std::isfinite(e)) continue;
        sq_sum += (e - theta) * (e - theta);
        sum += e;
        ++s.effective;
    }
    if (s.effective == 0) return s;
    s.rmse = std::sqrt(sq_sum / static_cast<double>(s.effective));
    s.abias = std::abs(sum / static_cast<double>(s.effective) - theta);
    return s;
}

namespace detail {

inline std::size_t integral_tuning(const BenchCell& cell, const char* what) {
    if (!(cell.tuning >= 1.0) || cell.tuning != std::floor(cell.tuning))
        throw std::invalid_argument(std::string(what) + ": tuning must be a positive integer");
    return static_cast<std::size_t>(cell.tuning);
}

}  // namespace detail

// Runs the K replicates of one cell. Replicate k simulates its series from
// derive_seed(derive_seed(cell.seed, k), 0) and, for the new estimator,
// hands derive_seed(derive_seed(cell.seed, k), 1) to the inner replicate
// loop; seeds depend only on (cell.seed, k), so growing K preserves the
// existing replicates. A replicate whose estimator raises EstimationError is
// recorded as missing; fewer than 2 usable replicates is an error.
inline BenchResult run_cell(const BenchCell& cell, unsigned threads = 1) {
    if (cell.replicates < 2) throw std::invalid_argument("run_cell: need K >= 2 replicates");
    if (cell.n == 0) throw std::invalid_argument("run_cell: n must be positive");
    const double theta = sim::theoretical_theta(cell.model);

    // Static tuning checks up front so a bad cell fails before simulating.
    switch (cell.estimator) {
        case Estimator::new_blocks: {
            const std::size_t r = detail::integral_tuning(cell, "run_cell(new)");
            if (cell.n / r < 2)
                throw std::invalid_argument("run_cell(new): need at least 2 complete blocks");
            if (cell.inner_replicates == 0)
                throw std::invalid_argument("run_cell(new): M must be positive");
            break;
        }
        case Estimator::northrop: {
            const std::size_t b = detail::integral_tuning(cell, "run_cell(northrop)");
            if (b < 2 || b + 1 > cell.n)
                throw std::invalid_argument("run_cell(northrop): block length must be in [2, n-1]");
            break;
        }
        case Estimator::ferro_segers:
            if (!(cell.tuning > 0.0) || cell.tuning > 1.0)
                throw std::invalid_argument("run_cell(ferro_segers): quantile level must be in (0, 1]");
            break;
    }

    BenchResult result;
    result.cell = cell;
    result.theta = theta;
    result.estimates.assign(cell.replicates, std::numeric_limits<double>::quiet_NaN());

    exind::detail::parallel_for(cell.replicates, threads, [&](std::size_t k) {
        const std::uint64_t replicate_seed = derive_seed(cell.seed, k);
        Rng sim_rng(derive_seed(replicate_seed, 0));
        const TimeSeries series = sim::simulate(cell.model, cell.n, sim_rng);
        try {
            switch (cell.estimator) {
                case Estimator::new_blocks: {
                    EstimatorConfig config{static_cast<std::size_t>(cell.tuning),
                                           cell.inner_replicates, derive_seed(replicate_seed, 1)};
                    result.estimates[k] = estimate_theta(series, config).theta;
                    break;
                }
                case Estimator::northrop: {
                    comparators::BlockConfig config{static_cast<std::size_t>(cell.tuning),
                                                    comparators::BlockMode::sliding};
                    result.estimates[k] = comparators::northrop(series, config);
                    break;
                }
                case Estimator::ferro_segers: {
                    const double u = empirical_quantile(series.values(), cell.tuning);
                    result.estimates[k] = comparators::ferro_segers(series, u);
                    break;
                }
            }
        } catch (const EstimationError&) {
            // replicate stays NaN
        }
    });

    const ErrorSummary summary = summarize(result.estimates, theta);
    if (summary.effective < 2) {
        throw EstimationError("run_cell: fewer than 2 usable replicates (" +
                              std::to_string(summary.effective) + " of " +
                              std::to_string(cell.replicates) + ")");
    }
    result.effective_replicates = summary.effective;
    result.rmse = summary.rmse;
    result.abias = summary.abias;
    return result;
}

// Runs every cell, collecting per-cell failures instead of aborting the
// study. Results come back in input order and are bit-identical for any
// thread count.
inline std::vector<CellOutcome> run_study(std::span<const BenchCell> cells, unsigned threads = 1) {
    std::vector<CellOutcome> outcomes;
    outcomes.reserve(cells.size());
    for (const BenchCell& cell : cells) {
        CellOutcome outcome;
        outcome.cell = cell;
        try {
            outcome.result = run_cell(cell, threads);
        } catch (const std::exception& e) {
            outcome.error = e.what();
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

}  // namespace exind::bench
