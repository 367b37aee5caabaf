#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "exind/comparators.hpp"
#include "exind/empirical.hpp"
#include "exind/series.hpp"
#include "support/oracles.hpp"

using namespace exind;
using comparators::BlockConfig;
using comparators::BlockMode;

namespace {

// A series whose exceedances of 0.5 sit exactly at `positions` (1-based).
TimeSeries series_with_exceedances(std::size_t n, const std::vector<std::size_t>& positions) {
    std::vector<double> values(n, 0.0);
    for (std::size_t p : positions) values[p - 1] = 1.0;
    return TimeSeries{values};
}

}  // namespace

TEST_CASE("exceedances records strict exceedance positions", "[comparators]") {
    const TimeSeries series{{1.0, 5.0, 2.0, 6.0}};
    CHECK(comparators::exceedances(series, 4.0).positions == std::vector<std::size_t>{2, 4});
    CHECK(comparators::exceedances(series, 10.0).positions.empty());
    CHECK(comparators::exceedances(series, 0.0).positions == std::vector<std::size_t>{1, 2, 3, 4});
    // strict: a value equal to the threshold does not exceed it
    CHECK(comparators::exceedances(series, 6.0).positions.empty());
}

TEST_CASE("ferro_segers on hand-evaluated gap patterns", "[comparators]") {
    SECTION("gaps {1,1,10}: shifted branch gives 0.75") {
        const auto series = series_with_exceedances(13, {1, 2, 3, 13});
        CHECK(comparators::ferro_segers(series, 0.5) == 0.75);
    }
    SECTION("gaps {1,1}: plain branch caps at 1") {
        const auto series = series_with_exceedances(3, {1, 2, 3});
        CHECK(comparators::ferro_segers(series, 0.5) == 1.0);
    }
    SECTION("single gap {5}: shifted branch caps at 1") {
        const auto series = series_with_exceedances(6, {1, 6});
        CHECK(comparators::ferro_segers(series, 0.5) == 1.0);
    }
    SECTION("fewer than 2 exceedances is an estimation error") {
        const auto series = series_with_exceedances(4, {2});
        CHECK_THROWS_AS(comparators::ferro_segers(series, 0.5), EstimationError);
        CHECK_THROWS_AS(comparators::ferro_segers(series, 2.0), EstimationError);
    }
}

TEST_CASE("northrop on the worked 4-point example", "[comparators]") {
    const TimeSeries series{{1.0, 2.0, 3.0, 4.0}};
    CHECK(comparators::northrop(series, {2, BlockMode::disjoint}) ==
          Catch::Approx(0.8776284992951064).epsilon(1e-14));
    CHECK(comparators::northrop(series, {2, BlockMode::sliding}) ==
          Catch::Approx(0.9089477322201518).epsilon(1e-14));

    SECTION("mean V below 1 caps the estimate at 1") {
        const TimeSeries tied{{1.0, 2.0, 2.0, 2.0}};
        CHECK(comparators::northrop(tied, {2, BlockMode::disjoint}) == 1.0);
    }

    SECTION("block length bounds") {
        CHECK_THROWS_AS(comparators::northrop(series, {1, BlockMode::sliding}),
                        std::invalid_argument);
        CHECK_THROWS_AS(comparators::northrop(series, {5, BlockMode::sliding}),
                        std::invalid_argument);
        CHECK_THROWS_AS(comparators::northrop(series, {3, BlockMode::disjoint}),
                        std::invalid_argument);  // only one complete block
        CHECK_THROWS_AS(comparators::northrop(series, {4, BlockMode::sliding}),
                        std::invalid_argument);  // only one window
    }
}

TEST_CASE("comparators are rank/threshold invariant", "[comparators]") {
    std::mt19937 gen(99);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> values(60);
        for (auto& v : values) v = dist(gen);
        const TimeSeries series{values};

        std::vector<double> mapped(values.size());
        std::transform(values.begin(), values.end(), mapped.begin(),
                       [](double x) { return std::exp(0.7 * x) + 1.0; });
        const TimeSeries transformed{mapped};

        const double u = empirical_quantile(values, 0.8);
        const double gu = std::exp(0.7 * u) + 1.0;
        CHECK(comparators::ferro_segers(series, u) == comparators::ferro_segers(transformed, gu));

        const BlockConfig cfg{6, BlockMode::sliding};
        CHECK(comparators::northrop(series, cfg) == comparators::northrop(transformed, cfg));
    }
}

TEST_CASE("comparators match naive reimplementations", "[comparators]") {
    std::mt19937 gen(123);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> len(5, 50);
    int fs_checked = 0;
    for (int rep = 0; rep < 60; ++rep) {
        std::vector<double> values(len(gen));
        for (auto& v : values) v = dist(gen);
        const TimeSeries series{values};

        const double u = dist(gen) * 0.8;
        const std::size_t n_exc = comparators::exceedances(series, u).positions.size();
        if (n_exc >= 2) {
            ++fs_checked;
            CHECK(comparators::ferro_segers(series, u) ==
                  Catch::Approx(oracles::naive_ferro_segers(values, u)).margin(1e-12));
        }

        const std::size_t b = 2 + gen() % std::max<std::size_t>(1, values.size() / 2 - 1);
        if (values.size() >= b + 1) {
            CHECK(comparators::northrop(series, {b, BlockMode::sliding}) ==
                  Catch::Approx(oracles::naive_northrop(values, b, true)).margin(1e-12));
        }
        if (values.size() / b >= 2) {
            CHECK(comparators::northrop(series, {b, BlockMode::disjoint}) ==
                  Catch::Approx(oracles::naive_northrop(values, b, false)).margin(1e-12));
        }
    }
    CHECK(fs_checked > 20);
}
