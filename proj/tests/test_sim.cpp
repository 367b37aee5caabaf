#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "exind/rng.hpp"
#include "exind/sim.hpp"
#include "support/oracles.hpp"

using namespace exind;
using sim::ModelSpec;

namespace {

ModelSpec spec_of(auto process, std::size_t burn_in = 1000) {
    ModelSpec spec;
    spec.process = process;
    spec.burn_in = burn_in;
    return spec;
}

TimeSeries draw(const ModelSpec& spec, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return sim::simulate(spec, n, rng);
}

}  // namespace

TEST_CASE("model validation", "[sim]") {
    CHECK_THROWS_AS(sim::validate(spec_of(sim::ARCau{0.0})), std::invalid_argument);
    CHECK_THROWS_AS(sim::validate(spec_of(sim::ARCau{1.2})), std::invalid_argument);
    CHECK_THROWS_AS(sim::validate(spec_of(sim::ARUnif{1})), std::invalid_argument);
    CHECK_THROWS_AS(sim::validate(spec_of(sim::MM{{0.5, 0.4}})), std::invalid_argument);
    CHECK_THROWS_AS(sim::validate(spec_of(sim::MM{{}})), std::invalid_argument);
    CHECK_THROWS_AS(sim::validate(spec_of(sim::MAR{1.0})), std::invalid_argument);
    CHECK_THROWS_AS(sim::validate(spec_of(sim::MCLogistic{0.0})), std::invalid_argument);
    CHECK_THROWS_AS(sim::validate(spec_of(sim::ARCH{0.5, 0.0})), std::invalid_argument);
    CHECK_NOTHROW(sim::validate(spec_of(sim::MM{})));
}

TEST_CASE("catalogued extremal indices", "[sim]") {
    CHECK(sim::theoretical_theta(spec_of(sim::ARCau{})) == Catch::Approx(0.64).margin(1e-15));
    CHECK(sim::theoretical_theta(spec_of(sim::ARUnif{})) == 0.75);
    CHECK(sim::theoretical_theta(spec_of(sim::MM{})) == 0.5);
    CHECK(sim::theoretical_theta(spec_of(sim::MAR{})) == 0.5);
    CHECK(sim::theoretical_theta(spec_of(sim::MCLogistic{})) == 0.328);
    CHECK(sim::theoretical_theta(spec_of(sim::ARCH{})) == 0.835);

    SECTION("uncatalogued parameterizations are rejected") {
        CHECK_THROWS_AS(sim::theoretical_theta(spec_of(sim::ARCau{0.6})), std::domain_error);
        CHECK_THROWS_AS(sim::theoretical_theta(spec_of(sim::MCLogistic{0.7})), std::domain_error);
        CHECK_THROWS_AS(sim::theoretical_theta(spec_of(sim::ARCH{0.3, 1.9e-5})), std::domain_error);
    }
}

TEST_CASE("simulation is a pure function of the seed", "[sim]") {
    const std::vector<ModelSpec> specs = {spec_of(sim::ARCau{}),  spec_of(sim::ARUnif{}),
                                          spec_of(sim::MM{}),     spec_of(sim::MAR{}),
                                          spec_of(sim::MCLogistic{}, 50), spec_of(sim::ARCH{})};
    for (const auto& spec : specs) {
        const auto a = draw(spec, 64, 7);
        const auto b = draw(spec, 64, 7);
        const auto c = draw(spec, 64, 8);
        CHECK(a.values() == b.values());
        CHECK(a.values() != c.values());
    }
}

TEST_CASE("moving maxima recurrence", "[sim]") {
    // Direct evaluation of the window maximum with the catalogued weights.
    const std::vector<double> alphas{2.0 / 6.0, 1.0 / 6.0, 3.0 / 6.0};
    const double z = 6.0;
    double x = 0.0;
    for (std::size_t j = 0; j < alphas.size(); ++j) x = std::max(x, alphas[j] * z);
    CHECK(x == 3.0);

    SECTION("a single unit weight reproduces the innovation sequence") {
        auto spec = spec_of(sim::MM{{1.0}}, 0);
        Rng rng_sim(404);
        const auto series = sim::simulate(spec, 32, rng_sim);
        Rng rng_direct(404);
        for (double v : series.values()) CHECK(v == rng_direct.standard_frechet());
    }
}

TEST_CASE("MAR path respects the recurrence lower bound", "[sim]") {
    const auto series = draw(spec_of(sim::MAR{}), 2000, 3);
    for (std::size_t t = 1; t < series.size(); ++t) {
        CHECK(series[t] >= 0.5 * series[t - 1]);
        CHECK(series[t] > 0.0);
    }
}

TEST_CASE("ARCau marginal hits the Cauchy df at 1", "[sim]") {
    const auto series = draw(spec_of(sim::ARCau{}), 100000, 12);
    const double frac = static_cast<double>(std::count_if(series.values().begin(),
                                                          series.values().end(),
                                                          [](double v) { return v <= 1.0; })) /
                        100000.0;
    CHECK(std::abs(frac - 0.75) < 0.01);
}

TEST_CASE("ARUnif stays inside the unit interval", "[sim]") {
    const auto series = draw(spec_of(sim::ARUnif{}), 20000, 5);
    for (double v : series.values()) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
    CHECK(oracles::ks_statistic(series.values(), oracles::uniform01_cdf) < 0.02);
}

TEST_CASE("logistic conditional df", "[sim]") {
    SECTION("monotone in y and quantile inverts it") {
        for (const double alpha : {0.3, 0.5, 1.0}) {
            for (const double x : {-2.0, 0.0, 1.5, 6.0}) {
                double prev = -0.1;
                for (double y = -4.0; y <= 8.0; y += 0.5) {
                    const double f = sim::logistic_conditional_cdf(y, x, alpha);
                    CHECK(f >= prev - 1e-12);
                    CHECK(f >= 0.0);
                    CHECK(f <= 1.0);
                    prev = f;
                }
                for (const double u : {0.05, 0.4, 0.9, 0.999}) {
                    const double y = sim::logistic_conditional_quantile(x, u, alpha);
                    CHECK(sim::logistic_conditional_cdf(y, x, alpha) ==
                          Catch::Approx(u).margin(1e-8));
                }
            }
        }
    }
    SECTION("alpha = 1 reduces to the independent Gumbel marginal") {
        for (const double y : {-1.0, 0.5, 2.0}) {
            const double marginal = std::exp(-std::exp(-y));
            CHECK(sim::logistic_conditional_cdf(y, -1.3, 1.0) ==
                  Catch::Approx(marginal).epsilon(1e-12));
            CHECK(sim::logistic_conditional_cdf(y, 4.0, 1.0) ==
                  Catch::Approx(marginal).epsilon(1e-12));
        }
    }
}

TEST_CASE("MM pair distribution is shift invariant", "[sim]") {
    const auto series = draw(spec_of(sim::MM{}), 60000, 21);
    const auto& v = series.values();
    std::vector<double> first_half(v.begin(), v.begin() + 30000);
    std::vector<double> second_half(v.begin() + 30000, v.end());
    CHECK(oracles::ks_two_sample(first_half, second_half) < 0.02);

    std::vector<double> pair_max_even, pair_max_odd;
    for (std::size_t t = 0; t + 1 < v.size(); t += 2) {
        pair_max_even.push_back(std::max(v[t], v[t + 1]));
    }
    for (std::size_t t = 1; t + 1 < v.size(); t += 2) {
        pair_max_odd.push_back(std::max(v[t], v[t + 1]));
    }
    CHECK(oracles::ks_two_sample(pair_max_even, pair_max_odd) < 0.02);
}

TEST_CASE("simulate rejects bad input", "[sim]") {
    CHECK_THROWS_AS(draw(spec_of(sim::ARCau{0.0}), 10, 1), std::invalid_argument);
    Rng rng(1);
    CHECK_THROWS_AS(sim::simulate(spec_of(sim::MM{}), 0, rng), std::invalid_argument);
}

TEST_CASE("model names and labels", "[sim]") {
    CHECK(std::string(sim::model_name(spec_of(sim::MCLogistic{}))) == "MC");
    CHECK(sim::model_label(spec_of(sim::ARCau{})) == "ARCau(rho=-0.6)");
    CHECK(sim::model_label(spec_of(sim::ARCH{})) == "ARCH(lambda=0.5;beta=1.9e-05)");
    CHECK(sim::model_label(spec_of(sim::MM{})) == "MM(alphas=0.333333;0.166667;0.5)");
}
