// Regenerates data/usdgbp_standin_prices.csv: a synthetic daily exchange-rate
// price path whose log-returns follow the catalogued ARCH(1) process
// (lambda = 0.5, beta = 1.9e-5). Stands in for the proprietary USD/GBP series
// the estimate pipeline is documented against.

#include <cmath>
#include <iostream>
#include <vector>

#include "exind/io.hpp"
#include "exind/rng.hpp"
#include "exind/sim.hpp"

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : "data/usdgbp_standin_prices.csv";
    const std::size_t n_returns = 4000;
    const std::uint64_t seed = 19800102;
    const double initial_price = 1.5;

    exind::sim::ModelSpec spec;
    spec.process = exind::sim::ARCH{};
    exind::Rng rng(seed);
    const auto returns = exind::sim::simulate(spec, n_returns, rng);

    std::vector<double> prices;
    prices.reserve(n_returns + 1);
    prices.push_back(initial_price);
    for (double r : returns.values()) prices.push_back(prices.back() * std::exp(r));

    exind::io::write_series(path, prices, "price");
    std::cout << "wrote " << prices.size() << " prices to " << path << '\n';
    return 0;
}
