// exind: command line front end for the extremal index toolkit.
//
// Subcommands: simulate (draw a series from one of the catalogued
// processes), logreturns (prices -> log-returns), estimate (extremal index
// over a tuning grid), bench (Monte Carlo study from a config file).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exind/exind.hpp"

namespace {

// "a,b,c" lists whose entries may be "lo:hi:step" ranges.
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::istringstream parts{text};
    std::string token;
    while (std::getline(parts, token, ',')) {
        const std::size_t c1 = token.find(':');
        if (c1 == std::string::npos) {
            const auto v = exind::io::parse_double(token);
            if (!v) throw CLI::ValidationError("grid", "bad grid entry '" + token + "'");
            grid.push_back(*v);
            continue;
        }
        const std::size_t c2 = token.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw CLI::ValidationError("grid", "range needs lo:hi:step, got '" + token + "'");
        const auto lo = exind::io::parse_double(token.substr(0, c1));
        const auto hi = exind::io::parse_double(token.substr(c1 + 1, c2 - c1 - 1));
        const auto step = exind::io::parse_double(token.substr(c2 + 1));
        if (!lo || !hi || !step || *step <= 0.0)
            throw CLI::ValidationError("grid", "bad range '" + token + "'");
        for (int i = 0;; ++i) {
            const double v = *lo + *step * i;
            if (v > *hi + 1e-12) break;
            grid.push_back(v);
        }
    }
    if (grid.empty()) throw CLI::ValidationError("grid", "empty grid");
    return grid;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> params;
    if (text.empty()) return params;
    std::istringstream parts{text};
    std::string token;
    while (std::getline(parts, token, ';')) {
        // alphas need their own ';'-separated list, so values may continue
        // until the next "key=" token.
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos || eq == 0) {
            if (params.empty())
                throw CLI::ValidationError("params", "expected key=value, got '" + token + "'");
            params.rbegin()->second += ";" + token;  // continuation of a list value
            continue;
        }
        params[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return params;
}

// Output stream that is stdout unless a path was given.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

struct EstimateArgs {
    std::string input, output, method;
    std::string r_grid, b_grid, quantile_grid;
    std::size_t inner_replicates = 100;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
};

int run_estimate(const EstimateArgs& args) {
    const auto series = exind::io::to_time_series(exind::io::read_dataset(args.input));

    std::vector<double> grid;
    if (args.method == "new") {
        grid = parse_grid(args.r_grid.empty() ? "10,20,30,40,50,70" : args.r_grid);
        if (!args.seed)
            throw CLI::ValidationError("--seed", "the new estimator is randomized; give --seed "
                                                 "or set EXIND_SEED");
    } else if (args.method == "northrop") {
        grid = parse_grid(args.b_grid.empty() ? "10,20,30,40,50,70" : args.b_grid);
    } else if (args.method == "ferro_segers") {
        grid = parse_grid(args.quantile_grid.empty() ? "0.40:0.99:0.01" : args.quantile_grid);
    } else {
        throw CLI::ValidationError("--method", "expected new|northrop|ferro_segers");
    }

    OutputTarget target(args.output);
    std::ostream& out = target.stream();
    out << "method,tuning,estimate\n";
    std::size_t failures = 0;
    for (const double tuning : grid) {
        out << args.method << ',' << exind::io::format_double(tuning) << ',';
        try {
            double estimate = 0.0;
            if (args.method == "new") {
                if (tuning < 1.0 || tuning != std::floor(tuning))
                    throw std::invalid_argument("block length must be a positive integer");
                exind::EstimatorConfig config{static_cast<std::size_t>(tuning),
                                              args.inner_replicates, *args.seed};
                estimate = exind::estimate_theta(series, config, args.threads).theta;
            } else if (args.method == "northrop") {
                if (tuning < 2.0 || tuning != std::floor(tuning))
                    throw std::invalid_argument("block length must be an integer >= 2");
                estimate = exind::comparators::northrop(
                    series, {static_cast<std::size_t>(tuning),
                             exind::comparators::BlockMode::sliding});
            } else {
                const double u = exind::empirical_quantile(series.values(), tuning);
                estimate = exind::comparators::ferro_segers(series, u);
            }
            out << exind::io::format_double(estimate) << '\n';
        } catch (const std::exception& e) {
            ++failures;
            out << '\n';
            std::cerr << "exind estimate: tuning " << exind::io::format_double(tuning)
                      << " failed: " << e.what() << '\n';
        }
    }
    return failures == grid.size() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal index estimation toolkit"};
    app.require_subcommand(1);

    // simulate
    std::string sim_model, sim_params, sim_output;
    std::size_t sim_n = 0;
    std::optional<std::uint64_t> sim_seed;
    auto* simulate = app.add_subcommand("simulate", "draw a series from a catalogued process");
    simulate->add_option("--model", sim_model, "ARCau|ARUnif|MM|MAR|MC|ARCH")->required();
    simulate->add_option("--n", sim_n, "series length")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_seed, "master seed")->envname("EXIND_SEED");
    simulate->add_option("--params", sim_params,
                         "model parameter overrides, e.g. 'rho=-0.6' or 'alphas=2/6;1/6;3/6'");
    simulate->add_option("--output", sim_output, "output file (default stdout)");

    // logreturns
    std::string lr_input, lr_output;
    auto* logreturns = app.add_subcommand("logreturns", "convert prices to log-returns");
    logreturns->add_option("--input", lr_input, "price series file")->required();
    logreturns->add_option("--output", lr_output, "output file (default stdout)");

    // estimate
    EstimateArgs est;
    auto* estimate = app.add_subcommand("estimate", "estimate the extremal index over a grid");
    estimate->add_option("--input", est.input, "series file")->required();
    estimate->add_option("--method", est.method, "new|northrop|ferro_segers")->required();
    estimate->add_option("--r", est.r_grid, "block length grid for the new estimator "
                                            "(default 10,20,30,40,50,70)");
    estimate->add_option("--b", est.b_grid, "block length grid for northrop "
                                            "(default 10,20,30,40,50,70)");
    estimate->add_option("--quantile", est.quantile_grid,
                         "quantile grid for ferro_segers (default 0.40:0.99:0.01)");
    estimate->add_option("--M", est.inner_replicates, "auxiliary replicates for the new estimator")
        ->check(CLI::PositiveNumber);
    estimate->add_option("--seed", est.seed, "master seed (new estimator)")->envname("EXIND_SEED");
    estimate->add_option("--threads", est.threads, "worker threads (0 = hardware)");
    estimate->add_option("--output", est.output, "output CSV (default stdout)");

    // bench
    std::string bench_config, bench_output, bench_raw_output;
    unsigned bench_threads = 1;
    auto* bench = app.add_subcommand("bench", "run a Monte Carlo study from a config file");
    bench->add_option("--config", bench_config, "study config file")->required();
    bench->add_option("--output", bench_output, "summary CSV (default stdout)");
    bench->add_option("--raw-output", bench_raw_output, "per-replicate CSV for audit");
    bench->add_option("--threads", bench_threads, "worker threads (0 = hardware)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            if (!sim_seed)
                throw CLI::ValidationError("--seed", "simulate is randomized; give --seed or set "
                                                     "EXIND_SEED");
            const auto spec = exind::io::parse_model(sim_model, parse_params(sim_params));
            exind::Rng rng(*sim_seed);
            const auto series = exind::sim::simulate(spec, sim_n, rng);
            OutputTarget target(sim_output);
            exind::io::write_series(target.stream(), series.values());
        } else if (logreturns->parsed()) {
            const auto prices = exind::io::read_dataset(lr_input);
            const auto returns = exind::io::log_returns(prices);
            OutputTarget target(lr_output);
            exind::io::write_series(target.stream(), returns, "log_return");
        } else if (estimate->parsed()) {
            return run_estimate(est);
        } else if (bench->parsed()) {
            const auto cells = exind::io::read_study_config(bench_config);
            const auto outcomes = exind::bench::run_study(cells, bench_threads);
            OutputTarget target(bench_output);
            exind::io::write_study_summary(target.stream(), outcomes);
            if (!bench_raw_output.empty()) {
                std::ofstream raw(bench_raw_output);
                if (!raw) throw std::runtime_error("cannot open output file: " + bench_raw_output);
                exind::io::write_study_replicates(raw, outcomes);
            }
            std::size_t failed = 0;
            for (const auto& outcome : outcomes) {
                if (!outcome.result) {
                    ++failed;
                    std::cerr << "exind bench: cell " << exind::sim::model_label(outcome.cell.model)
                              << "/" << exind::bench::estimator_name(outcome.cell.estimator)
                              << " failed: " << outcome.error << '\n';
                }
            }
            return failed == outcomes.size() ? 1 : 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "exind: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
