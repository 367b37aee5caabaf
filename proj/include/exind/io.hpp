#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exind/bench.hpp"
#include "exind/series.hpp"
#include "exind/sim.hpp"

namespace exind::io {

// Shortest decimal form with 17 significant digits; round-trips through
// strtod to the identical double.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Full-consumption finite double parse of a trimmed token.
inline std::optional<double> parse_double(std::string_view token) {
    token = trim(token);
    if (token.empty()) return std::nullopt;
    const std::string owned(token);
    char* end = nullptr;
    const double v = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size()) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

// Numeric token that may be written as a fraction "p/q" (handy for exact
// weights like 2/6).
inline std::optional<double> parse_number_or_fraction(std::string_view token) {
    token = trim(token);
    const std::size_t slash = token.find('/');
    if (slash == std::string_view::npos) return parse_double(token);
    const auto num = parse_double(token.substr(0, slash));
    const auto den = parse_double(token.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
}

// A parsed single-column dataset. Keeps the 1-based file row of the first
// value so downstream diagnostics can point at the offending line.
struct Dataset {
    std::vector<double> values;
    std::size_t first_data_row = 1;
};

// Reads a newline-delimited single-column file. An optional first row that
// does not parse as a number is treated as a header; every later row must be
// one finite real. Rejects NaN/infinity/non-numeric rows with the 1-based
// row number.
inline Dataset read_dataset(std::istream& in, const std::string& name) {
    Dataset data;
    std::string line;
    std::size_t row = 0;
    bool saw_content = false;  // the first non-blank row may be a header
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string_view token = trim(line);
        if (token.empty()) continue;
        const auto value = parse_double(token);
        if (!value) {
            if (!saw_content) {
                saw_content = true;  // header row
                continue;
            }
            throw std::invalid_argument(name + ": row " + std::to_string(row) +
                                        ": not a finite number: '" + std::string(token) + "'");
        }
        if (data.values.empty()) data.first_data_row = row;
        saw_content = true;
        data.values.push_back(*value);
    }
    if (data.values.empty()) throw std::invalid_argument(name + ": no data rows");
    return data;
}

inline Dataset read_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return read_dataset(in, path);
}

inline TimeSeries to_time_series(const Dataset& data) { return TimeSeries(data.values); }

// One header row, then one value per row at 17 significant digits, so a
// write/read round trip reproduces the doubles exactly.
inline void write_series(std::ostream& out, std::span<const double> values,
                         std::string_view header = "value") {
    out << header << '\n';
    for (double v : values) out << format_double(v) << '\n';
}

inline void write_series(const std::string& path, std::span<const double> values,
                         std::string_view header = "value") {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_series(out, values, header);
    if (!out) throw std::runtime_error("write failed: " + path);
}

// log(P_t / P_{t-1}) for consecutive prices. Prices must be strictly
// positive; the error names the offending file row.
inline std::vector<double> log_returns(const Dataset& prices) {
    if (prices.values.size() < 2)
        throw std::invalid_argument("log_returns: need at least 2 prices");
    for (std::size_t i = 0; i < prices.values.size(); ++i) {
        if (!(prices.values[i] > 0.0)) {
            throw std::invalid_argument("log_returns: row " +
                                        std::to_string(prices.first_data_row + i) +
                                        ": nonpositive price " + format_double(prices.values[i]));
        }
    }
    std::vector<double> returns(prices.values.size() - 1);
    for (std::size_t i = 0; i + 1 < prices.values.size(); ++i) {
        returns[i] = std::log(prices.values[i + 1] / prices.values[i]);
    }
    return returns;
}

// Builds a ModelSpec from a model name and key=value overrides. Unrecognized
// keys are the caller's to reject (they may be cell keys, not model keys).
inline sim::ModelSpec parse_model(std::string_view name,
                                  const std::map<std::string, std::string>& params) {
    auto number = [&](const char* key, double fallback) {
        const auto it = params.find(key);
        if (it == params.end()) return fallback;
        const auto v = parse_number_or_fraction(it->second);
        if (!v) throw std::invalid_argument(std::string("bad value for ") + key + ": " + it->second);
        return *v;
    };

    sim::ModelSpec spec;
    if (name == "ARCau") {
        spec.process = sim::ARCau{number("rho", sim::ARCau{}.rho)};
    } else if (name == "ARUnif") {
        const double r = number("r", static_cast<double>(sim::ARUnif{}.r));
        if (r != std::floor(r)) throw std::invalid_argument("ARUnif: r must be an integer");
        spec.process = sim::ARUnif{static_cast<int>(r)};
    } else if (name == "MM") {
        sim::MM mm;
        if (const auto it = params.find("alphas"); it != params.end()) {
            mm.alphas.clear();
            std::string token;
            std::istringstream parts{it->second};
            while (std::getline(parts, token, ';')) {
                const auto v = parse_number_or_fraction(token);
                if (!v) throw std::invalid_argument("MM: bad alpha: " + token);
                mm.alphas.push_back(*v);
            }
        }
        spec.process = std::move(mm);
    } else if (name == "MAR") {
        spec.process = sim::MAR{number("phi", sim::MAR{}.phi)};
    } else if (name == "MC" || name == "MCLogistic") {
        spec.process = sim::MCLogistic{number("alpha", sim::MCLogistic{}.alpha)};
    } else if (name == "ARCH") {
        spec.process = sim::ARCH{number("lambda", sim::ARCH{}.lambda),
                                 number("beta", sim::ARCH{}.beta)};
    } else {
        throw std::invalid_argument("unknown model: " + std::string(name) +
                                    " (expected ARCau|ARUnif|MM|MAR|MC|ARCH)");
    }
    spec.burn_in = static_cast<std::size_t>(number("burnin", static_cast<double>(spec.burn_in)));
    sim::validate(spec);
    return spec;
}

// Study config: one cell per line of whitespace-separated key=value tokens,
// '#' comments. Required keys: model, estimator, tuning, n, K, seed.
// Optional: M (new estimator, default 100) and model parameter overrides
// (rho, r, alphas, phi, alpha, lambda, beta, burnin). Errors carry the
// 1-based line number.
inline std::vector<bench::BenchCell> parse_study_config(std::istream& in,
                                                        const std::string& name) {
    static const std::map<std::string, int> kCellKeys = {
        {"model", 0}, {"estimator", 0}, {"tuning", 0}, {"n", 0}, {"K", 0}, {"M", 0}, {"seed", 0}};
    static const std::map<std::string, int> kModelKeys = {
        {"rho", 0},   {"r", 0},    {"alphas", 0}, {"phi", 0},
        {"alpha", 0}, {"lambda", 0}, {"beta", 0}, {"burnin", 0}};

    std::vector<bench::BenchCell> cells;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto fail = [&](const std::string& msg) -> void {
            throw std::invalid_argument(name + ": line " + std::to_string(line_no) + ": " + msg);
        };
        if (const std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens{line};
        std::map<std::string, std::string> kv;
        std::string token;
        while (tokens >> token) {
            const std::size_t eq = token.find('=');
            if (eq == std::string::npos || eq == 0) fail("expected key=value, got '" + token + "'");
            const std::string key = token.substr(0, eq);
            if (!kCellKeys.count(key) && !kModelKeys.count(key)) fail("unknown key '" + key + "'");
            if (kv.count(key)) fail("duplicate key '" + key + "'");
            kv[key] = token.substr(eq + 1);
        }
        if (kv.empty()) continue;

        for (const char* required : {"model", "estimator", "tuning", "n", "K", "seed"}) {
            if (!kv.count(required)) fail(std::string("missing required key '") + required + "'");
        }

        bench::BenchCell cell;
        const auto estimator = bench::estimator_from_name(kv["estimator"]);
        if (!estimator) fail("unknown estimator '" + kv["estimator"] + "'");
        cell.estimator = *estimator;

        const auto integer = [&](const char* key, std::uint64_t lo) {
            const auto v = parse_double(kv[key]);
            if (!v || *v != std::floor(*v) || *v < static_cast<double>(lo))
                fail(std::string("bad value for ") + key + ": '" + kv[key] + "'");
            return static_cast<std::uint64_t>(*v);
        };
        const auto tuning = parse_double(kv["tuning"]);
        if (!tuning) fail("bad value for tuning: '" + kv["tuning"] + "'");
        cell.tuning = *tuning;
        cell.n = integer("n", 1);
        cell.replicates = integer("K", 2);
        cell.inner_replicates = kv.count("M") ? integer("M", 1) : 100;
        cell.seed = integer("seed", 0);

        std::map<std::string, std::string> model_params;
        for (const auto& [key, value] : kv) {
            if (kModelKeys.count(key)) model_params[key] = value;
        }
        try {
            cell.model = parse_model(kv["model"], model_params);
        } catch (const std::exception& e) {
            fail(e.what());
        }
        cells.push_back(std::move(cell));
    }
    if (cells.empty()) throw std::invalid_argument(name + ": no cells declared");
    return cells;
}

inline std::vector<bench::BenchCell> read_study_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_study_config(in, path);
}

// Summary CSV: one row per cell; K is the effective replicate count. Failed
// cells leave rmse/abias empty and carry the error in the last column.
inline void write_study_summary(std::ostream& out,
                                std::span<const bench::CellOutcome> outcomes) {
    out << "model,estimator,tuning,n,K,M,rmse,abias,error\n";
    for (const auto& outcome : outcomes) {
        const auto& cell = outcome.cell;
        out << sim::model_label(cell.model) << ',' << bench::estimator_name(cell.estimator) << ','
            << format_double(cell.tuning) << ',' << cell.n << ',';
        if (outcome.result) {
            out << outcome.result->effective_replicates << ',' << cell.inner_replicates << ','
                << format_double(outcome.result->rmse) << ','
                << format_double(outcome.result->abias) << ",\n";
        } else {
            std::string error = outcome.error;
            for (char& c : error) {
                if (c == ',' || c == '\n') c = ';';
            }
            out << cell.replicates << ',' << cell.inner_replicates << ",,," << error << '\n';
        }
    }
}

// Raw per-replicate CSV for audit; missing replicates leave the estimate
// column empty.
inline void write_study_replicates(std::ostream& out,
                                   std::span<const bench::CellOutcome> outcomes) {
    out << "model,estimator,tuning,n,K,M,replicate,estimate\n";
    for (const auto& outcome : outcomes) {
        if (!outcome.result) continue;
        const auto& cell = outcome.cell;
        const auto& estimates = outcome.result->estimates;
        for (std::size_t k = 0; k < estimates.size(); ++k) {
            out << sim::model_label(cell.model) << ',' << bench::estimator_name(cell.estimator)
                << ',' << format_double(cell.tuning) << ',' << cell.n << ','
                << outcome.result->effective_replicates << ',' << cell.inner_replicates << ','
                << k << ',';
            if (std::isfinite(estimates[k])) out << format_double(estimates[k]);
            out << '\n';
        }
    }
}

}  // namespace exind::io
