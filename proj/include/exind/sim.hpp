#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "exind/rng.hpp"
#include "exind/series.hpp"

namespace exind::sim {

// Process catalogue for the benchmark ground truths. Defaults are the
// parameterizations whose extremal indices are catalogued below.

// Cauchy AR(1): X_t = rho X_{t-1} + (1 - |rho|) eps_t, eps_t standard
// Cauchy. The innovation scale keeps the stationary marginal standard
// Cauchy.
struct ARCau {
    double rho = -0.6;
};

// Negatively correlated uniform AR(1): X_t = -(1/r) X_{t-1} + eps_t with
// eps_t uniform on {1/r, ..., r/r}; stationary marginal uniform(0, 1).
struct ARUnif {
    int r = 2;
};

// Moving maxima: X_t = max_j alphas[j] Z_{t-j}, Z iid standard Frechet.
// Weights sum to 1, so the marginal is standard Frechet.
struct MM {
    std::vector<double> alphas = {2.0 / 6.0, 1.0 / 6.0, 3.0 / 6.0};
};

// Max-autoregressive: X_t = max(phi X_{t-1}, (1 - phi) Z_t), Z iid standard
// Frechet; the innovation scaling keeps standard Frechet marginals.
struct MAR {
    double phi = 0.5;
};

// Stationary Markov chain with standard Gumbel marginals whose consecutive
// pairs follow the bivariate logistic df
// G(x, y) = exp(-(e^{-x/alpha} + e^{-y/alpha})^alpha).
struct MCLogistic {
    double alpha = 0.5;
};

// ARCH(1): X_t = sqrt(beta + lambda X_{t-1}^2) W_t, W_t iid standard normal.
struct ARCH {
    double lambda = 0.5;
    double beta = 1.9e-5;
};

struct ModelSpec {
    std::variant<ARCau, ARUnif, MM, MAR, MCLogistic, ARCH> process;
    std::size_t burn_in = 1000;
};

inline void validate(const ModelSpec& spec) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ARCau>) {
                if (!(p.rho > -1.0 && p.rho < 1.0) || p.rho == 0.0)
                    throw std::invalid_argument("ARCau: rho must lie in (-1,0) or (0,1)");
            } else if constexpr (std::is_same_v<T, ARUnif>) {
                if (p.r < 2) throw std::invalid_argument("ARUnif: r must be an integer >= 2");
            } else if constexpr (std::is_same_v<T, MM>) {
                if (p.alphas.empty()) throw std::invalid_argument("MM: alphas must be nonempty");
                double sum = 0.0;
                for (double a : p.alphas) {
                    if (!(a >= 0.0)) throw std::invalid_argument("MM: alphas must be nonnegative");
                    sum += a;
                }
                if (std::abs(sum - 1.0) > 1e-12)
                    throw std::invalid_argument("MM: alphas must sum to 1");
            } else if constexpr (std::is_same_v<T, MAR>) {
                if (!(p.phi > 0.0 && p.phi < 1.0))
                    throw std::invalid_argument("MAR: phi must lie in (0,1)");
            } else if constexpr (std::is_same_v<T, MCLogistic>) {
                if (!(p.alpha > 0.0 && p.alpha <= 1.0))
                    throw std::invalid_argument("MCLogistic: alpha must lie in (0,1]");
            } else if constexpr (std::is_same_v<T, ARCH>) {
                if (!(p.lambda > 0.0 && p.lambda < 1.0))
                    throw std::invalid_argument("ARCH: lambda must lie in (0,1)");
                if (!(p.beta > 0.0)) throw std::invalid_argument("ARCH: beta must be positive");
            }
        },
        spec.process);
}

// Conditional df F_{Y|X}(y | x) of the bivariate logistic extreme value
// distribution with standard Gumbel margins and dependence alpha. Evaluated
// in log space so extreme brackets cannot overflow.
inline double logistic_conditional_cdf(double y, double x, double alpha) {
    const double a = -x / alpha;
    const double b = -y / alpha;
    const double m = std::max(a, b);
    const double log_s = m + std::log(std::exp(a - m) + std::exp(b - m));
    const double alpha_log_s = alpha * log_s;
    if (alpha_log_s > 700.0) return 0.0;  // V overflows => df is 0 there
    const double v = std::exp(alpha_log_s);
    const double log_f = -v + (alpha - 1.0) * log_s - x / alpha + x + std::exp(-x);
    return std::exp(std::min(0.0, log_f));
}

// Inverse of the conditional df in the probability u by bracketed bisection;
// absolute tolerance 1e-10 on the probability scale.
inline double logistic_conditional_quantile(double x, double u, double alpha) {
    double lo = std::min(x, 0.0) - 8.0;
    double hi = std::max(x, 0.0) + 8.0;
    double step = 8.0;
    for (int i = 0; i < 100 && logistic_conditional_cdf(lo, x, alpha) > u; ++i) {
        lo -= step;
        step *= 2.0;
    }
    step = 8.0;
    for (int i = 0; i < 100 && logistic_conditional_cdf(hi, x, alpha) < u; ++i) {
        hi += step;
        step *= 2.0;
    }
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        mid = 0.5 * (lo + hi);
        const double f = logistic_conditional_cdf(mid, x, alpha);
        if (std::abs(f - u) <= 1e-10 || hi - lo < 1e-13 * std::max(1.0, std::abs(mid))) break;
        if (f < u) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return mid;
}

// n observations of the process after discarding burn_in steps. Recursive
// models start from a draw of their stationary marginal (ARCH from 0) and
// step burn_in + n times, keeping the last n.
inline TimeSeries simulate(const ModelSpec& spec, std::size_t n, Rng& rng) {
    validate(spec);
    if (n == 0) throw std::invalid_argument("simulate: n must be positive");
    const std::size_t burn = spec.burn_in;
    std::vector<double> out;
    out.reserve(n);

    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            const std::size_t total = burn + n;
            if constexpr (std::is_same_v<T, ARCau>) {
                const double scale = 1.0 - std::abs(p.rho);
                double x = rng.standard_cauchy();
                for (std::size_t t = 0; t < total; ++t) {
                    x = p.rho * x + scale * rng.standard_cauchy();
                    if (t >= burn) out.push_back(x);
                }
            } else if constexpr (std::is_same_v<T, ARUnif>) {
                const double r = static_cast<double>(p.r);
                double x = rng.uniform01();
                for (std::size_t t = 0; t < total; ++t) {
                    const double eps =
                        static_cast<double>(rng.uniform_below(static_cast<std::uint64_t>(p.r)) + 1) / r;
                    x = -x / r + eps;
                    if (t >= burn) out.push_back(x);
                }
            } else if constexpr (std::is_same_v<T, MM>) {
                const std::size_t q = p.alphas.size() - 1;
                std::vector<double> z(total + q);
                for (auto& v : z) v = rng.standard_frechet();
                for (std::size_t t = burn; t < total; ++t) {
                    double x = 0.0;
                    for (std::size_t j = 0; j <= q; ++j) {
                        x = std::max(x, p.alphas[j] * z[q + t - j]);
                    }
                    out.push_back(x);
                }
            } else if constexpr (std::is_same_v<T, MAR>) {
                double x = rng.standard_frechet();
                for (std::size_t t = 0; t < total; ++t) {
                    x = std::max(p.phi * x, (1.0 - p.phi) * rng.standard_frechet());
                    if (t >= burn) out.push_back(x);
                }
            } else if constexpr (std::is_same_v<T, MCLogistic>) {
                double x = rng.standard_gumbel();
                for (std::size_t t = 0; t < total; ++t) {
                    x = logistic_conditional_quantile(x, rng.uniform01(), p.alpha);
                    if (t >= burn) out.push_back(x);
                }
            } else if constexpr (std::is_same_v<T, ARCH>) {
                double x = 0.0;
                for (std::size_t t = 0; t < total; ++t) {
                    x = std::sqrt(p.beta + p.lambda * x * x) * rng.standard_normal();
                    if (t >= burn) out.push_back(x);
                }
            }
        },
        spec.process);

    return TimeSeries(std::move(out));
}

// Catalogued extremal index of the process. Closed forms where known;
// MCLogistic and ARCH are tabulated values for the catalogued parameters
// only. Uncatalogued parameterizations raise std::domain_error.
inline double theoretical_theta(const ModelSpec& spec) {
    validate(spec);
    return std::visit(
        [](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ARCau>) {
                if (p.rho >= 0.0)
                    throw std::domain_error("theoretical_theta: ARCau catalogued for rho < 0 only");
                return 1.0 - p.rho * p.rho;
            } else if constexpr (std::is_same_v<T, ARUnif>) {
                const double r = static_cast<double>(p.r);
                return 1.0 - 1.0 / (r * r);
            } else if constexpr (std::is_same_v<T, MM>) {
                return *std::max_element(p.alphas.begin(), p.alphas.end());
            } else if constexpr (std::is_same_v<T, MAR>) {
                return 1.0 - p.phi;
            } else if constexpr (std::is_same_v<T, MCLogistic>) {
                if (std::abs(p.alpha - 0.5) > 1e-12)
                    throw std::domain_error(
                        "theoretical_theta: MCLogistic tabulated for alpha = 0.5 only");
                return 0.328;
            } else {
                static_assert(std::is_same_v<T, ARCH>);
                if (std::abs(p.lambda - 0.5) > 1e-12)
                    throw std::domain_error("theoretical_theta: ARCH tabulated for lambda = 0.5 only");
                return 0.835;
            }
        },
        spec.process);
}

inline const char* model_name(const ModelSpec& spec) {
    return std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ARCau>) return "ARCau";
            if constexpr (std::is_same_v<T, ARUnif>) return "ARUnif";
            if constexpr (std::is_same_v<T, MM>) return "MM";
            if constexpr (std::is_same_v<T, MAR>) return "MAR";
            if constexpr (std::is_same_v<T, MCLogistic>) return "MC";
            if constexpr (std::is_same_v<T, ARCH>) return "ARCH";
        },
        spec.process);
}

// Compact "Name(param=value;...)" label for CSV and logs; parameter values
// use %g, semicolons keep the label comma-free.
inline std::string model_label(const ModelSpec& spec) {
    char buf[160];
    return std::visit(
        [&](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ARCau>) {
                std::snprintf(buf, sizeof buf, "ARCau(rho=%g)", p.rho);
                return buf;
            } else if constexpr (std::is_same_v<T, ARUnif>) {
                std::snprintf(buf, sizeof buf, "ARUnif(r=%d)", p.r);
                return buf;
            } else if constexpr (std::is_same_v<T, MM>) {
                std::string label = "MM(alphas=";
                for (std::size_t j = 0; j < p.alphas.size(); ++j) {
                    std::snprintf(buf, sizeof buf, "%s%g", j ? ";" : "", p.alphas[j]);
                    label += buf;
                }
                return label + ")";
            } else if constexpr (std::is_same_v<T, MAR>) {
                std::snprintf(buf, sizeof buf, "MAR(phi=%g)", p.phi);
                return buf;
            } else if constexpr (std::is_same_v<T, MCLogistic>) {
                std::snprintf(buf, sizeof buf, "MC(alpha=%g)", p.alpha);
                return buf;
            } else {
                static_assert(std::is_same_v<T, ARCH>);
                std::snprintf(buf, sizeof buf, "ARCH(lambda=%g;beta=%g)", p.lambda, p.beta);
                return buf;
            }
        },
        spec.process);
}

}  // namespace exind::sim
