#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace exind {

// SplitMix64 finalizer (Steele, Lea & Flood 2014); turns arbitrary 64-bit
// keys into well-mixed seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of stream `stream` under `master`. Depends only on (master, stream),
// so enlarging a replicate set keeps existing streams intact and serial and
// parallel execution see identical draws.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL));
}

// Seedable generator with explicit scalar samplers. The engine's integer
// sequence is pinned by the standard and every double mapping is spelled out
// below, so a seed reproduces the same draws on any conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on the open interval (0, 1); never returns an endpoint.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform on {0, 1, ..., n - 1}. Modulo bias is below n / 2^64.
    std::uint64_t uniform_below(std::uint64_t n) { return next_u64() % n; }

    // Inverse-transform samplers driven by one uniform each.
    double standard_frechet() { return -1.0 / std::log(uniform01()); }
    double standard_gumbel() { return -std::log(-std::log(uniform01())); }
    double standard_cauchy() { return std::tan(std::numbers::pi * (uniform01() - 0.5)); }

    // Box-Muller; consumes exactly two uniforms per draw.
    double standard_normal() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace exind
