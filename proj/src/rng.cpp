#include "crt/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "crt/error.hpp"

namespace crt {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ mix64(index + 1));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(seed, a), b);
}

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_pos() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(t);
    has_cached_normal_ = true;
    return r * std::cos(t);
}

double Rng::exponential() {
    return -std::log(uniform_pos());
}

double Rng::gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0)) {
        throw DomainError("gamma draw requires shape > 0 and rate > 0");
    }
    if (shape < 1.0) {
        // Boost the shape above 1, then apply the Stuart power correction.
        const double g = gamma(shape + 1.0, 1.0);
        return g * std::pow(uniform_pos(), 1.0 / shape) / rate;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

double Rng::beta(double a, double b) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double x = gamma(a, 1.0);
        const double y = gamma(b, 1.0);
        if (x + y > 0.0) return x / (x + y);
    }
    // Both shapes so small that every draw underflowed; fall back to the
    // two-point limit law of Beta(a->0, b->0).
    return uniform() < a / (a + b) ? 1.0 : 0.0;
}

std::vector<double> Rng::dirichlet_symmetric(double a, int k) {
    if (k < 1 || !(a > 0.0)) {
        throw DomainError("dirichlet draw requires k >= 1 and a > 0");
    }
    std::vector<double> p(static_cast<std::size_t>(k));
    double total = 0.0;
    for (auto& v : p) {
        v = gamma(a, 1.0);
        total += v;
    }
    if (total <= 0.0) {
        std::fill(p.begin(), p.end(), 1.0 / k);
        return p;
    }
    for (auto& v : p) v /= total;
    return p;
}

std::vector<long long> Rng::multinomial(long long n, std::span<const double> p) {
    std::vector<double> cum(p.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        acc += p[j];
        cum[j] = acc;
    }
    std::vector<long long> counts(p.size(), 0);
    for (long long i = 0; i < n; ++i) {
        const double u = uniform() * acc;
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        const std::size_t j = std::min(static_cast<std::size_t>(it - cum.begin()), p.size() - 1);
        ++counts[j];
    }
    return counts;
}

}  // namespace crt
