#include "crt/stats.hpp"

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <cstddef>

#include "crt/error.hpp"

namespace crt {

double norm_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double norm_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw DomainError("normal quantile requires p in (0,1)");
    }
    static const boost::math::normal_distribution<double> std_normal(0.0, 1.0);
    return boost::math::quantile(std_normal, p);
}

double logistic(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double log1pexp(double x) {
    if (x > 33.0) return x;
    if (x > -37.0) return std::log1p(std::exp(x));
    return std::exp(x);
}

double quantile_sorted(std::span<const double> sorted, double level) {
    if (sorted.empty()) throw DomainError("quantile of an empty sample");
    if (!(level > 0.0) || !(level < 1.0)) {
        throw DomainError("quantile level must be in (0,1)");
    }
    const std::size_t n = sorted.size();
    const double h = static_cast<double>(n - 1) * level;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

MeanSd mean_sd(std::span<const double> xs) {
    MeanSd out;
    if (xs.empty()) return out;
    double sum = 0.0;
    for (double x : xs) sum += x;
    out.mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return out;
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - out.mean;
        ss += d * d;
    }
    out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    return out;
}

}  // namespace crt
