#pragma once

#include <span>

namespace crt {

double norm_cdf(double z);
double norm_quantile(double p);  // p in (0,1)
double logistic(double x);
double log1pexp(double x);  // log(1 + e^x) without overflow

// Empirical quantile with linear interpolation of order statistics
// (h = (n-1)*level + 1 on the sorted sample; the R type-7 convention).
double quantile_sorted(std::span<const double> sorted_ascending, double level);

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};
MeanSd mean_sd(std::span<const double> xs);

}  // namespace crt
