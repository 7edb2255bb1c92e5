#pragma once

#include <cmath>
#include <vector>

namespace bidegree {

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Standard normal quantile (Acklam's rational approximation, |err| < 1.15e-9).
double normal_quantile(double p);

/// Kolmogorov-Smirnov distance of a sample to the standard normal CDF.
/// The sample is sorted in place.
double ks_distance_normal(std::vector<double>& sample);

}  // namespace bidegree
