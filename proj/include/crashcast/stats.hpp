#pragma once

#include <cstddef>
#include <span>

namespace crashcast {

// Standard normal CDF via erfc; accurate to better than 1e-12.
double normal_cdf(double z);

// Inverse standard normal CDF, refined to ~1e-15 relative accuracy.
double normal_quantile(double p);

struct DescriptiveStats {
    double mean;
    double stddev;  // n-1 denominator
};

// Requires at least 2 values.
DescriptiveStats mean_stddev(std::span<const double> sample);

struct NormalityResult {
    std::size_t n;
    double mean;
    double stddev;
    double a2;       // Anderson-Darling A^2, parameters estimated from the sample
    double a2_star;  // A^2 * (1 + 0.75/n + 2.25/n^2)
    double p_value;  // floored at 0.005
    bool p_floored;  // true when the approximation fell below the floor
};

inline constexpr std::size_t kNormalityMinSamples = 8;
inline constexpr double kPValueFloor = 0.005;

// Anderson-Darling normality test with both parameters estimated from the
// sample. Requires n >= 8 and nonzero variance.
NormalityResult anderson_darling(std::span<const double> sample);

}  // namespace crashcast
