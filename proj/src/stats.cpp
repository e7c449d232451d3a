#include "crashcast/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace crashcast {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

namespace {

// Log of the upper tail, stable for large positive z.
double normal_log_sf(double z) {
    return std::log(0.5) + std::log(std::erfc(z / std::numbers::sqrt2));
}

double normal_log_cdf(double z) { return normal_log_sf(-z); }

double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

// Acklam's rational approximation for the inverse normal CDF.
double quantile_estimate(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile argument must be in (0,1)");
    double x = quantile_estimate(p);
    // One Halley step against the erfc-based CDF takes the estimate to
    // machine precision.
    double e = normal_cdf(x) - p;
    double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

DescriptiveStats mean_stddev(std::span<const double> sample) {
    if (sample.size() < 2)
        throw std::invalid_argument("mean_stddev needs at least 2 values");
    double n = static_cast<double>(sample.size());
    double mean = std::accumulate(sample.begin(), sample.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : sample) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

NormalityResult anderson_darling(std::span<const double> sample) {
    const std::size_t n = sample.size();
    if (n < kNormalityMinSamples)
        throw std::invalid_argument("anderson_darling needs at least 8 values");
    auto [mean, stddev] = mean_stddev(sample);
    if (stddev <= 0.0) throw std::invalid_argument("anderson_darling: zero variance");

    std::vector<double> z(sample.begin(), sample.end());
    std::sort(z.begin(), z.end());
    for (double& v : z) v = (v - mean) / stddev;

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double w = static_cast<double>(2 * i + 1);
        sum += w * (normal_log_cdf(z[i]) + normal_log_sf(z[n - 1 - i]));
    }
    double dn = static_cast<double>(n);
    double a2 = -dn - sum / dn;
    double a2s = a2 * (1.0 + 0.75 / dn + 2.25 / (dn * dn));

    double p;
    if (a2s >= 0.6)
        p = std::exp(1.2937 - 5.709 * a2s + 0.0186 * a2s * a2s);
    else if (a2s >= 0.34)
        p = std::exp(0.9177 - 4.279 * a2s - 1.38 * a2s * a2s);
    else if (a2s >= 0.2)
        p = 1.0 - std::exp(-8.318 + 42.796 * a2s - 59.938 * a2s * a2s);
    else
        p = 1.0 - std::exp(-13.436 + 101.14 * a2s - 223.73 * a2s * a2s);
    p = std::min(p, 1.0);

    NormalityResult result;
    result.n = n;
    result.mean = mean;
    result.stddev = stddev;
    result.a2 = a2;
    result.a2_star = a2s;
    result.p_floored = p < kPValueFloor;
    result.p_value = std::max(p, kPValueFloor);
    return result;
}

}  // namespace crashcast
