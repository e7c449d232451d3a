#pragma once

#include <vector>

#include "crashcast/series.hpp"
#include "crashcast/trend.hpp"

namespace crashcast {

// Search domain for the smoothing constant. The upper bound sits above 1
// because optimal fits on short series can land there.
inline constexpr double kAlphaMin = 1e-4;
inline constexpr double kAlphaMax = 2.0;

// Single-exponential-smoothing fit: S_t = alpha*y_t + (1-alpha)*S_{t-1},
// P_t = S_{t-1} (P_1 = S_0), e_t = y_t - P_t. All columns aligned with the series.
struct SesFit {
    double alpha;
    double initial_smooth;  // S_0, from backcasting
    int start_year;
    std::vector<double> smoothed;
    std::vector<double> predicted;
    std::vector<double> errors;

    double sse() const;
    double mad() const;  // mean absolute one-step error
    double last_smoothed() const { return smoothed.back(); }
};

// Per-horizon point forecasts with symmetric bounds. For SES the forecast
// function is flat, so all points (and bounds) are equal.
struct ForecastSet {
    int first_period;
    std::vector<double> points;
    std::vector<double> lower;
    std::vector<double> upper;
    double confidence;
};

// S_0 from the smoothing recursion applied to the reversed series, seeded at
// the series mean.
double backcast_init(const YearlySeries& series, double alpha);

SesFit ses_fit(const YearlySeries& series, double alpha);

AccuracyMeasures ses_accuracy(const YearlySeries& series, const SesFit& fit);

// Minimizes SSE(alpha) over [lo, hi]: coarse 51-point grid, then golden-section
// refinement around the best bracket. Ties break toward the smaller alpha.
// Requires series length >= 3.
double optimize_alpha(const YearlySeries& series, double lo = kAlphaMin,
                      double hi = kAlphaMax);

// Flat forecast at the last smoothed value; half-width z * 1.25 * MAD at the
// given confidence.
ForecastSet ses_forecast(const SesFit& fit, int horizon, double confidence);

}  // namespace crashcast
