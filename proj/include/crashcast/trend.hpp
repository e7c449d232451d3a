#pragma once

#include <span>
#include <vector>

#include "crashcast/series.hpp"

namespace crashcast {

// y_hat_t = intercept + slope * t, with t = 1..n over the series.
struct TrendModel {
    double intercept;
    double slope;
};

struct AccuracyMeasures {
    double mape;  // percent
    double mad;   // mean absolute error
    double msd;   // mean squared error
};

// Ordinary least squares over (t, y_t), t = 1..n. Requires length >= 2.
TrendModel fit_linear_trend(const YearlySeries& series);

// In-sample fitted values for t = 1..n.
std::vector<double> trend_fitted(const TrendModel& model, std::size_t n);

// Point forecasts for t = n+1 .. n+horizon.
std::vector<double> trend_forecast(const TrendModel& model, std::size_t n, int horizon);

// MAPE/MAD/MSD of fitted against actual. A zero actual value makes MAPE
// undefined and throws, unless skip_zero_actuals renormalizes over the kept terms.
AccuracyMeasures accuracy(std::span<const double> actual, std::span<const double> fitted,
                          bool skip_zero_actuals = false);

}  // namespace crashcast
