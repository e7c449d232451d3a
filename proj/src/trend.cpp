#include "crashcast/trend.hpp"

#include <cmath>
#include <stdexcept>

namespace crashcast {

TrendModel fit_linear_trend(const YearlySeries& series) {
    const std::size_t n = series.counts.size();
    if (n < 2) throw std::invalid_argument("fit_linear_trend needs at least 2 points");

    double dn = static_cast<double>(n);
    double t_mean = (dn + 1.0) / 2.0;
    double y_mean = 0.0;
    for (double y : series.counts) y_mean += y;
    y_mean /= dn;

    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dt = static_cast<double>(i + 1) - t_mean;
        sxy += dt * (series.counts[i] - y_mean);
        sxx += dt * dt;
    }
    double slope = sxy / sxx;
    return {y_mean - slope * t_mean, slope};
}

std::vector<double> trend_fitted(const TrendModel& model, std::size_t n) {
    std::vector<double> fitted(n);
    for (std::size_t i = 0; i < n; ++i)
        fitted[i] = model.intercept + model.slope * static_cast<double>(i + 1);
    return fitted;
}

std::vector<double> trend_forecast(const TrendModel& model, std::size_t n, int horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(horizon));
    for (int k = 1; k <= horizon; ++k)
        out[static_cast<std::size_t>(k - 1)] =
            model.intercept + model.slope * static_cast<double>(n + static_cast<std::size_t>(k));
    return out;
}

AccuracyMeasures accuracy(std::span<const double> actual, std::span<const double> fitted,
                          bool skip_zero_actuals) {
    if (actual.size() != fitted.size())
        throw std::invalid_argument("accuracy: length mismatch");
    if (actual.empty()) throw std::invalid_argument("accuracy: empty input");

    double abs_sum = 0.0;
    double sq_sum = 0.0;
    double pct_sum = 0.0;
    std::size_t pct_terms = 0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        double e = actual[i] - fitted[i];
        abs_sum += std::abs(e);
        sq_sum += e * e;
        if (actual[i] == 0.0) {
            if (!skip_zero_actuals)
                throw std::invalid_argument("accuracy: MAPE undefined for zero actual value");
            continue;
        }
        pct_sum += std::abs(e) / std::abs(actual[i]);
        ++pct_terms;
    }
    double n = static_cast<double>(actual.size());
    double mape = pct_terms == 0 ? 0.0 : 100.0 * pct_sum / static_cast<double>(pct_terms);
    return {mape, abs_sum / n, sq_sum / n};
}

}  // namespace crashcast
