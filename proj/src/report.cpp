#include "crashcast/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace crashcast {

namespace {

using json = nlohmann::ordered_json;

double round_to(double x, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::round(x * scale) / scale;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json accuracy_json(const AccuracyMeasures& a) {
    return {{"mape", round_to(a.mape, 3)},
            {"mad", round_to(a.mad, 3)},
            {"msd", round_to(a.msd, 3)},
            {"raw", {{"mape", a.mape}, {"mad", a.mad}, {"msd", a.msd}}}};
}

}  // namespace

AnalysisBundle make_bundle(const YearlySeries& series, const BundleOptions& options) {
    AnalysisBundle bundle;
    bundle.series = series;
    bundle.hash = series_hash(series);
    bundle.source = options.source;

    bundle.trend = fit_linear_trend(series);
    auto fitted = trend_fitted(bundle.trend, series.size());
    bundle.trend_accuracy = accuracy(series.counts, fitted);
    bundle.trend_forecasts = trend_forecast(bundle.trend, series.size(), options.horizon);

    double alpha = options.alpha ? *options.alpha : optimize_alpha(series);
    bundle.ses = ses_fit(series, alpha);
    bundle.ses_accuracy = ses_accuracy(series, bundle.ses);
    bundle.forecast = ses_forecast(bundle.ses, options.horizon, options.confidence);

    if (options.with_normality) bundle.normality = anderson_darling(series.counts);
    return bundle;
}

std::string render_report(const AnalysisBundle& bundle) {
    if (bundle.hash != series_hash(bundle.series))
        throw std::logic_error("bundle hash does not match its series");

    const YearlySeries& s = bundle.series;
    json doc;
    doc["metadata"] = {{"source", bundle.source}, {"series_hash", hash_hex(bundle.hash)}};
    doc["series"] = {{"start_year", s.start_year}, {"counts", s.counts}};

    json trend;
    trend["model"] = {{"intercept", round_to(bundle.trend.intercept, 4)},
                      {"slope", round_to(bundle.trend.slope, 4)},
                      {"raw", {{"intercept", bundle.trend.intercept},
                               {"slope", bundle.trend.slope}}}};
    trend["accuracy"] = accuracy_json(bundle.trend_accuracy);
    json tf = json::array();
    for (std::size_t k = 0; k < bundle.trend_forecasts.size(); ++k)
        tf.push_back({{"period", s.last_year() + 1 + static_cast<int>(k)},
                      {"forecast", round_to(bundle.trend_forecasts[k], 3)},
                      {"raw", bundle.trend_forecasts[k]}});
    trend["forecasts"] = tf;
    doc["trend"] = trend;

    json ses;
    ses["alpha"] = bundle.ses.alpha;
    ses["initial_smooth"] = round_to(bundle.ses.initial_smooth, 3);
    json table = json::array();
    for (std::size_t t = 0; t < s.size(); ++t)
        table.push_back({{"period", s.year_at(t)},
                         {"fatality", s.counts[t]},
                         {"smooth", round_to(bundle.ses.smoothed[t], 3)},
                         {"predict", round_to(bundle.ses.predicted[t], 3)},
                         {"error", round_to(bundle.ses.errors[t], 4)},
                         {"raw", {{"smooth", bundle.ses.smoothed[t]},
                                  {"predict", bundle.ses.predicted[t]},
                                  {"error", bundle.ses.errors[t]}}}});
    ses["table"] = table;
    ses["accuracy"] = accuracy_json(bundle.ses_accuracy);
    json ff = json::array();
    for (std::size_t k = 0; k < bundle.forecast.points.size(); ++k)
        ff.push_back({{"period", bundle.forecast.first_period + static_cast<int>(k)},
                      {"forecast", round_to(bundle.forecast.points[k], 3)},
                      {"lower", round_to(bundle.forecast.lower[k], 3)},
                      {"upper", round_to(bundle.forecast.upper[k], 3)},
                      {"raw", {{"forecast", bundle.forecast.points[k]},
                               {"lower", bundle.forecast.lower[k]},
                               {"upper", bundle.forecast.upper[k]}}}});
    ses["forecasts"] = ff;
    ses["confidence"] = bundle.forecast.confidence;
    ses["raw"] = {{"initial_smooth", bundle.ses.initial_smooth}};
    doc["ses"] = ses;

    if (bundle.normality) {
        const NormalityResult& nr = *bundle.normality;
        doc["normality"] = {{"n", nr.n},
                            {"mean", round_to(nr.mean, 3)},
                            {"stddev", round_to(nr.stddev, 3)},
                            {"a2", round_to(nr.a2, 4)},
                            {"a2_star", round_to(nr.a2_star, 4)},
                            {"p_value", round_to(nr.p_value, 4)},
                            {"p_floored", nr.p_floored},
                            {"raw", {{"mean", nr.mean},
                                     {"stddev", nr.stddev},
                                     {"a2", nr.a2},
                                     {"a2_star", nr.a2_star},
                                     {"p_value", nr.p_value}}}};
    }

    return doc.dump(2) + "\n";
}

}  // namespace crashcast
