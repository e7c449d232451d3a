#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crashcast/series.hpp"
#include "crashcast/smoothing.hpp"
#include "crashcast/stats.hpp"
#include "crashcast/trend.hpp"

namespace crashcast {

// All analyses derived from one series. Every sub-result is tied to the series
// through hash; render_report refuses a bundle whose hash does not match.
struct AnalysisBundle {
    YearlySeries series;
    std::uint64_t hash;
    std::string source;  // filter/input description for the metadata block

    TrendModel trend;
    AccuracyMeasures trend_accuracy;
    std::vector<double> trend_forecasts;

    SesFit ses;
    AccuracyMeasures ses_accuracy;
    ForecastSet forecast;

    std::optional<NormalityResult> normality;
};

struct BundleOptions {
    std::optional<double> alpha;  // absent: optimize
    int horizon = 4;
    double confidence = 0.95;
    bool with_normality = false;
    std::string source = "series";
};

AnalysisBundle make_bundle(const YearlySeries& series, const BundleOptions& options);

// JSON document with deterministic key order; table columns rounded to 3
// decimals (errors to 4), full-precision values alongside under "raw".
// Re-rendering an identical bundle is byte-identical.
std::string render_report(const AnalysisBundle& bundle);

}  // namespace crashcast
