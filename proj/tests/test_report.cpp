#include <cmath>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "crashcast/plot.hpp"
#include "crashcast/report.hpp"

using namespace crashcast;
using json = nlohmann::json;

namespace {

const YearlySeries kDriver{2015, {394, 454, 399, 371, 350}};

AnalysisBundle driver_bundle(bool normality = false) {
    BundleOptions options;
    options.alpha = 0.560693;
    options.horizon = 4;
    options.confidence = 0.95;
    options.with_normality = normality;
    options.source = "driver";
    return make_bundle(kDriver, options);
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("report carries the table layout") {
    auto doc = json::parse(render_report(driver_bundle()));
    auto table = doc.at("ses").at("table");
    REQUIRE(table.size() == 5);
    for (const auto& row : table) {
        CHECK(row.contains("fatality"));
        CHECK(row.contains("smooth"));
        CHECK(row.contains("predict"));
        CHECK(row.contains("error"));
    }
    CHECK(table[0].at("fatality") == 394);
    CHECK(std::abs(table[0].at("smooth").get<double>() - 399.874) < 0.06);
    CHECK(doc.at("trend").at("accuracy").at("mape").get<double>() ==
          doctest::Approx(4.728).epsilon(1e-3));
    CHECK(doc.at("ses").at("forecasts").size() == 4);
}

TEST_CASE("report omits normality unless requested") {
    auto without = json::parse(render_report(driver_bundle(false)));
    CHECK(!without.contains("normality"));
    // the driver series is too short for the normality test
    CHECK_THROWS_AS(driver_bundle(true), std::invalid_argument);

    YearlySeries longer{2010, {394, 454, 399, 371, 350, 381, 402, 365, 350, 340}};
    BundleOptions options;
    options.with_normality = true;
    auto doc = json::parse(render_report(make_bundle(longer, options)));
    CHECK(doc.contains("normality"));
    CHECK(doc.at("normality").contains("p_value"));
}

TEST_CASE("rendering is byte-identical across calls") {
    auto bundle = driver_bundle();
    CHECK(render_report(bundle) == render_report(bundle));
}

TEST_CASE("rendered numbers re-parse to the rounded bundle values") {
    auto bundle = driver_bundle();
    auto doc = json::parse(render_report(bundle));
    auto round3 = [](double v) { return std::round(v * 1000.0) / 1000.0; };
    for (std::size_t t = 0; t < 5; ++t) {
        CHECK(doc["ses"]["table"][t]["smooth"].get<double>() == round3(bundle.ses.smoothed[t]));
        CHECK(doc["ses"]["table"][t]["raw"]["smooth"].get<double>() == bundle.ses.smoothed[t]);
    }
    CHECK(doc["trend"]["accuracy"]["raw"]["mape"].get<double>() == bundle.trend_accuracy.mape);
}

TEST_CASE("render_report rejects a tampered bundle") {
    auto bundle = driver_bundle();
    bundle.series.counts[0] += 1.0;  // hash no longer matches
    CHECK_THROWS_AS(render_report(bundle), std::logic_error);
}

TEST_CASE("plot has one polyline per layer and one band") {
    auto bundle = driver_bundle();
    auto svg = render_plot(bundle.series, bundle.ses.smoothed, bundle.forecast);
    CHECK(count_occurrences(svg, "<polyline") == 3);
    CHECK(count_occurrences(svg, "class=\"actual\"") == 1);
    CHECK(count_occurrences(svg, "class=\"fitted\"") == 1);
    CHECK(count_occurrences(svg, "class=\"forecast\"") == 1);
    CHECK(count_occurrences(svg, "<polygon") == 1);
    CHECK(count_occurrences(svg, "class=\"band\"") == 1);
    CHECK(svg.find("<svg") != std::string::npos);

    // deterministic
    CHECK(render_plot(bundle.series, bundle.ses.smoothed, bundle.forecast) == svg);
}

TEST_CASE("plot rejects misaligned fitted values") {
    auto bundle = driver_bundle();
    std::vector<double> wrong(bundle.ses.smoothed.begin(), bundle.ses.smoothed.end() - 1);
    CHECK_THROWS_AS(render_plot(bundle.series, wrong, bundle.forecast), std::invalid_argument);
}
