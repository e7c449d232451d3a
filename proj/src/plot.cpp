#include "crashcast/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace crashcast {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kMarginLeft = 56.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 16.0;
constexpr double kMarginBottom = 36.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_plot(const YearlySeries& series, const std::vector<double>& fitted,
                        const ForecastSet& forecast) {
    if (fitted.size() != series.size())
        throw std::invalid_argument("render_plot: fitted values not aligned with series");
    if (forecast.points.empty())
        throw std::invalid_argument("render_plot: empty forecast");

    const int first_year = series.start_year;
    const int last_year = forecast.first_period + static_cast<int>(forecast.points.size()) - 1;

    double y_min = series.counts[0];
    double y_max = series.counts[0];
    auto widen = [&](double v) {
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
    };
    for (double v : series.counts) widen(v);
    for (double v : fitted) widen(v);
    for (double v : forecast.lower) widen(v);
    for (double v : forecast.upper) widen(v);
    if (y_max == y_min) y_max = y_min + 1.0;
    double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;

    auto x_of = [&](double year) {
        double span = static_cast<double>(last_year - first_year);
        if (span <= 0.0) span = 1.0;
        return kMarginLeft + (year - first_year) / span * (kWidth - kMarginLeft - kMarginRight);
    };
    auto y_of = [&](double v) {
        return kHeight - kMarginBottom -
               (v - y_min) / (y_max - y_min) * (kHeight - kMarginTop - kMarginBottom);
    };

    auto polyline_points = [&](int start, const std::vector<double>& values) {
        std::ostringstream pts;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) pts << ' ';
            pts << fmt(x_of(start + static_cast<int>(i))) << ',' << fmt(y_of(values[i]));
        }
        return pts.str();
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth)
        << "\" height=\"" << fmt(kHeight) << "\" viewBox=\"0 0 " << fmt(kWidth) << ' '
        << fmt(kHeight) << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight)
        << "\" fill=\"white\"/>\n";

    // Interval band behind the curves.
    std::ostringstream band;
    for (std::size_t i = 0; i < forecast.upper.size(); ++i) {
        if (i) band << ' ';
        band << fmt(x_of(forecast.first_period + static_cast<int>(i))) << ','
             << fmt(y_of(forecast.upper[i]));
    }
    for (std::size_t i = forecast.lower.size(); i-- > 0;)
        band << ' ' << fmt(x_of(forecast.first_period + static_cast<int>(i))) << ','
             << fmt(y_of(forecast.lower[i]));
    svg << "  <polygon class=\"band\" points=\"" << band.str()
        << "\" fill=\"#c6dbef\" stroke=\"none\"/>\n";

    // Axes.
    svg << "  <line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(kMarginTop) << "\" x2=\""
        << fmt(kMarginLeft) << "\" y2=\"" << fmt(kHeight - kMarginBottom)
        << "\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(kHeight - kMarginBottom)
        << "\" x2=\"" << fmt(kWidth - kMarginRight) << "\" y2=\""
        << fmt(kHeight - kMarginBottom) << "\" stroke=\"black\"/>\n";

    // Year tick labels.
    for (int year = first_year; year <= last_year; ++year)
        svg << "  <text x=\"" << fmt(x_of(year)) << "\" y=\"" << fmt(kHeight - kMarginBottom + 18)
            << "\" font-size=\"11\" text-anchor=\"middle\">" << year << "</text>\n";

    svg << "  <polyline class=\"actual\" points=\"" << polyline_points(first_year, series.counts)
        << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
    svg << "  <polyline class=\"fitted\" points=\"" << polyline_points(first_year, fitted)
        << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"4 2\"/>\n";
    svg << "  <polyline class=\"forecast\" points=\""
        << polyline_points(forecast.first_period, forecast.points)
        << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace crashcast
