#include "crashcast/smoothing.hpp"

#include <cmath>
#include <stdexcept>

#include "crashcast/stats.hpp"

namespace crashcast {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("alpha must be in (0, 2]");
}

}  // namespace

double SesFit::sse() const {
    double s = 0.0;
    for (double e : errors) s += e * e;
    return s;
}

double SesFit::mad() const {
    double s = 0.0;
    for (double e : errors) s += std::abs(e);
    return s / static_cast<double>(errors.size());
}

double backcast_init(const YearlySeries& series, double alpha) {
    if (series.counts.empty()) throw std::invalid_argument("backcast_init: empty series");
    check_alpha(alpha);
    double mean = 0.0;
    for (double y : series.counts) mean += y;
    mean /= static_cast<double>(series.counts.size());

    double level = mean;
    for (auto it = series.counts.rbegin(); it != series.counts.rend(); ++it)
        level = alpha * *it + (1.0 - alpha) * level;
    return level;
}

SesFit ses_fit(const YearlySeries& series, double alpha) {
    SesFit fit;
    fit.alpha = alpha;
    fit.initial_smooth = backcast_init(series, alpha);
    fit.start_year = series.start_year;

    const std::size_t n = series.counts.size();
    fit.smoothed.resize(n);
    fit.predicted.resize(n);
    fit.errors.resize(n);
    double level = fit.initial_smooth;
    for (std::size_t t = 0; t < n; ++t) {
        fit.predicted[t] = level;
        fit.errors[t] = series.counts[t] - level;
        level = alpha * series.counts[t] + (1.0 - alpha) * level;
        fit.smoothed[t] = level;
    }
    return fit;
}

AccuracyMeasures ses_accuracy(const YearlySeries& series, const SesFit& fit) {
    return accuracy(series.counts, fit.predicted);
}

double optimize_alpha(const YearlySeries& series, double lo, double hi) {
    if (series.counts.size() < 3)
        throw std::invalid_argument("optimize_alpha needs at least 3 points");
    if (!(lo > 0.0 && hi <= 2.0 && lo < hi))
        throw std::invalid_argument("optimize_alpha: bad search domain");

    auto sse_at = [&series](double a) { return ses_fit(series, a).sse(); };

    // Coarse grid first: SSE(alpha) with backcast coupling need not be
    // unimodal, so golden-section alone could lock onto a local minimum.
    constexpr int kGridPoints = 51;
    double best_alpha = lo;
    double best_sse = sse_at(lo);
    int best_index = 0;
    for (int i = 1; i < kGridPoints; ++i) {
        double a = lo + (hi - lo) * static_cast<double>(i) / (kGridPoints - 1);
        double s = sse_at(a);
        if (s < best_sse) {
            best_sse = s;
            best_alpha = a;
            best_index = i;
        }
    }

    double step = (hi - lo) / (kGridPoints - 1);
    double a = std::max(lo, best_alpha - step);
    double b = std::min(hi, best_alpha + step);

    constexpr double kInvPhi = 0.6180339887498949;
    constexpr double kTol = 1e-6;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = sse_at(c);
    double fd = sse_at(d);
    while (b - a > kTol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = sse_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = sse_at(d);
        }
    }
    double refined = 0.5 * (a + b);
    double refined_sse = sse_at(refined);

    // Ties break toward the smaller alpha; the grid best is the tie anchor
    // (for a flat SSE, e.g. a constant series, this returns the domain's
    // lower bound).
    (void)best_index;
    if (refined_sse < best_sse && !(refined_sse == best_sse && refined > best_alpha))
        return refined;
    return best_alpha;
}

ForecastSet ses_forecast(const SesFit& fit, int horizon, double confidence) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("confidence must be in (0, 1)");

    double point = fit.last_smoothed();
    double z = normal_quantile(0.5 * (1.0 + confidence));
    double half_width = z * 1.25 * fit.mad();

    ForecastSet out;
    out.first_period = fit.start_year + static_cast<int>(fit.smoothed.size());
    out.confidence = confidence;
    out.points.assign(static_cast<std::size_t>(horizon), point);
    out.lower.assign(static_cast<std::size_t>(horizon), point - half_width);
    out.upper.assign(static_cast<std::size_t>(horizon), point + half_width);
    return out;
}

}  // namespace crashcast
