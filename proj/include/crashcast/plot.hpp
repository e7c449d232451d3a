#pragma once

#include <string>
#include <vector>

#include "crashcast/series.hpp"
#include "crashcast/smoothing.hpp"

namespace crashcast {

// Standalone SVG: one polyline each for the actual series, the fitted curve
// and the flat forecast segment, plus one shaded interval band polygon.
// Deterministic for fixed input. `fitted` must align with the series.
std::string render_plot(const YearlySeries& series, const std::vector<double>& fitted,
                        const ForecastSet& forecast);

}  // namespace crashcast
