#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace crashcast {

// Ordered yearly counts; the year of counts[i] is start_year + i, with no gaps.
struct YearlySeries {
    int start_year = 0;
    std::vector<double> counts;

    std::size_t size() const { return counts.size(); }
    int year_at(std::size_t i) const { return start_year + static_cast<int>(i); }
    int last_year() const { return start_year + static_cast<int>(counts.size()) - 1; }
};

// FNV-1a over start_year and the count values; used to tie derived results
// back to the series they came from.
std::uint64_t series_hash(const YearlySeries& series);

}  // namespace crashcast
