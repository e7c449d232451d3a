#include "crashcast/series.hpp"

#include <cstring>

namespace crashcast {

std::uint64_t series_hash(const YearlySeries& series) {
    constexpr std::uint64_t kOffset = 1469598103934665603ULL;
    constexpr std::uint64_t kPrime = 1099511628211ULL;
    std::uint64_t h = kOffset;
    auto mix = [&h](const void* data, std::size_t len) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= bytes[i];
            h *= kPrime;
        }
    };
    mix(&series.start_year, sizeof(series.start_year));
    for (double c : series.counts) mix(&c, sizeof(c));
    return h;
}

}  // namespace crashcast
