#include "crashcast/probability.hpp"

#include <cmath>
#include <stdexcept>

#include "crashcast/error.hpp"

namespace crashcast {

double total_probability(std::span<const ProbabilityBranch> branches) {
    if (branches.empty()) throw std::invalid_argument("total_probability: no branches");
    double prior_sum = 0.0;
    double result = 0.0;
    for (const auto& b : branches) {
        if (!(b.conditional >= 0.0 && b.conditional <= 1.0))
            throw std::invalid_argument("conditional outside [0,1]");
        if (!(b.prior >= 0.0 && b.prior <= 1.0))
            throw std::invalid_argument("prior outside [0,1]");
        prior_sum += b.prior;
        result += b.conditional * b.prior;
    }
    if (prior_sum > 1.0 + 1e-9)
        throw std::invalid_argument("priors sum above 1");
    return result;
}

double empirical_probability(std::span<const PersonRecord> records,
                             const RecordFilter& event, const RecordFilter& given) {
    std::size_t given_count = 0;
    std::size_t both_count = 0;
    for (const PersonRecord& r : records) {
        if (!given.matches(r)) continue;
        ++given_count;
        if (event.matches(r)) ++both_count;
    }
    if (given_count == 0)
        throw DataError("empirical_probability: conditioning set is empty (" +
                        given.describe() + ")");
    return static_cast<double>(both_count) / static_cast<double>(given_count);
}

double round_probability(double p) { return std::round(p * 1000.0) / 1000.0; }

}  // namespace crashcast
