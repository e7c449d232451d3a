#pragma once

#include <span>
#include <vector>

#include "crashcast/records.hpp"

namespace crashcast {

// One branch of a total-probability sum: conditional * prior.
struct ProbabilityBranch {
    double conditional;  // in [0,1]
    double prior;        // in [0,1]
};

// Sum of conditional_i * prior_i over the branches. Priors must not sum above 1.
double total_probability(std::span<const ProbabilityBranch> branches);

// |records matching event and given| / |records matching given|. Use an empty
// `given` filter for marginal probabilities. Throws DataError when nothing
// matches `given`.
double empirical_probability(std::span<const PersonRecord> records,
                             const RecordFilter& event, const RecordFilter& given);

// Report rounding: 3 decimals.
double round_probability(double p);

}  // namespace crashcast
