#include <random>
#include <vector>

#include <doctest.h>

#include "crashcast/error.hpp"
#include "crashcast/probability.hpp"

using namespace crashcast;

TEST_CASE("total_probability reproduces the worked example") {
    std::vector<ProbabilityBranch> branches = {{0.27, 0.42}, {0.003, 0.007}};
    double p = total_probability(branches);
    CHECK(p == doctest::Approx(0.113421).epsilon(1e-12));
    CHECK(round_probability(p) == doctest::Approx(0.113));
}

TEST_CASE("total_probability trivial cases") {
    std::vector<ProbabilityBranch> certain = {{1.0, 1.0}};
    CHECK(total_probability(certain) == 1.0);
    std::vector<ProbabilityBranch> half = {{0.5, 0.5}, {0.5, 0.5}};
    CHECK(total_probability(half) == doctest::Approx(0.5));
}

TEST_CASE("total_probability input validation") {
    std::vector<ProbabilityBranch> none;
    CHECK_THROWS_AS(total_probability(none), std::invalid_argument);
    std::vector<ProbabilityBranch> over = {{0.5, 0.8}, {0.5, 0.8}};
    CHECK_THROWS_AS(total_probability(over), std::invalid_argument);
    std::vector<ProbabilityBranch> bad_cond = {{1.5, 0.4}};
    CHECK_THROWS_AS(total_probability(bad_cond), std::invalid_argument);
    std::vector<ProbabilityBranch> bad_prior = {{0.5, -0.1}};
    CHECK_THROWS_AS(total_probability(bad_prior), std::invalid_argument);
}

TEST_CASE("total_probability is linear in the conditionals") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.0, 0.4);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<ProbabilityBranch> branches = {{u(rng), u(rng)}, {u(rng), u(rng)}};
        double base = total_probability(branches);
        double k = 0.5;
        std::vector<ProbabilityBranch> scaled = branches;
        for (auto& b : scaled) b.conditional *= k;
        CHECK(total_probability(scaled) == doctest::Approx(k * base).epsilon(1e-12));
    }
}

namespace {

std::vector<PersonRecord> fixture_records() {
    return {
        {2019, 15, Role::Driver, Helmet::Worn, Severity::Fatality},
        {2019, 17, Role::Driver, Helmet::NotWorn, Severity::NotInjured},
        {2019, 18, Role::Passenger, Helmet::Worn, Severity::Fatality},
        {2019, 45, Role::Driver, Helmet::Unknown, Severity::PossibleInjury},
    };
}

}  // namespace

TEST_CASE("empirical_probability marginal and conditional counts") {
    auto records = fixture_records();
    RecordFilter fatality;
    fatality.severities = std::set{Severity::Fatality};

    SUBCASE("one in four, marginal") {
        RecordFilter passenger;
        passenger.role = Role::Passenger;
        CHECK(empirical_probability(records, passenger, RecordFilter{}) == doctest::Approx(0.25));
    }
    SUBCASE("conditioning on itself") {
        CHECK(empirical_probability(records, fatality, fatality) == 1.0);
    }
    SUBCASE("disjoint event") {
        RecordFilter over50;
        over50.age_min = 50;
        CHECK(empirical_probability(records, over50, fatality) == 0.0);
    }
    SUBCASE("empty conditioning set") {
        RecordFilter none;
        none.year_min = 2030;
        CHECK_THROWS_AS(empirical_probability(records, fatality, none), DataError);
    }
}

TEST_CASE("complement probabilities sum to 1") {
    auto records = fixture_records();
    RecordFilter driver, passenger;
    driver.role = Role::Driver;
    passenger.role = Role::Passenger;
    RecordFilter given;
    given.year_min = 2019;
    double pd = empirical_probability(records, driver, given);
    double pp = empirical_probability(records, passenger, given);
    CHECK(pd + pp == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("severity partition sums to 1") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> sev(0, 5);
    std::vector<PersonRecord> records;
    for (int i = 0; i < 400; ++i)
        records.push_back({2018, 20, Role::Driver, Helmet::Worn, static_cast<Severity>(sev(rng))});

    double sum = 0.0;
    for (int s = 0; s < kSeverityCount; ++s) {
        RecordFilter event;
        event.severities = std::set{static_cast<Severity>(s)};
        sum += empirical_probability(records, event, RecordFilter{});
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
}
