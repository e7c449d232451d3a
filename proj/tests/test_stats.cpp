#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "ad_oracle.hpp"
#include "crashcast/stats.hpp"

using namespace crashcast;

namespace {

std::vector<double> normal_sample(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> out(n);
    for (double& v : out) v = normal(rng);
    return out;
}

}  // namespace

TEST_CASE("normal_cdf matches the quadrature oracle") {
    for (double z : {-3.5, -1.0, -0.1, 0.0, 0.5, 1.96, 3.0})
        CHECK(normal_cdf(z) == doctest::Approx(ad_oracle::normal_cdf(z)).epsilon(1e-12));
}

TEST_CASE("normal_quantile inverts normal_cdf") {
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963985).epsilon(1e-8));
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    for (double p : {0.001, 0.02, 0.3, 0.7, 0.99, 0.9999})
        CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p).epsilon(1e-12));
    CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("mean_stddev on the driver and passenger series") {
    std::vector<double> driver = {394, 454, 399, 371, 350};
    auto d = mean_stddev(driver);
    CHECK(d.mean == doctest::Approx(393.6).epsilon(1e-12));
    // sqrt(6089.2 / 4)
    CHECK(d.stddev == doctest::Approx(39.017).epsilon(1e-4));

    std::vector<double> passenger = {150, 111, 102, 63, 56};
    CHECK(mean_stddev(passenger).mean == doctest::Approx(96.4).epsilon(1e-12));
}

TEST_CASE("mean_stddev edge cases") {
    std::vector<double> constant = {5, 5, 5};
    auto c = mean_stddev(constant);
    CHECK(c.mean == 5.0);
    CHECK(c.stddev == 0.0);
    std::vector<double> one = {1};
    CHECK_THROWS_AS(mean_stddev(one), std::invalid_argument);
}

TEST_CASE("anderson_darling matches the brute-force oracle") {
    std::vector<double> spaced = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    auto r = anderson_darling(spaced);
    CHECK(r.a2 == doctest::Approx(ad_oracle::a2_statistic(spaced)).epsilon(1e-9));
    CHECK(r.a2_star == doctest::Approx(r.a2 * (1.0 + 0.075 + 0.0225)).epsilon(1e-12));

    for (unsigned seed = 0; seed < 20; ++seed) {
        auto sample = normal_sample(8 + seed * 3, 1000 + seed);
        auto nr = anderson_darling(sample);
        double oracle = ad_oracle::a2_statistic(sample);
        CHECK(std::abs(nr.a2 - oracle) < 1e-9);
    }
}

TEST_CASE("anderson_darling rejects degenerate input") {
    std::vector<double> flat(8, 1.0);
    CHECK_THROWS_AS(anderson_darling(flat), std::invalid_argument);
    std::vector<double> small = {1, 2, 3, 4, 5, 6, 7};
    CHECK_THROWS_AS(anderson_darling(small), std::invalid_argument);
}

TEST_CASE("anderson_darling result invariants") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        auto r = anderson_darling(normal_sample(30, 50 + seed));
        CHECK(r.a2 > 0.0);
        CHECK(r.a2_star >= r.a2);
        CHECK(r.p_value > 0.0);
        CHECK(r.p_value <= 1.0);
    }
}

TEST_CASE("location-scale invariance") {
    auto sample = normal_sample(40, 99);
    auto base = anderson_darling(sample);
    std::vector<double> shifted(sample);
    for (double& v : shifted) v = 3.7 * v + 120.0;
    auto moved = anderson_darling(shifted);
    CHECK(moved.a2 == doctest::Approx(base.a2).epsilon(1e-9));
    CHECK(moved.a2_star == doctest::Approx(base.a2_star).epsilon(1e-9));
    CHECK(moved.p_value == doctest::Approx(base.p_value).epsilon(1e-9));
}

TEST_CASE("permutation invariance") {
    auto sample = normal_sample(25, 123);
    auto base = anderson_darling(sample);
    std::mt19937 rng(5);
    std::shuffle(sample.begin(), sample.end(), rng);
    auto shuffled = anderson_darling(sample);
    CHECK(shuffled.a2 == base.a2);
    CHECK(shuffled.p_value == base.p_value);
}

TEST_CASE("large normal samples rarely hit the p-value floor") {
    int floored = 0;
    for (unsigned rep = 0; rep < 200; ++rep) {
        auto r = anderson_darling(normal_sample(10000, 5000 + rep));
        if (r.p_floored) ++floored;
        else CHECK(r.p_value > 0.005);
    }
    CHECK(floored <= 2);  // >= 99% of repetitions
}

TEST_CASE("p-values are uniform under the null (KS at the 0.01 level)") {
    constexpr int kReps = 1000;
    std::vector<double> pvals;
    pvals.reserve(kReps);
    for (unsigned rep = 0; rep < kReps; ++rep)
        pvals.push_back(anderson_darling(normal_sample(50, 20000 + rep)).p_value);
    std::sort(pvals.begin(), pvals.end());
    double d = 0.0;
    for (int i = 0; i < kReps; ++i) {
        double ecdf_hi = static_cast<double>(i + 1) / kReps;
        double ecdf_lo = static_cast<double>(i) / kReps;
        d = std::max({d, std::abs(ecdf_hi - pvals[i]), std::abs(pvals[i] - ecdf_lo)});
    }
    // KS critical value at alpha = 0.01: 1.628 / sqrt(n)
    CHECK(d < 1.628 / std::sqrt(static_cast<double>(kReps)));
}
