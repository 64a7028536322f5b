#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "olq/assay.hpp"

using namespace olq;

namespace {

AssayConfig config_with(std::int64_t pairs, double p, double alpha, int cycles,
                        std::uint64_t seed = 7) {
    AssayConfig config;
    config.n_pairs = pairs;
    config.true_error = p;
    config.alpha = alpha;
    config.n_cycles = cycles;
    config.seed = seed;
    return config;
}

}  // namespace

TEST_CASE("expected counts follow the pairing recursion") {
    const AssayRecord record = expected_counts(config_with(1000, 0.1, 0.5, 3));
    REQUIRE(record.cycles.size() == 3);
    CHECK(record.cycles[0].paired == doctest::Approx(900.0).epsilon(1e-12));
    CHECK(record.cycles[0].new_unpaired == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(record.cycles[1].paired == doctest::Approx(810.0).epsilon(1e-12));
    CHECK(record.cycles[1].new_unpaired == doctest::Approx(45.0).epsilon(1e-12));
    // previous unpaired pool flushed: total = paired + newly unpaired
    CHECK(record.cycles[1].target_total == doctest::Approx(855.0).epsilon(1e-12));
}

TEST_CASE("perfect gate preserves all counts forever") {
    const AssayRecord record = expected_counts(config_with(500, 0.0, 0.5, 5));
    for (const auto& cycle : record.cycles) {
        CHECK(cycle.paired == doctest::Approx(500.0).epsilon(1e-12));
        CHECK(cycle.target_total == doctest::Approx(500.0).epsilon(1e-12));
    }
    CHECK(estimate_error(record) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("estimator inverts the deterministic recursion exactly") {
    for (double p : {0.01, 0.05, 0.1, 0.3}) {
        for (double alpha : {0.0, 0.3, 1.0}) {
            const AssayRecord record = expected_counts(config_with(1234, p, alpha, 4));
            CHECK(estimate_error(record) == doctest::Approx(p).epsilon(1e-12));
        }
    }
}

TEST_CASE("paired counts never increase and stay nonnegative") {
    const AssayRecord record = simulate(config_with(5000, 0.2, 0.4, 6));
    double previous = 5000.0;
    for (const auto& cycle : record.cycles) {
        CHECK(cycle.paired <= previous);
        CHECK(cycle.paired >= 0.0);
        CHECK(cycle.new_unpaired >= 0.0);
        CHECK(cycle.target_total >= cycle.paired);
        previous = cycle.paired;
    }
}

TEST_CASE("simulation is bit-identical for a fixed seed") {
    const AssayConfig config = config_with(2000, 0.15, 0.5, 4, 99);
    const AssayRecord a = simulate(config);
    const AssayRecord b = simulate(config);
    REQUIRE(a.cycles.size() == b.cycles.size());
    for (std::size_t i = 0; i < a.cycles.size(); ++i) {
        CHECK(a.cycles[i].paired == b.cycles[i].paired);
        CHECK(a.cycles[i].new_unpaired == b.cycles[i].new_unpaired);
        CHECK(a.cycles[i].target_total == b.cycles[i].target_total);
    }
    const AssayRecord c = simulate(config_with(2000, 0.15, 0.5, 4, 100));
    bool any_different = false;
    for (std::size_t i = 0; i < a.cycles.size(); ++i) {
        if (a.cycles[i].paired != c.cycles[i].paired) any_different = true;
    }
    CHECK(any_different);
}

TEST_CASE("certain failure clears the paired pool after one cycle") {
    const AssayRecord record = simulate(config_with(1000, 1.0, 0.25, 2));
    CHECK(record.cycles[0].paired == 0.0);
}

TEST_CASE("first-cycle paired count is binomial around (1-P)N") {
    const std::int64_t n = 100000;
    const double p = 0.1;
    const AssayRecord record = simulate(config_with(n, p, 0.5, 2, 4242));
    const double se = std::sqrt(n * p * (1 - p));
    CHECK(std::abs(record.cycles[0].paired - 0.9 * n) < 3.0 * se);
}

TEST_CASE("stochastic estimate sits within three binomial standard errors") {
    const std::int64_t n = 100000;
    const double p = 0.1;
    const AssayRecord record = simulate(config_with(n, p, 0.5, 2, 31415));
    const double se = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(estimate_error(record) - p) < 3.0 * se);
}

TEST_CASE("stochastic means track the deterministic means across seeds") {
    const double p = 0.12;
    const double alpha = 0.6;
    const std::int64_t n = 1000;
    const AssayRecord expected = expected_counts(config_with(n, p, alpha, 2));
    double sum_paired = 0.0;
    double sum_unpaired = 0.0;
    const int seeds = 100;
    for (int seed = 0; seed < seeds; ++seed) {
        const AssayRecord run = simulate(config_with(n, p, alpha, 2, 1000 + seed));
        sum_paired += run.cycles[1].paired;
        sum_unpaired += run.cycles[1].new_unpaired;
    }
    const double mean_paired = sum_paired / seeds;
    const double mean_unpaired = sum_unpaired / seeds;
    // standard error of the mean over 100 runs
    const double se_paired = std::sqrt(n * p * (1 - p)) / std::sqrt(double(seeds)) * 2.0;
    CHECK(std::abs(mean_paired - expected.cycles[1].paired) < 4.0 * se_paired);
    CHECK(std::abs(mean_unpaired - expected.cycles[1].new_unpaired) <
          4.0 * std::sqrt(expected.cycles[1].new_unpaired / seeds) * 3.0);
}

TEST_CASE("flip probability keeps part of the unpaired pool alive") {
    AssayConfig config = config_with(10000, 0.2, 1.0, 3);
    config.flip_probability = 1.0;  // nothing ever flushes
    const AssayRecord record = expected_counts(config);
    // cycle 2 total now carries cycle 1's unpaired survivors
    const double p = 0.2;
    const double n = 10000.0;
    const double expected_total =
        n * (1 - p) * (1 - p) + p * (1 - p) * n + p * n;  // paired + new + lingering
    CHECK(record.cycles[1].target_total == doctest::Approx(expected_total).epsilon(1e-12));
}

TEST_CASE("estimator error paths") {
    AssayRecord short_record;
    short_record.cycles.resize(1);
    CHECK_THROWS_AS(estimate_error(short_record), std::invalid_argument);

    const AssayRecord wiped = expected_counts(config_with(100, 1.0, 0.0, 2));
    CHECK_THROWS_AS(estimate_error(wiped), std::domain_error);

    AssayConfig bad = config_with(0, 0.1, 0.5, 2);
    CHECK_THROWS_AS(expected_counts(bad), std::invalid_argument);
    bad = config_with(10, 1.5, 0.5, 2);
    CHECK_THROWS_AS(simulate(bad), std::invalid_argument);
}
