#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "olq/motional.hpp"
#include "oracle_helpers.hpp"

using namespace olq;

TEST_CASE("relative gaussian of identical isotropic packets") {
    const PacketPair pair = PacketPair::isotropic(0.05, 0.0);
    const RelativeGaussian rel = relative_gaussian(pair);
    for (double w : rel.widths) CHECK(w == doctest::Approx(std::sqrt(2.0) * 0.05).epsilon(1e-12));
    CHECK(rel.mean_z == 0.0);
}

TEST_CASE("relative gaussian keeps the separation and aspect ratio") {
    PacketPair pair = PacketPair::isotropic(0.05, 5.0 * 0.05);
    const RelativeGaussian rel = relative_gaussian(pair);
    CHECK(rel.mean_z == doctest::Approx(0.25).epsilon(1e-12));

    const PacketPair aniso = PacketPair::ellipsoidal(0.05, 0.1);
    const RelativeGaussian rel2 = relative_gaussian(aniso);
    CHECK(rel2.widths[2] / rel2.widths[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("relative gaussian density is normalized") {
    const PacketPair pair = PacketPair::ellipsoidal(0.05, 0.1);
    const RelativeGaussian rel = relative_gaussian(pair);
    // midpoint integration over a generous box
    const int n = 60;
    const double lx = 6.0 * rel.widths[0];
    const double lz = 6.0 * rel.widths[2];
    double sum = 0.0;
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
            for (int iz = 0; iz < n; ++iz) {
                const std::array<double, 3> r = {
                    -lx + 2.0 * lx * (ix + 0.5) / n,
                    -lx + 2.0 * lx * (iy + 0.5) / n,
                    -lz + 2.0 * lz * (iz + 0.5) / n,
                };
                sum += rel.density(r);
            }
        }
    }
    sum *= (2.0 * lx / n) * (2.0 * lx / n) * (2.0 * lz / n);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("packet pair validation") {
    PacketPair bad;
    bad.widths_a = {0.05, 0.05, 0.0};
    bad.widths_b = {0.05, 0.05, 0.05};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("collision probability limits") {
    CHECK(collision_probability(2.5, 50.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(collision_probability(0.0, 0.0) == 0.0);
    CHECK(collision_probability(2.5, 0.0) == 0.0);

    // zero-separation analytic limit: radial CDF of the relative Gaussian
    for (double a : {0.1, 0.5, 1.0, 2.0}) {
        const double expected =
            std::erf(a / 2.0) - (a / std::sqrt(std::numbers::pi)) * std::exp(-a * a / 4.0);
        CHECK(collision_probability(0.0, a) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("collision probability is continuous at zero separation") {
    for (double a : {0.1, 0.7, 1.9}) {
        const double at_zero = collision_probability(0.0, a);
        const double nearby = collision_probability(1e-4, a);
        CHECK(std::abs(at_zero - nearby) < 1e-8);
    }
}

TEST_CASE("collision probability is monotone") {
    // nondecreasing in a_bar, nonincreasing in separation
    for (double dz : {0.0, 0.5, 1.5, 3.0}) {
        double prev = -1.0;
        for (double a = 0.05; a < 4.0; a += 0.05) {
            const double p = collision_probability(dz, a);
            CHECK(p >= prev - 1e-15);
            prev = p;
        }
    }
    for (double a : {0.2, 1.0, 2.5}) {
        double prev = 2.0;
        for (double dz = 0.0; dz < 5.0; dz += 0.1) {
            const double p = collision_probability(dz, a);
            CHECK(p <= prev + 1e-15);
            prev = p;
        }
    }
}

TEST_CASE("collision probability against the seeded Monte Carlo oracle") {
    const auto mc = oracle::collision_probability_mc(2.5, 0.1, 10'000'000, 20260811);
    const double analytic = collision_probability(2.5, 0.1);
    CHECK(std::abs(analytic - mc.mean) < 3.0 * mc.standard_error);
}

TEST_CASE("collision probability large-argument stability") {
    // far-separated wells: tiny but well-defined, no NaN/negative garbage
    const double p = collision_probability(20.0, 0.1);
    CHECK(p >= 0.0);
    CHECK(p < 1e-30);
    CHECK(std::isfinite(p));
}

TEST_CASE("oscillator shells") {
    CHECK(shell_states(0).size() == 1);
    CHECK(shell_states(0)[0] == OscillatorState{0, 0, 0});

    const auto one = shell_states(1);
    REQUIRE(one.size() == 3);
    for (const auto& s : one) {
        CHECK(s.n == 0);
        CHECK(s.l == 1);
    }

    const auto two = shell_states(2);
    REQUIRE(two.size() == 6);
    int l0 = 0, l2 = 0;
    for (const auto& s : two) {
        if (s.l == 0) ++l0;
        if (s.l == 2) ++l2;
        CHECK(s.quanta() == 2);
        CHECK(s.energy() == doctest::Approx(3.5));
    }
    CHECK(l0 == 1);
    CHECK(l2 == 5);

    for (int n = 0; n <= 10; ++n) {
        CHECK(static_cast<int>(shell_states(n).size()) == shell_degeneracy(n));
        CHECK(shell_degeneracy(n) == (n + 1) * (n + 2) / 2);
    }
    CHECK_THROWS_AS(shell_states(-1), std::invalid_argument);
}
