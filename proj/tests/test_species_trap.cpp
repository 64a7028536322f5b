#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "olq/random.hpp"
#include "olq/species.hpp"
#include "olq/trap.hpp"

using namespace olq;

namespace {
constexpr double kPi = std::numbers::pi;

LatticeConfig lattice_with_depth(double depth, double detuning = 9.6e3) {
    LatticeConfig lattice;
    lattice.intensity_ratio = 1e5;
    lattice.detuning_ratio = detuning;
    lattice.well_depth = depth;
    return lattice;
}
}  // namespace

TEST_CASE("species registry") {
    const AtomSpecies cs = cesium();
    CHECK(cs.gamma_over_recoil == doctest::Approx(2.5e3).epsilon(1e-12));
    CHECK(cs.f_up == 4.0);
    CHECK(cs.f_down == 3.0);
    CHECK(cs.nuclear_spin == 3.5);
    cs.validate();

    for (const auto& s : species_registry()) {
        s.validate();
        CHECK(s.f_up == s.f_down + 1.0);
        CHECK(s.nuclear_spin >= 0.5);
    }

    CHECK(find_species("CS").name == "cs");
    CHECK_THROWS_AS(find_species("francium"), std::invalid_argument);
}

TEST_CASE("trap derivation at U0 = 1e4 E_R") {
    const TrapModel trap = derive_trap(cesium(), lattice_with_depth(1e4));
    CHECK(trap.omega_osc == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(trap.lamb_dicke == doctest::Approx(std::sqrt(1.0 / 200.0)).epsilon(1e-12));
    CHECK(trap.lamb_dicke == doctest::Approx(0.0707).epsilon(1e-3));
    CHECK(trap.ground_width == trap.lamb_dicke);
}

TEST_CASE("trap invariants hold across depths") {
    for (double depth : {1.0, 42.0, 1e3, 1e4, 3.3e5}) {
        const TrapModel trap = derive_trap(cesium(), lattice_with_depth(depth));
        CHECK(trap.lamb_dicke * trap.lamb_dicke * trap.omega_osc ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(trap.omega_osc == doctest::Approx(2.0 * std::sqrt(depth)).epsilon(1e-12));
    }
}

TEST_CASE("harmonic scaling: quadrupled depth doubles omega, shrinks eta by sqrt2") {
    const TrapModel base = derive_trap(cesium(), lattice_with_depth(1e4));
    const TrapModel deep = derive_trap(cesium(), lattice_with_depth(4e4));
    CHECK(deep.omega_osc == doctest::Approx(2.0 * base.omega_osc).epsilon(1e-12));
    CHECK(deep.lamb_dicke == doctest::Approx(base.lamb_dicke / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("cesium node scattering rate lands near the published ballpark") {
    // 50 GHz blue of D2 in linewidth units
    const double detuning = 50e9 / 5.2e6;
    const TrapModel trap = derive_trap(cesium(), lattice_with_depth(1e4, detuning));
    const double per_second = rate_to_per_second(trap.scatter_rate, cesium());
    CHECK(per_second > 60.0);
    CHECK(per_second < 75.0);
    // ratio of oscillation to scattering ~ 6e3 periods
    const double omega_per_gamma = trap.omega_osc / cesium().gamma_over_recoil;
    CHECK(omega_per_gamma / trap.scatter_rate > 1e3);
}

TEST_CASE("scatter rate scalings") {
    const TrapModel base = derive_trap(cesium(), lattice_with_depth(1e4, 9.6e3));
    // scatter = (U0/hGamma) * eta^2 / detuning exactly
    const double expected = (1e4 / 2.5e3) * (1.0 / 200.0) / 9.6e3;
    CHECK(base.scatter_rate == doctest::Approx(expected).epsilon(1e-12));

    // 1/detuning at fixed depth
    const TrapModel far = derive_trap(cesium(), lattice_with_depth(1e4, 1.92e4));
    CHECK(far.scatter_rate == doctest::Approx(base.scatter_rate / 2.0).epsilon(1e-12));

    // depth chain: U0*eta^2 grows like sqrt(U0), so quadrupling doubles the rate
    const TrapModel deep = derive_trap(cesium(), lattice_with_depth(4e4, 9.6e3));
    CHECK(deep.scatter_rate == doctest::Approx(2.0 * base.scatter_rate).epsilon(1e-12));
}

TEST_CASE("trap error paths") {
    CHECK_THROWS_AS(derive_trap(cesium(), lattice_with_depth(-1.0)), std::invalid_argument);
    LatticeConfig red = lattice_with_depth(1e4);
    red.detuning_ratio = -9.6e3;
    CHECK_THROWS_AS(derive_trap(cesium(), red), std::domain_error);
    LatticeConfig zero = lattice_with_depth(1e4);
    zero.intensity_ratio = 0.0;
    CHECK_THROWS_AS(derive_trap(cesium(), zero), std::invalid_argument);
}

TEST_CASE("depth from beam parameters") {
    // U0/E_R = (hbar*Gamma/E_R) * (I1/I0) / (3 Delta/Gamma)
    const double depth = depth_from_intensity(cesium(), 1e5, 9.6e3);
    CHECK(depth == doctest::Approx(2.5e3 * 1e5 / (3.0 * 9.6e3)).epsilon(1e-12));
    LatticeConfig lattice;
    lattice.intensity_ratio = 1e5;
    lattice.detuning_ratio = 9.6e3;
    const TrapModel trap = derive_trap(cesium(), lattice);
    CHECK(trap.well_depth == doctest::Approx(depth).epsilon(1e-12));
}

TEST_CASE("light shift decomposition: linear polarization is scalar") {
    for (double angle : {0.0, 0.3, 1.2}) {
        const std::array<std::complex<double>, 3> linear = {std::cos(angle), std::sin(angle),
                                                            0.0};
        const IrreducibleShift shift = decompose_light_shift(linear);
        CHECK(shift.scalar_part == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        for (double b : shift.fictitious_field) CHECK(b == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("light shift decomposition: any real polarization gives zero field") {
    Rng rng(314159);
    for (int trial = 0; trial < 50; ++trial) {
        std::array<double, 3> v = {rng.normal(), rng.normal(), rng.normal()};
        const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        const std::array<std::complex<double>, 3> real_pol = {v[0] / norm, v[1] / norm,
                                                              v[2] / norm};
        const IrreducibleShift shift = decompose_light_shift(real_pol);
        CHECK(shift.scalar_part == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        for (double b : shift.fictitious_field) CHECK(std::abs(b) < 1e-15);
    }
}

TEST_CASE("light shift decomposition: pure sigma+ gives B along z") {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::complex<double> i(0.0, 1.0);
    const std::array<std::complex<double>, 3> sigma_plus = {-inv_sqrt2, -i * inv_sqrt2, 0.0};
    const IrreducibleShift shift = decompose_light_shift(sigma_plus);
    CHECK(shift.scalar_part == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(shift.fictitious_field[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(shift.fictitious_field[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(shift.fictitious_field[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("lin-theta-lin field: B_z follows sin(2kz)sin(theta)") {
    const double kz = kPi / 4.0;  // sin(2kz) = 1
    for (double theta : {0.0, kPi / 4.0, kPi / 2.0}) {
        auto field = lin_theta_lin_field(theta, kz);
        double norm2 = 0.0;
        for (const auto& c : field) norm2 += std::norm(c);
        for (auto& c : field) c /= std::sqrt(norm2);
        const IrreducibleShift shift = decompose_light_shift(field);
        // normalized: B_z = sin(2kz)sin(theta) / (3(1 + cos(2kz)cos(theta)))
        const double expected =
            std::sin(2 * kz) * std::sin(theta) / (3.0 * (1.0 + std::cos(2 * kz) * std::cos(theta)));
        CHECK(shift.fictitious_field[2] == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("light shift decomposition rejects the zero vector") {
    const std::array<std::complex<double>, 3> zero = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(decompose_light_shift(zero), std::domain_error);
}

TEST_CASE("transport displacement") {
    CHECK(transport_displacement(0.0) == 0.0);
    // atoms Delta z = lambda/4 apart are superimposed by theta = 2*pi*(1/4)
    const double theta = 2.0 * kPi * 0.25;
    CHECK(transport_displacement(theta) == doctest::Approx(0.25).epsilon(1e-12));
    // slope d(dz)/d(theta) = lambda/(2 pi)
    const double h = 1e-6;
    CHECK((transport_displacement(0.1 + h) - transport_displacement(0.1)) / h ==
          doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-6));
    CHECK_THROWS_AS(transport_displacement(-0.1), std::domain_error);
    CHECK_THROWS_AS(transport_displacement(kPi), std::domain_error);
}

TEST_CASE("sigma+/- antinode separation matches the transport relation") {
    // antinodes of |c+|^2 and |c-|^2 sit at kz = +-theta/2
    const double theta = 0.8;
    double best_plus = 0.0, best_minus = 0.0;
    double max_plus = -1.0, max_minus = -1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::complex<double> i(0.0, 1.0);
    for (int k = 0; k <= 20000; ++k) {
        const double kz = -kPi / 2 + kPi * k / 20000.0;
        const auto field = lin_theta_lin_field(theta, kz);
        // sigma+ amplitude = e_+^dagger . field
        const std::complex<double> cp =
            -inv_sqrt2 * field[0] + i * inv_sqrt2 * field[1];
        const std::complex<double> cm = inv_sqrt2 * field[0] + i * inv_sqrt2 * field[1];
        if (std::norm(cp) > max_plus) {
            max_plus = std::norm(cp);
            best_plus = kz;
        }
        if (std::norm(cm) > max_minus) {
            max_minus = std::norm(cm);
            best_minus = kz;
        }
    }
    const double separation_lambda = (best_plus - best_minus) / (2.0 * kPi);
    CHECK(separation_lambda == doctest::Approx(transport_displacement(theta)).epsilon(1e-3));
}

TEST_CASE("transport adiabaticity flag") {
    // rotation completing with 2*pi/t >= omega_osc is non-adiabatic
    CHECK_FALSE(transport_is_adiabatic(1.0, 2.0 * kPi));
    CHECK(transport_is_adiabatic(1.1, 2.0 * kPi));
    CHECK_THROWS_AS(transport_is_adiabatic(0.0, 1.0), std::invalid_argument);
}
