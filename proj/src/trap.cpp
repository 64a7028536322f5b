#include "olq/trap.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace olq {

namespace {
constexpr double kPi = std::numbers::pi;
}

void LatticeConfig::validate() const {
    if (!(intensity_ratio > 0)) {
        throw std::invalid_argument("lattice: intensity_ratio must be positive");
    }
    if (detuning_ratio == 0.0) {
        throw std::invalid_argument("lattice: detuning_ratio must be nonzero");
    }
    if (polarization_angle < 0.0 || polarization_angle >= kPi) {
        throw std::invalid_argument("lattice: polarization angle must lie in [0, pi)");
    }
    if (well_depth && !(*well_depth > 0)) {
        throw std::invalid_argument("lattice: well depth must be positive");
    }
}

double depth_from_intensity(const AtomSpecies& species, double intensity_ratio,
                            double detuning_ratio) {
    if (!(intensity_ratio > 0) || detuning_ratio == 0.0) {
        throw std::invalid_argument("depth_from_intensity: bad intensity or detuning");
    }
    // U0/(hbar*Gamma) = (I1/I0) / (3 * Delta_L/Gamma); convert to E_R units.
    return species.gamma_over_recoil * intensity_ratio / (3.0 * std::abs(detuning_ratio));
}

TrapModel derive_trap(const AtomSpecies& species, const LatticeConfig& lattice) {
    species.validate();
    lattice.validate();
    if (lattice.detuning_ratio < 0.0) {
        throw std::domain_error(
            "derive_trap: red detuning is inconsistent with node trapping");
    }

    TrapModel trap;
    trap.species = species;
    trap.lattice = lattice;
    trap.well_depth = lattice.well_depth
                          ? *lattice.well_depth
                          : depth_from_intensity(species, lattice.intensity_ratio,
                                                 lattice.detuning_ratio);
    if (!(trap.well_depth > 0)) {
        throw std::domain_error("derive_trap: non-positive well depth");
    }

    trap.omega_osc = 2.0 * std::sqrt(trap.well_depth);
    trap.lamb_dicke = 1.0 / std::sqrt(trap.omega_osc);  // eta^2 = E_R/(hbar*omega)
    trap.ground_width = trap.lamb_dicke;                // x0 in 1/k_L units

    // Node-trapped atom: residual intensity <sin^2(k_L x)> = eta^2 of the
    // antinode value, where the full-depth scattering rate is U0/(hbar*Delta).
    const double depth_over_gamma = trap.well_depth / species.gamma_over_recoil;
    trap.scatter_rate =
        depth_over_gamma * trap.lamb_dicke * trap.lamb_dicke / lattice.detuning_ratio;
    return trap;
}

IrreducibleShift decompose_light_shift(
    const std::array<std::complex<double>, 3>& polarization) {
    double norm2 = 0.0;
    for (const auto& c : polarization) norm2 += std::norm(c);
    if (norm2 == 0.0) {
        throw std::domain_error("decompose_light_shift: zero polarization vector");
    }

    IrreducibleShift shift;
    shift.scalar_part = (2.0 / 3.0) * norm2;

    // B = -(i/3) (eps* x eps); the cross product of conjugates is purely
    // imaginary, so B is real.
    const auto& e = polarization;
    std::array<std::complex<double>, 3> cross = {
        std::conj(e[1]) * e[2] - std::conj(e[2]) * e[1],
        std::conj(e[2]) * e[0] - std::conj(e[0]) * e[2],
        std::conj(e[0]) * e[1] - std::conj(e[1]) * e[0],
    };
    for (int i = 0; i < 3; ++i) {
        shift.fictitious_field[i] = cross[i].imag() / 3.0;
    }
    return shift;
}

std::array<std::complex<double>, 3> lin_theta_lin_field(double theta, double kz) {
    const std::complex<double> forward = std::polar(1.0, kz);
    const std::complex<double> backward = std::polar(1.0, -kz);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    // beam 1 polarized at +theta/2 from x, beam 2 at -theta/2
    return {c * forward + c * backward, s * forward - s * backward,
            std::complex<double>(0.0, 0.0)};
}

double transport_displacement(double theta) {
    if (theta < 0.0 || theta >= kPi) {
        throw std::domain_error("transport_displacement: theta must lie in [0, pi)");
    }
    return theta / (2.0 * kPi);
}

bool transport_is_adiabatic(double rotation_time, double omega_osc) {
    if (!(rotation_time > 0) || !(omega_osc > 0)) {
        throw std::invalid_argument("transport_is_adiabatic: arguments must be positive");
    }
    return 2.0 * kPi / rotation_time < omega_osc;
}

double rate_to_per_second(double rate_in_gamma, const AtomSpecies& species) {
    if (!species.gamma_si) {
        throw std::invalid_argument("rate_to_per_second: species has no SI linewidth");
    }
    return rate_in_gamma * (*species.gamma_si);
}

}  // namespace olq
