#pragma once

#include <array>
#include <complex>
#include <optional>

#include "olq/species.hpp"

namespace olq {

// One standing-wave lattice axis. The well depth can be set directly or
// derived from the beam intensity and detuning.
struct LatticeConfig {
    double intensity_ratio = 0.0;      // I1/I0 per beam
    double detuning_ratio = 0.0;       // Delta_L/Gamma, signed; > 0 means blue
    double polarization_angle = 0.0;   // theta between the beam polarizations, [0, pi)
    std::optional<double> well_depth;  // U0/E_R; derived from the beams when unset

    void validate() const;
};

// Harmonic quantities of a blue-detuned, node-trapped cos^2 well.
struct TrapModel {
    double well_depth = 0.0;    // U0/E_R
    double omega_osc = 0.0;     // hbar*omega_osc/E_R = 2*sqrt(U0/E_R)
    double ground_width = 0.0;  // x0 in units of 1/k_L
    double lamb_dicke = 0.0;    // eta = k_L*x0
    double scatter_rate = 0.0;  // Gamma'/Gamma for the node-trapped atom
    AtomSpecies species;
    LatticeConfig lattice;
};

// Depth implied by the beams: U0/E_R = (hbar*Gamma/E_R) * (I1/I0) / (3*Delta_L/Gamma),
// counting the antinode interference of the two beams and the scalar D2 shift.
double depth_from_intensity(const AtomSpecies& species, double intensity_ratio,
                            double detuning_ratio);

// Requires a positive depth and blue detuning (node trapping). The scattering
// rate uses the ground-state-averaged intensity at the node, <sin^2(k_L x)> = eta^2.
TrapModel derive_trap(const AtomSpecies& species, const LatticeConfig& lattice);

// Irreducible form of the light shift for one polarization sample: a scalar
// part and an effective magnetic field coupling to F-hat/F, both per U_1.
struct IrreducibleShift {
    double scalar_part = 0.0;
    std::array<double, 3> fictitious_field{};
};

// polarization must be normalized; a zero vector is a domain error.
IrreducibleShift decompose_light_shift(const std::array<std::complex<double>, 3>& polarization);

// Total field polarization of two counterpropagating linear beams with
// relative angle theta, sampled at position k_L*z. Not normalized.
std::array<std::complex<double>, 3> lin_theta_lin_field(double theta, double kz);

// Relative displacement of the sigma+ / sigma- standing-wave antinodes,
// in units of lambda: delta_z = theta/(2*pi). Rotating theta by 2*pi*dz/lambda
// therefore moves the two species by dz relative to each other.
double transport_displacement(double theta);

// A polarization rotation completing in time t is adiabatic when 2*pi/t < omega_osc.
// Units are the caller's, as long as they are consistent.
bool transport_is_adiabatic(double rotation_time, double omega_osc);

// Convert a rate in Gamma units to s^-1 via the species' published linewidth.
double rate_to_per_second(double rate_in_gamma, const AtomSpecies& species);

}  // namespace olq
