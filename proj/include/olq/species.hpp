#pragma once

#include <optional>
#include <string>
#include <vector>

namespace olq {

// Physical constants of an alkali species in lattice units: energies per
// hbar*Gamma, lengths per 1/k_L, rates per Gamma, intensities per the D2
// saturation intensity I0. Absolute SI values never enter the formulas;
// only gamma_si is kept so rates can be printed in s^-1.
struct AtomSpecies {
    std::string name;
    double gamma_over_recoil = 0.0;  // hbar*Gamma / E_R
    double nuclear_spin = 0.0;       // I, half-integer
    double f_up = 0.0;               // F_up = I + 1/2
    double f_down = 0.0;             // F_down = I - 1/2
    std::string saturation_reference = "I0(D2)";
    std::optional<double> gamma_si;  // Gamma in rad/s

    void validate() const;  // throws std::invalid_argument
};

AtomSpecies cesium();
AtomSpecies rubidium87();
AtomSpecies sodium();

const std::vector<AtomSpecies>& species_registry();

// Case-insensitive lookup; throws std::invalid_argument for unknown names.
AtomSpecies find_species(const std::string& name);

}  // namespace olq
