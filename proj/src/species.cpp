#include "olq/species.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace olq {

void AtomSpecies::validate() const {
    if (!(gamma_over_recoil > 0)) {
        throw std::invalid_argument("species: gamma_over_recoil must be positive");
    }
    if (nuclear_spin < 0.5) {
        throw std::invalid_argument("species: nuclear spin must be at least 1/2");
    }
    if (std::abs(f_up - (f_down + 1.0)) > 1e-12) {
        throw std::invalid_argument("species: F_up must equal F_down + 1");
    }
    if (std::abs(f_up - (nuclear_spin + 0.5)) > 1e-12) {
        throw std::invalid_argument("species: F_up must equal I + 1/2");
    }
}

AtomSpecies cesium() {
    AtomSpecies s;
    s.name = "cs";
    s.gamma_over_recoil = 2.5e3;
    s.nuclear_spin = 3.5;
    s.f_up = 4.0;
    s.f_down = 3.0;
    s.gamma_si = 2.0 * std::numbers::pi * 5.2e6;  // D2 linewidth, rad/s
    return s;
}

AtomSpecies rubidium87() {
    AtomSpecies s;
    s.name = "rb";
    s.gamma_over_recoil = 1.61e3;
    s.nuclear_spin = 1.5;
    s.f_up = 2.0;
    s.f_down = 1.0;
    s.gamma_si = 2.0 * std::numbers::pi * 6.07e6;
    return s;
}

AtomSpecies sodium() {
    AtomSpecies s;
    s.name = "na";
    s.gamma_over_recoil = 3.92e2;
    s.nuclear_spin = 1.5;
    s.f_up = 2.0;
    s.f_down = 1.0;
    s.gamma_si = 2.0 * std::numbers::pi * 9.79e6;
    return s;
}

const std::vector<AtomSpecies>& species_registry() {
    static const std::vector<AtomSpecies> registry = {cesium(), rubidium87(), sodium()};
    return registry;
}

AtomSpecies find_species(const std::string& name) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (const auto& s : species_registry()) {
        if (s.name == lowered) return s;
    }
    throw std::invalid_argument("unknown species: " + name);
}

}  // namespace olq
