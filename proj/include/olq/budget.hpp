#pragma once

#include "olq/species.hpp"

namespace olq {

// Inputs of the spontaneous-scattering error budget for one two-qubit gate.
struct BudgetInput {
    double c_kappa = 0.0;    // protocol prefactor, |kappa|*eta^3
    double n_cycles = 0.0;   // gate duration in trap periods, T = n*2*pi/omega_osc
    AtomSpecies species;
    double intensity_ratio = 0.0;  // I1/I0

    void validate() const;
};

struct BudgetResult {
    double p_catalysis = 0.0;
    double p_lattice = 0.0;
    double p_total = 0.0;           // exponential composition at the optimum
    double optimal_detuning = 0.0;  // Delta_L/Gamma
    double gamma_lattice = 0.0;     // Gamma_L/Gamma at the optimum

    double p_total_first_order = 0.0;   // rate sum at the optimum
    double p_closed_form = 0.0;         // printed closed-form estimate of the minimum
    double detuning_closed_form = 0.0;  // closed-form optimal detuning
    bool at_bracket_edge = false;       // optimum pinned to the search window edge
};

// Small-error scattering rates (integrated probabilities before exponentiation).
double catalysis_rate(const BudgetInput& input, double detuning);
double lattice_rate(const BudgetInput& input, double detuning);

// Rates clamped to [0, 1], the small-error probabilities.
double p_catalysis(const BudgetInput& input, double detuning);
double p_lattice(const BudgetInput& input, double detuning);

// 1 - exp(-rate_c)*exp(-rate_L); reduces to the rate sum to first order.
double p_total(const BudgetInput& input, double detuning);

// Golden-section minimization of p_total over Delta_L/Gamma in [10, 1e8]
// (log spaced). Also evaluates the closed forms for comparison.
BudgetResult optimize_detuning(const BudgetInput& input);

}  // namespace olq
