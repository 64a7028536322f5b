#include "olq/budget.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "olq/optimize.hpp"
#include "olq/trap.hpp"

namespace olq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDetuningMin = 10.0;
constexpr double kDetuningMax = 1e8;  // stay below the fine-structure window

double hyperfine_factor(const BudgetInput& input) {
    return 2.0 / 3.0 - 1.0 / (3.0 * input.species.f_up);
}

// rate_c = A * detuning^(3/4), rate_L = B * detuning^(-3/2)
double catalysis_prefactor(const BudgetInput& in) {
    return kPi / (8.0 * in.c_kappa) * std::pow(12.0 / in.species.gamma_over_recoil, 0.75) *
           std::pow(in.intensity_ratio, -0.75);
}

double lattice_prefactor(const BudgetInput& in) {
    return std::sqrt(3.0) * kPi / 8.0 * hyperfine_factor(in) *
           std::sqrt(in.species.gamma_over_recoil) * in.n_cycles *
           std::sqrt(in.intensity_ratio);
}

}  // namespace

void BudgetInput::validate() const {
    species.validate();
    if (!(c_kappa > 0)) throw std::invalid_argument("budget: c_kappa must be positive");
    if (!(n_cycles >= 1)) throw std::invalid_argument("budget: n_cycles must be >= 1");
    if (!(intensity_ratio > 0)) {
        throw std::invalid_argument("budget: intensity_ratio must be positive");
    }
}

double catalysis_rate(const BudgetInput& input, double detuning) {
    input.validate();
    if (!(detuning > 0)) throw std::invalid_argument("budget: detuning must be positive");
    return catalysis_prefactor(input) * std::pow(detuning, 0.75);
}

double lattice_rate(const BudgetInput& input, double detuning) {
    input.validate();
    if (!(detuning > 0)) throw std::invalid_argument("budget: detuning must be positive");
    return lattice_prefactor(input) * std::pow(detuning, -1.5);
}

double p_catalysis(const BudgetInput& input, double detuning) {
    return std::clamp(catalysis_rate(input, detuning), 0.0, 1.0);
}

double p_lattice(const BudgetInput& input, double detuning) {
    return std::clamp(lattice_rate(input, detuning), 0.0, 1.0);
}

double p_total(const BudgetInput& input, double detuning) {
    return 1.0 - std::exp(-catalysis_rate(input, detuning) - lattice_rate(input, detuning));
}

BudgetResult optimize_detuning(const BudgetInput& input) {
    input.validate();
    const double a = catalysis_prefactor(input);
    const double b = lattice_prefactor(input);

    const auto objective = [&](double log_detuning) {
        const double d = std::exp(log_detuning);
        return 1.0 - std::exp(-a * std::pow(d, 0.75) - b * std::pow(d, -1.5));
    };
    const ScalarMinimum min = golden_section_minimize(
        objective, std::log(kDetuningMin), std::log(kDetuningMax), 1e-10);
    if (!min.converged) {
        throw std::runtime_error("optimize_detuning: golden section did not converge");
    }

    BudgetResult result;
    result.optimal_detuning = std::exp(min.x);
    result.p_catalysis = p_catalysis(input, result.optimal_detuning);
    result.p_lattice = p_lattice(input, result.optimal_detuning);
    result.p_total = min.value;
    result.p_total_first_order = catalysis_rate(input, result.optimal_detuning) +
                                 lattice_rate(input, result.optimal_detuning);

    // Lattice scattering rate per Gamma: rate_L spread over the gate duration
    // T = n * 2*pi / omega_osc at the optimal detuning's well depth.
    const double depth = depth_from_intensity(input.species, input.intensity_ratio,
                                              result.optimal_detuning);
    const double omega_over_gamma = 2.0 * std::sqrt(depth) / input.species.gamma_over_recoil;
    const double duration_gamma = input.n_cycles * 2.0 * kPi / omega_over_gamma;
    result.gamma_lattice = lattice_rate(input, result.optimal_detuning) / duration_gamma;

    // Printed closed forms for the minimum and its location.
    const double h = hyperfine_factor(input);
    result.p_closed_form =
        kPi * std::cbrt(input.n_cycles / (input.c_kappa * input.c_kappa) * h /
                        input.species.gamma_over_recoil / input.intensity_ratio);
    result.detuning_closed_form =
        std::pow(input.c_kappa, 4.0 / 9.0) / std::pow(12.0, 1.0 / 9.0) *
        std::pow(h, 4.0 / 9.0) * std::pow(input.species.gamma_over_recoil, 5.0 / 9.0) *
        std::pow(input.n_cycles, 4.0 / 9.0) * std::pow(input.intensity_ratio, 5.0 / 9.0);

    const double edge_margin = 1e-3;
    result.at_bracket_edge =
        min.x < std::log(kDetuningMin) + edge_margin || min.x > std::log(kDetuningMax) - edge_margin;
    return result;
}

}  // namespace olq
