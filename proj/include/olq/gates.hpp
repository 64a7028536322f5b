#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "olq/fom.hpp"
#include "olq/motional.hpp"

namespace olq {

// Ground hyperfine sublevel |F, M_F>.
struct InternalState {
    double f = 0.0;
    double m_f = 0.0;

    void validate() const;  // |m_f| <= f
};

struct TwoAtomState {
    InternalState internal_a, internal_b;
    OscillatorState motion_a, motion_b;

    int total_quanta() const { return motion_a.quanta() + motion_b.quanta(); }
    double total_m_f() const { return internal_a.m_f + internal_b.m_f; }
    int total_motional_m() const { return motion_a.m + motion_b.m; }
};

// Virtual-photon selection rules for one (q, q') channel:
//   M'_F1 + M'_F2 = M_F1 + M_F2 + (q - q'),
//   m'_1 + m'_2 +- (q - q') = m_1 + m_2 (either sign),
//   total mechanical energy conserved.
bool selection_allowed(const TwoAtomState& initial, const TwoAtomState& final_state,
                       int q, int q_prime);

// The full degenerate set of two-atom motional product states reachable from
// `state` under selection_allowed, including the input itself. Internal
// labels are carried through unchanged.
std::vector<TwoAtomState> enumerate_leakage(const TwoAtomState& state, int q, int q_prime);

// One gate's interaction model: an ordered basis, the Hermitian interaction
// matrix in units of hbar*chi, and the decay scale.
struct GateModel {
    std::vector<std::string> basis_labels;
    Eigen::MatrixXd v_matrix;  // units hbar*chi
    double chi = 0.0;          // units Gamma
    double gamma_tot = 2.0;    // cooperative decay, units Gamma
    int logical_dim = 4;
};

// Exchange-gate model on the stretched-state basis. Seven rows: the logical
// quadruple {|00>, |01>, |10>, |11>}, then the shared-two-quanta vibrational
// triple {|011>|011>, |022>|000>, |000>|022>} whose Rabi cycling sets the
// gate's recurrence time pi/chi.
GateModel build_swap_model(double chi);

// U(t) = exp(-i V t / hbar) by eigendecomposition; t in units of 1/Gamma.
Eigen::MatrixXcd evolve(const GateModel& model, double t);

struct SqrtSwapResult {
    GateModel model;
    Eigen::MatrixXcd unitary;        // full basis, at t = tau
    Eigen::Matrix4cd logical_block;  // rows/cols 0..3
    double tau = 0.0;                // pi/chi
    double leakage = 0.0;            // norm of the logical -> non-logical block at tau
};

SqrtSwapResult sqrt_swap_gate(double chi);

struct CphaseResult {
    double tau = 0.0;  // pi/chi_eff
    std::array<std::complex<double>, 4> phases{};
    double success_probability = 0.0;  // exp(-pi/|kappa|)
    Eigen::Matrix4cd unitary;
};

// chi_eff is the pair level shift over hbar, in Gamma units. kappa = 0 means
// an infinite gate time and is a domain error.
CphaseResult cphase_gate(const FomResult& kappa, double chi_eff);

// Hadamard on the target before and after the conditional phase.
Eigen::Matrix4cd compose_cnot(const Eigen::Matrix4cd& cphase);

}  // namespace olq
