#include "olq/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace olq {

namespace {

// All single-atom |n, l, m> states with 2n + l <= max_quanta.
std::vector<OscillatorState> states_up_to(int max_quanta) {
    std::vector<OscillatorState> states;
    for (int quanta = 0; quanta <= max_quanta; ++quanta) {
        const auto shell = shell_states(quanta);
        states.insert(states.end(), shell.begin(), shell.end());
    }
    return states;
}

bool motional_less(const TwoAtomState& a, const TwoAtomState& b) {
    const auto key = [](const TwoAtomState& s) {
        return std::tuple(s.motion_a, s.motion_b);
    };
    return key(a) < key(b);
}

}  // namespace

void InternalState::validate() const {
    if (std::abs(m_f) > f + 1e-12) {
        throw std::invalid_argument("internal state: |m_f| must not exceed f");
    }
}

bool selection_allowed(const TwoAtomState& initial, const TwoAtomState& final_state,
                       int q, int q_prime) {
    if (q < -1 || q > 1 || q_prime < -1 || q_prime > 1) {
        throw std::invalid_argument("selection_allowed: q, q' must be -1, 0 or +1");
    }
    const int dq = q - q_prime;

    const double m_f_change = final_state.total_m_f() - initial.total_m_f();
    if (std::abs(m_f_change - dq) > 1e-12) return false;

    // Internal angular momentum traded against motional rotation; the
    // photon-pair projection enters with either sign.
    const int motional_change = final_state.total_motional_m() - initial.total_motional_m();
    if (motional_change != dq && motional_change != -dq) return false;

    return final_state.total_quanta() == initial.total_quanta();
}

std::vector<TwoAtomState> enumerate_leakage(const TwoAtomState& state, int q, int q_prime) {
    const int total = state.total_quanta();
    const auto singles = states_up_to(total);

    std::vector<TwoAtomState> reachable;
    for (const auto& ma : singles) {
        for (const auto& mb : singles) {
            if (ma.quanta() + mb.quanta() != total) continue;
            TwoAtomState candidate = state;
            candidate.motion_a = ma;
            candidate.motion_b = mb;
            if (selection_allowed(state, candidate, q, q_prime)) {
                reachable.push_back(candidate);
            }
        }
    }
    std::sort(reachable.begin(), reachable.end(), motional_less);
    return reachable;
}

GateModel build_swap_model(double chi) {
    if (!(chi > 0)) throw std::invalid_argument("build_swap_model: chi must be positive");

    GateModel model;
    model.chi = chi;
    model.logical_dim = 4;
    model.basis_labels = {"|00>",        "|01>",        "|10>",       "|11>",
                          "|011;011>",   "|022;000>",   "|000;022>"};

    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(7, 7);
    // logical block: nothing on |00>, exchange coupling in the middle,
    // plain shift on |11>
    v(1, 1) = v(2, 2) = 7.0 / 4.0;
    v(1, 2) = v(2, 1) = -7.0 / 4.0;
    v(3, 3) = 1.0;
    // shared-two-quanta vibrational block
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    v(4, 4) = 1.0;
    v(5, 5) = v(6, 6) = 9.0 / 4.0;
    v(4, 5) = v(5, 4) = -inv_sqrt2;
    v(4, 6) = v(6, 4) = -inv_sqrt2;
    v(5, 6) = v(6, 5) = -5.0 / 4.0;

    model.v_matrix = v;
    return model;
}

Eigen::MatrixXcd evolve(const GateModel& model, double t) {
    if (t < 0) throw std::invalid_argument("evolve: t must be >= 0");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(model.v_matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("evolve: eigendecomposition failed");
    }
    const auto& values = solver.eigenvalues();
    const Eigen::MatrixXcd vectors = solver.eigenvectors().cast<std::complex<double>>();

    Eigen::VectorXcd phases(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        phases(i) = std::polar(1.0, -values(i) * model.chi * t);
    }
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

SqrtSwapResult sqrt_swap_gate(double chi) {
    SqrtSwapResult result;
    result.model = build_swap_model(chi);
    result.tau = std::numbers::pi / chi;
    result.unitary = evolve(result.model, result.tau);
    result.logical_block = result.unitary.topLeftCorner<4, 4>();
    result.leakage = result.unitary.bottomLeftCorner(3, 4).norm();
    return result;
}

CphaseResult cphase_gate(const FomResult& kappa, double chi_eff) {
    if (kappa.kappa == 0.0) {
        throw std::domain_error("cphase_gate: kappa = 0 means an infinite gate time");
    }
    if (!(chi_eff > 0)) throw std::invalid_argument("cphase_gate: chi_eff must be positive");

    CphaseResult result;
    result.tau = std::numbers::pi / chi_eff;
    result.phases = {1.0, 1.0, 1.0, -1.0};
    result.success_probability = std::exp(-std::numbers::pi / std::abs(kappa.kappa));
    result.unitary = Eigen::Matrix4cd::Identity();
    result.unitary(3, 3) = -1.0;
    return result;
}

Eigen::Matrix4cd compose_cnot(const Eigen::Matrix4cd& cphase) {
    Eigen::Matrix2cd h;
    h << 1.0, 1.0, 1.0, -1.0;
    h /= std::sqrt(2.0);
    Eigen::Matrix4cd target_h = Eigen::Matrix4cd::Zero();
    // I (x) H on the {|00>,|01>,|10>,|11>} ordering
    target_h.topLeftCorner<2, 2>() = h;
    target_h.bottomRightCorner<2, 2>() = h;
    return target_h * cphase * target_h;
}

}  // namespace olq
