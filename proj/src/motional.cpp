#include "olq/motional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace olq {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

void PacketPair::validate() const {
    for (double w : widths_a) {
        if (!(w > 0)) throw std::invalid_argument("packet pair: widths must be positive");
    }
    for (double w : widths_b) {
        if (!(w > 0)) throw std::invalid_argument("packet pair: widths must be positive");
    }
}

PacketPair PacketPair::isotropic(double eta, double separation_kl) {
    PacketPair pair;
    pair.widths_a = {eta, eta, eta};
    pair.widths_b = {eta, eta, eta};
    pair.separation = separation_kl;
    pair.validate();
    return pair;
}

PacketPair PacketPair::ellipsoidal(double eta_perp, double eta_par) {
    PacketPair pair;
    pair.widths_a = {eta_perp, eta_perp, eta_par};
    pair.widths_b = {eta_perp, eta_perp, eta_par};
    pair.separation = 0.0;
    pair.validate();
    return pair;
}

double RelativeGaussian::density(const std::array<double, 3>& r) const {
    const double two_pi = 2.0 * std::numbers::pi;
    double norm = std::pow(two_pi, -1.5) / (widths[0] * widths[1] * widths[2]);
    const std::array<double, 3> mean = {0.0, 0.0, mean_z};
    double exponent = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double d = r[i] - mean[i];
        exponent += d * d / (2.0 * widths[i] * widths[i]);
    }
    return norm * std::exp(-exponent);
}

RelativeGaussian relative_gaussian(const PacketPair& pair) {
    pair.validate();
    RelativeGaussian rel;
    for (int i = 0; i < 3; ++i) {
        rel.widths[i] = std::hypot(pair.widths_a[i], pair.widths_b[i]);
    }
    rel.mean_z = pair.separation;
    return rel;
}

double collision_probability(double delta_z_bar, double a_bar) {
    if (a_bar < 0) throw std::invalid_argument("collision_probability: a_bar must be >= 0");
    const double dz = std::abs(delta_z_bar);
    const double a = a_bar;
    if (a == 0.0) return 0.0;

    double p;
    if (dz < 1e-9) {
        // radial CDF of the relative Gaussian
        p = std::erf(a / 2.0) - (a / kSqrtPi) * std::exp(-a * a / 4.0);
    } else {
        // exp(-(dz+a)^2/4) - exp(-(dz-a)^2/4) = -2 exp(-(dz^2+a^2)/4) sinh(dz a/2)
        const double t1 = -(2.0 / (dz * kSqrtPi)) * std::exp(-(dz * dz + a * a) / 4.0) *
                          std::sinh(dz * a / 2.0);
        double t2;
        if ((dz - a) / 2.0 > 1.0) {
            t2 = 0.5 * (std::erfc((dz - a) / 2.0) - std::erfc((dz + a) / 2.0));
        } else {
            t2 = 0.5 * (std::erf((dz + a) / 2.0) - std::erf((dz - a) / 2.0));
        }
        p = t1 + t2;
    }
    return std::clamp(p, 0.0, 1.0);
}

int shell_degeneracy(int total_quanta) {
    if (total_quanta < 0) throw std::invalid_argument("shell_degeneracy: N must be >= 0");
    return (total_quanta + 1) * (total_quanta + 2) / 2;
}

std::vector<OscillatorState> shell_states(int total_quanta) {
    if (total_quanta < 0) throw std::invalid_argument("shell_states: N must be >= 0");
    std::vector<OscillatorState> states;
    states.reserve(shell_degeneracy(total_quanta));
    for (int n = 0; 2 * n <= total_quanta; ++n) {
        const int l = total_quanta - 2 * n;
        for (int m = -l; m <= l; ++m) {
            states.push_back({n, l, m});
        }
    }
    std::sort(states.begin(), states.end());
    return states;
}

}  // namespace olq
