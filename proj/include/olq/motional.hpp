#pragma once

#include <array>
#include <compare>
#include <vector>

namespace olq {

// Two Gaussian motional wavepackets, separated along z. Widths and the
// separation are in units of 1/k_L, so a width is numerically the
// Lamb-Dicke parameter of its axis.
struct PacketPair {
    std::array<double, 3> widths_a{};  // (sigma_x, sigma_y, sigma_z) * k_L
    std::array<double, 3> widths_b{};
    double separation = 0.0;           // Delta z * k_L

    void validate() const;
    double eta_perp() const { return widths_a[0]; }
    double eta_par() const { return widths_a[2]; }

    static PacketPair isotropic(double eta, double separation_kl);
    static PacketPair ellipsoidal(double eta_perp, double eta_par);
};

// Relative-coordinate Gaussian after splitting off the center of mass:
// mean (0, 0, separation), width sqrt(sigma_a^2 + sigma_b^2) per axis.
struct RelativeGaussian {
    std::array<double, 3> widths{};
    double mean_z = 0.0;

    double density(const std::array<double, 3>& r) const;  // normalized
};

RelativeGaussian relative_gaussian(const PacketPair& pair);

// Probability that two atoms in separated isotropic wells approach closer
// than a, with delta_z_bar = Delta z/x0 and a_bar = a/x0. The delta_z_bar -> 0
// case is evaluated through its analytic limit (the radial CDF of the
// relative Gaussian); large arguments use complementary-error-function forms.
double collision_probability(double delta_z_bar, double a_bar);

// Isotropic 3-D oscillator state |n, l, m>, energy 2n + l + 3/2.
struct OscillatorState {
    int n = 0;
    int l = 0;
    int m = 0;

    double energy() const { return 2 * n + l + 1.5; }  // units hbar*omega
    int quanta() const { return 2 * n + l; }

    auto operator<=>(const OscillatorState&) const = default;
};

int shell_degeneracy(int total_quanta);  // (N+1)(N+2)/2

// All |n, l, m> with 2n + l = total_quanta, in lexicographic (n, l, m) order.
std::vector<OscillatorState> shell_states(int total_quanta);

}  // namespace olq
