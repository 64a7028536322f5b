#pragma once

#include <complex>

#include <Eigen/Dense>

namespace olq {

// Relative coordinate of the two atoms in units of 1/k_L.
struct RelativeCoordinate {
    Eigen::Vector3d kr_vector{0, 0, 0};

    double kr() const { return kr_vector.norm(); }
    // polar angle from the z (polarization/quantization) axis
    double theta() const;

    static RelativeCoordinate from_spherical(double kr, double theta, double phi = 0.0);
};

// The retarded two-dipole radiation kernel T = f + i*g evaluated at one
// relative coordinate. Normalization:
//   g_qq' -> delta_qq' as kr -> 0 (in-phase pair decays at twice the single rate),
//   f_00 * (kr)^3 -> -3*P2(cos theta) in the same limit.
// The Cartesian tensors are real and symmetric.
struct KernelSample {
    Eigen::Matrix3d f = Eigen::Matrix3d::Zero();
    Eigen::Matrix3d g = Eigen::Matrix3d::Zero();

    std::complex<double> f_spherical(int q, int q_prime) const;
    std::complex<double> g_spherical(int q, int q_prime) const;
    // diagonal spherical components, real for symmetric tensors
    double f_qq(int q) const;
    double g_qq(int q) const;
};

// kr = 0 is a domain error (the level-shift part diverges).
KernelSample kernel_at(const RelativeCoordinate& coord);

// Leading (kr)^-3 multipole of f_qq alone; the quasi-static comparison term.
double near_field_f_qq(int q, double kr, double cos_theta);

// Change of basis to e_{+1} = -(e_x + i e_y)/sqrt(2), e_0 = e_z,
// e_{-1} = (e_x - i e_y)/sqrt(2). Indices run q = -1, 0, +1 -> 0, 1, 2.
Eigen::Matrix3cd spherical_from_cartesian(const Eigen::Matrix3cd& tensor);
Eigen::Matrix3cd cartesian_from_spherical(const Eigen::Matrix3cd& tensor);

}  // namespace olq
