#include "olq/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace olq {

namespace {

// Unitary Cartesian -> spherical map; column q+1 holds e_q.
const Eigen::Matrix3cd& spherical_basis() {
    static const Eigen::Matrix3cd basis = [] {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        const std::complex<double> i(0.0, 1.0);
        Eigen::Matrix3cd b;
        b.col(0) << inv_sqrt2, -i * inv_sqrt2, 0.0;   // e_{-1}
        b.col(1) << 0.0, 0.0, 1.0;                    // e_0
        b.col(2) << -inv_sqrt2, -i * inv_sqrt2, 0.0;  // e_{+1}
        return b;
    }();
    return basis;
}

int check_q(int q) {
    if (q < -1 || q > 1) throw std::invalid_argument("spherical index q must be -1, 0 or +1");
    return q + 1;
}

// Radial profiles of the transverse (delta - rr) and longitudinal-anisotropy
// (delta - 3rr) parts. Series branches avoid the small-x cancellation in the
// g profile.
struct RadialProfiles {
    double f_perp, f_aniso, g_perp, g_aniso;
};

RadialProfiles radial_profiles(double x) {
    RadialProfiles p;
    const double sx = std::sin(x);
    const double cx = std::cos(x);
    p.f_perp = cx / x;
    p.f_aniso = sx / (x * x) + cx / (x * x * x);
    p.g_perp = sx / x;
    if (x < 0.05) {
        const double x2 = x * x;
        p.g_aniso = -1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0;
    } else {
        p.g_aniso = cx / (x * x) - sx / (x * x * x);
    }
    return p;
}

}  // namespace

double RelativeCoordinate::theta() const {
    const double r = kr();
    if (r == 0.0) return 0.0;
    return std::acos(std::clamp(kr_vector.z() / r, -1.0, 1.0));
}

RelativeCoordinate RelativeCoordinate::from_spherical(double kr, double theta, double phi) {
    RelativeCoordinate c;
    c.kr_vector << kr * std::sin(theta) * std::cos(phi),
        kr * std::sin(theta) * std::sin(phi), kr * std::cos(theta);
    return c;
}

KernelSample kernel_at(const RelativeCoordinate& coord) {
    const double x = coord.kr();
    if (!(x > 0)) {
        throw std::domain_error("kernel_at: kr must be positive (level shift diverges)");
    }
    const Eigen::Vector3d n = coord.kr_vector / x;
    const Eigen::Matrix3d rr = n * n.transpose();
    const Eigen::Matrix3d perp = Eigen::Matrix3d::Identity() - rr;
    const Eigen::Matrix3d aniso = Eigen::Matrix3d::Identity() - 3.0 * rr;

    const RadialProfiles p = radial_profiles(x);
    KernelSample sample;
    sample.f = 1.5 * (-perp * p.f_perp + aniso * p.f_aniso);
    sample.g = 1.5 * (perp * p.g_perp + aniso * p.g_aniso);
    return sample;
}

double near_field_f_qq(int q, double kr, double cos_theta) {
    if (!(kr > 0)) throw std::domain_error("near_field_f_qq: kr must be positive");
    check_q(q);
    const double c2 = cos_theta * cos_theta;
    // (3/2)(delta - 3 rr)_qq / x^3; the q = 0 component is -3 P2(cos theta)/x^3.
    const double angular = (q == 0) ? (1.0 - 3.0 * c2) : (3.0 * c2 - 1.0) / 2.0;
    return 1.5 * angular / (kr * kr * kr);
}

std::complex<double> KernelSample::f_spherical(int q, int q_prime) const {
    const auto& b = spherical_basis();
    return b.col(check_q(q)).adjoint() * f.cast<std::complex<double>>() * b.col(check_q(q_prime));
}

std::complex<double> KernelSample::g_spherical(int q, int q_prime) const {
    const auto& b = spherical_basis();
    return b.col(check_q(q)).adjoint() * g.cast<std::complex<double>>() * b.col(check_q(q_prime));
}

double KernelSample::f_qq(int q) const { return f_spherical(q, q).real(); }

double KernelSample::g_qq(int q) const { return g_spherical(q, q).real(); }

Eigen::Matrix3cd spherical_from_cartesian(const Eigen::Matrix3cd& tensor) {
    const auto& b = spherical_basis();
    return b.adjoint() * tensor * b;
}

Eigen::Matrix3cd cartesian_from_spherical(const Eigen::Matrix3cd& tensor) {
    const auto& b = spherical_basis();
    return b * tensor * b.adjoint();
}

}  // namespace olq
