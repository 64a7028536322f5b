#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "olq/motional.hpp"

namespace olq {

enum class FomMethod { closed_form, quadrature };
enum class KernelTreatment { full, near_field };

// Dipole-dipole figure of merit: coherent pair level shift over cooperative
// decay rate. Sign convention of this library: geometries dominated by
// on-axis (head-to-tail) separations of pi-polarized dipoles are attractive
// and carry kappa < 0; side-by-side geometries carry kappa > 0.
struct FomResult {
    double kappa = 0.0;
    std::optional<double> c_kappa;  // kappa*eta^3 where the form separates
    std::optional<double> mean_f;   // <f_qq> over the relative density, level-shift sign
    std::optional<double> mean_g;   // <g_qq>
    FomMethod method = FomMethod::closed_form;
    std::optional<double> convergence;  // last refinement change (quadrature only)
};

struct QuadratureOptions {
    int theta_order = 64;           // fixed Gauss-Legendre order in cos(theta)
    int phi_points = 64;            // trapezoid points when the pair is not axisymmetric
    int initial_radial_panels = 8;  // 8-point Gauss-Legendre per panel
    int max_refinements = 8;        // radial panel doublings
    double rel_tol = 1e-3;          // successive-refinement convergence target
    KernelTreatment treatment = KernelTreatment::full;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(double last, double previous);
    double last_estimate;
    double previous_estimate;
};

// <f_qq> and <g_qq> as 3-D expectation values of the radiation kernel over
// the relative-coordinate Gaussian of the pair, integrated in spherical
// coordinates with a logarithmic radial substitution. Throws QuadratureError
// if successive refinements do not settle within the budget.
FomResult kappa_quadrature(const PacketPair& pair, int polarization_q = 0,
                           const QuadratureOptions& options = {});

// Closed form for two ground-state atoms sharing one axially symmetric well,
// quasi-static kernel. Valid on both the oblate and the prolate branch via
// analytic continuation of the arctangent; eta_par = eta_perp gives 0.
FomResult kappa_ellipsoid(double eta_perp, double eta_par);

// Closed form for two isotropic wells separated along z by delta_z_bar = dz/x0.
// delta_z_bar = 0 is evaluated through the quadratic small-separation branch.
FomResult kappa_separated_wells(double eta, double delta_z_bar);

// Closed form for the exchange gate on circularly oscillating vibrational
// states: |kappa| = 1/(140*sqrt(pi)*eta^3).
FomResult kappa_swap(double eta);

// Maximize |kappa_ellipsoid| over eta_par/eta_perp in [1.01, 10].
std::pair<double, FomResult> optimize_aspect_ratio(double eta_perp);

// Maximize |kappa_separated_wells| over delta_z_bar in (0, 20].
std::pair<double, FomResult> optimize_separation(double eta);

}  // namespace olq
