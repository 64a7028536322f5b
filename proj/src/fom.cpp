#include "olq/fom.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include "olq/kernel.hpp"
#include "olq/optimize.hpp"

namespace olq {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

// Diagonal spherical component of the kernel tensors for polarization q.
// For symmetric Cartesian tensors: q = 0 -> T_zz, q = +-1 -> (T_xx + T_yy)/2.
double diagonal_component(const Eigen::Matrix3d& t, int q) {
    return q == 0 ? t(2, 2) : 0.5 * (t(0, 0) + t(1, 1));
}

struct RawMeans {
    double f = 0.0;
    double g = 0.0;
};

// One full quadrature pass at a given radial resolution. Spherical
// coordinates are centered on the kernel singularity (relative coordinate
// zero); the log radial substitution flattens the 1/(kr)^3 kernel against
// the r^2 Jacobian.
RawMeans integrate_means(const RelativeGaussian& rel, int q, KernelTreatment treatment,
                         int radial_panels, const GaussRule& theta_rule,
                         const GaussRule& panel_rule, int phi_points) {
    const double s_min = std::min({rel.widths[0], rel.widths[1], rel.widths[2]});
    const double s_max = std::max({rel.widths[0], rel.widths[1], rel.widths[2]});
    const double r_min = 1e-2 * s_min;
    const double r_max = std::abs(rel.mean_z) + 12.0 * s_max;
    const double u_min = std::log(r_min);
    const double u_max = std::log(r_max);

    const bool axisymmetric = rel.widths[0] == rel.widths[1];
    const double two_pi = 2.0 * std::numbers::pi;

    RawMeans means;
    for (int panel = 0; panel < radial_panels; ++panel) {
        const double ua = u_min + (u_max - u_min) * panel / radial_panels;
        const double ub = u_min + (u_max - u_min) * (panel + 1) / radial_panels;
        for (size_t iu = 0; iu < panel_rule.nodes.size(); ++iu) {
            const double u = 0.5 * (ua + ub) + 0.5 * (ub - ua) * panel_rule.nodes[iu];
            const double wu = 0.5 * (ub - ua) * panel_rule.weights[iu];
            const double r = std::exp(u);
            const double jac = r * r * r;  // r^2 dr = r^3 du

            for (size_t ic = 0; ic < theta_rule.nodes.size(); ++ic) {
                const double c = theta_rule.nodes[ic];
                const double wc = theta_rule.weights[ic];
                const double s = std::sqrt(std::max(0.0, 1.0 - c * c));

                double f_val = 0.0;
                double g_val = 1.0;
                if (treatment == KernelTreatment::near_field) {
                    f_val = near_field_f_qq(q, r, c);
                } else {
                    const auto sample =
                        kernel_at(RelativeCoordinate::from_spherical(r, std::acos(std::clamp(c, -1.0, 1.0))));
                    f_val = diagonal_component(sample.f, q);
                    g_val = diagonal_component(sample.g, q);
                }

                if (axisymmetric) {
                    const double rho = rel.density({r * s, 0.0, r * c});
                    const double w = wu * wc * two_pi * jac * rho;
                    means.f += w * f_val;
                    means.g += w * g_val;
                } else {
                    double rho_phi = 0.0;
                    for (int ip = 0; ip < phi_points; ++ip) {
                        const double phi = two_pi * ip / phi_points;
                        rho_phi += rel.density(
                            {r * s * std::cos(phi), r * s * std::sin(phi), r * c});
                    }
                    rho_phi *= two_pi / phi_points;
                    const double w = wu * wc * jac * rho_phi;
                    means.f += w * f_val;
                    means.g += w * g_val;
                }
            }
        }
    }
    return means;
}

double assemble_kappa(double mean_f, double mean_g) {
    return -mean_f / (2.0 * (1.0 + mean_g));
}

// Bracket of the common-well closed form as a function of
// u = (eta_perp/eta)^2 = (1 - t^2)/t^2 with t = eta_par/eta_perp:
//   B(u) = -2 - 3/u + 3 (1/v^3 + 1/v) atan(v),  v = sqrt(u).
// Series for small |u| (the two large terms cancel there); otherwise the
// arctangent continued analytically across the prolate branch (u < 0).
double ellipsoid_bracket(double u) {
    if (std::abs(u) < 0.25) {
        double power = 1.0;
        double sum = 0.0;
        for (int m = 1; m <= 40; ++m) {
            power *= -u;
            sum += 6.0 * power / ((2.0 * m + 1.0) * (2.0 * m + 3.0));
        }
        return sum;
    }
    const std::complex<double> v = std::sqrt(std::complex<double>(u, 0.0));
    const std::complex<double> inv_v = 1.0 / v;
    const std::complex<double> b =
        -2.0 - 3.0 / u + 3.0 * (inv_v * inv_v * inv_v + inv_v) * std::atan(v);
    return b.real();
}

}  // namespace

QuadratureError::QuadratureError(double last, double previous)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "kappa quadrature did not converge: last estimate " << last
              << ", previous " << previous;
          return msg.str();
      }()),
      last_estimate(last),
      previous_estimate(previous) {}

FomResult kappa_quadrature(const PacketPair& pair, int polarization_q,
                           const QuadratureOptions& options) {
    if (polarization_q < -1 || polarization_q > 1) {
        throw std::invalid_argument("kappa_quadrature: polarization q must be -1, 0 or +1");
    }
    const RelativeGaussian rel = relative_gaussian(pair);
    const GaussRule theta_rule = gauss_legendre(options.theta_order);
    const GaussRule panel_rule = gauss_legendre(8);

    int panels = options.initial_radial_panels;
    RawMeans prev = integrate_means(rel, polarization_q, options.treatment, panels,
                                    theta_rule, panel_rule, options.phi_points);
    for (int level = 0; level < options.max_refinements; ++level) {
        panels *= 2;
        const RawMeans next = integrate_means(rel, polarization_q, options.treatment, panels,
                                              theta_rule, panel_rule, options.phi_points);
        const double df = std::abs(next.f - prev.f);
        const double dg = std::abs(next.g - prev.g);
        const bool f_ok = df <= options.rel_tol * std::abs(next.f) + options.rel_tol * 1e-3;
        const bool g_ok = dg <= options.rel_tol * std::abs(next.g) + 1e-9;
        if (f_ok && g_ok) {
            FomResult result;
            result.mean_f = -next.f;  // level-shift sign (attractive head-to-tail < 0)
            result.mean_g = next.g;
            result.kappa = assemble_kappa(*result.mean_f, *result.mean_g);
            result.method = FomMethod::quadrature;
            result.convergence =
                std::max(df / (std::abs(next.f) + 1e-3), dg / (1.0 + std::abs(next.g)));
            return result;
        }
        prev = next;
    }
    // one more refinement just to report where the run was heading
    const RawMeans final_means = integrate_means(rel, polarization_q, options.treatment,
                                                 panels * 2, theta_rule, panel_rule,
                                                 options.phi_points);
    throw QuadratureError(assemble_kappa(-final_means.f, final_means.g),
                          assemble_kappa(-prev.f, prev.g));
}

FomResult kappa_ellipsoid(double eta_perp, double eta_par) {
    if (!(eta_perp > 0) || !(eta_par > 0)) {
        throw std::invalid_argument("kappa_ellipsoid: Lamb-Dicke parameters must be positive");
    }
    const double t = eta_par / eta_perp;
    const double u = (1.0 - t * t) / (t * t);
    const double bracket = ellipsoid_bracket(u);
    FomResult result;
    result.kappa = -bracket / (16.0 * kSqrtPi * eta_perp * eta_perp * eta_par);
    result.c_kappa = result.kappa * eta_perp * eta_perp * eta_perp;
    result.method = FomMethod::closed_form;
    return result;
}

FomResult kappa_separated_wells(double eta, double delta_z_bar) {
    if (!(eta > 0)) throw std::invalid_argument("kappa_separated_wells: eta must be positive");
    if (delta_z_bar < 0) {
        throw std::invalid_argument("kappa_separated_wells: delta_z_bar must be >= 0");
    }
    const double dz = delta_z_bar;
    double bracket;
    if (dz == 0.0) {
        bracket = 0.0;
    } else if (dz < 0.1) {
        // quadratic small-separation branch (cancellation-free)
        bracket = -(dz * dz) / (80.0 * kSqrtPi) * (1.0 - 5.0 * dz * dz / 28.0);
    } else {
        bracket = std::exp(-dz * dz / 4.0) / kSqrtPi * (0.125 + 0.75 / (dz * dz)) -
                  0.75 * std::erf(dz / 2.0) / (dz * dz * dz);
    }
    FomResult result;
    result.kappa = bracket / (eta * eta * eta);
    result.c_kappa = bracket;
    result.method = FomMethod::closed_form;
    return result;
}

FomResult kappa_swap(double eta) {
    if (!(eta > 0)) throw std::invalid_argument("kappa_swap: eta must be positive");
    FomResult result;
    result.c_kappa = -1.0 / (140.0 * kSqrtPi);
    result.kappa = *result.c_kappa / (eta * eta * eta);
    result.method = FomMethod::closed_form;
    return result;
}

std::pair<double, FomResult> optimize_aspect_ratio(double eta_perp) {
    if (!(eta_perp > 0)) {
        throw std::invalid_argument("optimize_aspect_ratio: eta_perp must be positive");
    }
    const auto objective = [eta_perp](double ratio) {
        return -std::abs(kappa_ellipsoid(eta_perp, ratio * eta_perp).kappa);
    };
    const ScalarMinimum min = golden_section_minimize(objective, 1.01, 10.0, 1e-9);
    if (!min.converged) {
        throw std::runtime_error("optimize_aspect_ratio: golden section did not converge");
    }
    return {min.x, kappa_ellipsoid(eta_perp, min.x * eta_perp)};
}

std::pair<double, FomResult> optimize_separation(double eta) {
    if (!(eta > 0)) throw std::invalid_argument("optimize_separation: eta must be positive");
    const auto objective = [eta](double dz) {
        return -std::abs(kappa_separated_wells(eta, dz).kappa);
    };
    const ScalarMinimum min = golden_section_minimize(objective, 1e-3, 20.0, 1e-9);
    if (!min.converged) {
        throw std::runtime_error("optimize_separation: golden section did not converge");
    }
    return {min.x, kappa_separated_wells(eta, min.x)};
}

}  // namespace olq
