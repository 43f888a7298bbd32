// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gwp/field.hpp"
#include "gwp/packet.hpp"
#include "gwp/types.hpp"

namespace gwp {

using PlaneFunction = std::function<Complex(double x, double y)>;

/// Box hint for the adaptive integrals: centre and characteristic width per axis.
struct Window {
    double cx = 0.0, sx = 1.0, cy = 0.0, sy = 1.0;
};

/// sqrt(int |f|^2) over the plane; the integration range grows until the
/// tails are negligible and the step is refined to relative 1e-10.
double l2_norm(const PlaneFunction& f, const Window& w);
/// Riemann sum sqrt(h_1 ... h_n sum |v|^2) over a sampled field.
double l2_norm(const ComplexField& f);

/// |f|^2-weighted first and second moments in each axis.
struct AxisMoments {
    double norm2 = 0.0;
    double center[2] = {0.0, 0.0};
    double width[2] = {0.0, 0.0};
    double quadrature_err = 0.0;
};

/// Moments of an arbitrary planar function.
AxisMoments weighted_moments(const PlaneFunction& f, const Window& w, double tol = 1e-10);

enum class MomentTarget { position, frequency };

/// Moments of |psi|^2 (position) or |psi_hat|^2 (frequency, from the closed
/// form) for a planar packet. Uses the exp(p)-scaled evaluators, which leaves
/// centres and widths unchanged. Throws NonConvergence from the quadrature.
AxisMoments centers_and_widths(MomentTarget target, const PacketParams& params, double t = 0.0);

struct MomentReport {
    double center_x = 0.0, center_y = 0.0, width_x = 0.0, width_y = 0.0;
    double center_kx = 0.0, center_ky = 0.0, width_kx = 0.0, width_ky = 0.0;
    double product_x = 0.0, product_y = 0.0;
    std::optional<double> srp;
    std::optional<double> arp;
    bool directional = false;
    double quadrature_err = 0.0;
};

/// Both moment sets, the uncertainty products and the resolving powers.
MomentReport moment_report(const PacketParams& params, double t = 0.0);

/// (width_kx * width_x, width_ky * width_y).
std::pair<double, double> uncertainty_products(const MomentReport& r);

struct ResolvingPowers {
    std::optional<double> srp;
    std::optional<double> arp;
    bool directional = false;
};

/// Directional when center_kx > width_kx; then
/// SRP = (kx + dkx) / (kx - dkx) and ARP = 2 arccot(sqrt(kx^2 - dkx^2) / dky).
/// Both are left empty otherwise.
ResolvingPowers resolving_powers(const MomentReport& r);

enum class SweepMode { fixed_eps_over_gamma, fixed_kappa_eps };

struct SweepPoint {
    double sqrt_p = 0.0;
    double family_value = 0.0;
    PacketParams params;
    MomentReport report;
    /// Widths normalised by the asymptotic sigma_x, sigma_y.
    double dx_over_sigx = 0.0, dy_over_sigy = 0.0;
    /// Frequency widths times 2 sigma.
    double dkx_2sigx = 0.0, dky_2sigy = 0.0;
    /// Same ratios against sigma / sqrt(2), the RMS width of the limit Gaussian.
    double dx_over_rms = 0.0, dy_over_rms = 0.0;
};

struct SweepResult {
    SweepMode mode = SweepMode::fixed_eps_over_gamma;
    std::vector<double> values;
    std::vector<double> sqrt_p;
    /// Ordered value-major: all sqrt_p for values[0], then values[1], ...
    std::vector<SweepPoint> points;
    /// True when any family value is outside the published curve families.
    bool off_figure = false;
};

/// Packet parameters of one sweep point. eps is the unit of length.
/// fixed_eps_over_gamma: gamma = eps / value; fixed_kappa_eps: kappa = value / (2 eps), gamma = p / (2 kappa).
PacketParams sweep_params(SweepMode mode, double value, double sqrt_p, double nu, double eps);

/// Family values published for each mode: {1/3, 2/3, 2} and {4, 8, 64}.
std::vector<double> figure_family_values(SweepMode mode);

/// Evaluates every (value, sqrt_p) pair, in parallel over points.
SweepResult run_sweep(SweepMode mode, const std::vector<double>& values, const std::vector<double>& sqrt_p,
                      double nu = 0.5, double eps = 1.0);

}  // namespace gwp
