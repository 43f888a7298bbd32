// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <span>
#include <vector>

#include "gwp/packet.hpp"
#include "gwp/types.hpp"

namespace gwp {

/// Output scaling of the packet evaluators. exp_p multiplies the result by
/// exp(p); the packet magnitude is of order exp(-p), so this keeps large-p
/// packets representable. Every ratio-type quantity is unaffected.
enum class Scale { natural, exp_p };

struct SpacePoint {
    std::vector<double> coords;
    double t = 0.0;
};

// ---------------------------------------------------------------------------
// Exact packet in position space
// ---------------------------------------------------------------------------

/// Phase variable theta = x1 - ct + sum_j x_j^2 / (x1 + ct - i eps_j).
/// Im(theta) >= 0 for real arguments.
Complex theta(std::span<const double> r, double t, const PacketParams& params);

/// s = sqrt(1 - i theta / gamma) on the branch with positive real part.
/// Re(s) >= 1 and |arg s| < pi/4 for real arguments.
Complex s_value(std::span<const double> r, double t, const PacketParams& params);

/// The packet in any dimension:
///   sqrt(2/pi) (ps)^nu K_nu(ps) / prod_j sqrt(x1 + ct - i eps_j),
/// each square root taken with positive real part.
Complex evaluate_gwp(std::span<const double> r, double t, const PacketParams& params,
                     Scale scale = Scale::natural);

inline Complex evaluate_gwp(const SpacePoint& pt, const PacketParams& params, Scale scale = Scale::natural) {
    return evaluate_gwp(pt.coords, pt.t, params, scale);
}

/// Dedicated planar evaluator, written directly in (x, y). Requires dim == 2.
Complex evaluate_gwp_2d(double x, double y, double t, const PacketParams& params,
                        Scale scale = Scale::natural);

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

/// Closed-form Fourier transform (kernel exp(-i k.r)) in n dimensions:
///   a_n p^{2nu} gamma^{-nu} [k (k+k1)^{nu+(n-1)/2}]^{-1}
///   * exp[-(k+k1) gamma/2 - sum_j k_j^2 eps_j / (2(k+k1)) - 2 kappa^2 gamma/(k+k1) - i k c t]
/// with a_n = (2 pi)^{n/2} exp(i pi (n-1)/4). Exactly zero at k = 0, on the
/// ray k + k1 = 0 and wherever the log-modulus is below the underflow bound.
Complex fourier_gwp(std::span<const double> k, const PacketParams& params, double t,
                    Scale scale = Scale::natural);

/// Dedicated planar spectrum, written with (k - kx) eps / 2 and
/// p^2 / (2 gamma (k + kx)). Requires dim == 2.
Complex fourier_gwp_2d(double kx, double ky, const PacketParams& params, double t,
                       Scale scale = Scale::natural);

/// log|psi_hat(k)| (with the same scaling convention); -infinity where the
/// spectrum vanishes identically.
double fourier_log_modulus(std::span<const double> k, const PacketParams& params,
                           Scale scale = Scale::natural);

// ---------------------------------------------------------------------------
// Beam and asymptotic forms
// ---------------------------------------------------------------------------

/// Nonstationary Gaussian beam exp(i q theta) / prod_j sqrt(x1 + ct - i eps_j).
/// Throws std::invalid_argument unless q > 0.
Complex evaluate_beam(double q, std::span<const double> r, double t, const PacketParams& params);

/// Beam times the longitudinal cutoff:
///   beam(kappa) * exp(-kappa (x1 - ct)^2 / (4 gamma)) * p^{nu-1/2} exp(-p).
Complex evaluate_beam_cutoff_limit(std::span<const double> r, double t, const PacketParams& params,
                                   Scale scale = Scale::natural);

/// Gaussian-envelope (Morlet) limit centred at x1 = ct:
///   C / prod_j (-i eps_j)^{1/2}
///   * exp[i kappa (x1-ct) - (x1-ct)^2/(2 sigma_1^2) - sum_j x_j^2/(2 sigma_j^2)].
Complex evaluate_morlet_limit(std::span<const double> r, double t, const PacketParams& params,
                              Scale scale = Scale::natural);

/// Large-p form that keeps the transverse spreading with time: each
/// transverse axis has sigma_j^2 (1 + 4 c^2 t^2 / eps_j^2) and the curvature
/// phase 2 c t kappa x_j^2 / (4 c^2 t^2 + eps_j^2); prefactor
/// C / prod_j (2ct - i eps_j)^{1/2}.
Complex evaluate_paraxial_time_limit(std::span<const double> r, double t, const PacketParams& params,
                                     Scale scale = Scale::natural);

/// Two-term planar Morlet wavelet with its mean-correction term:
///   exp(-x^2/(2 sx^2) - y^2/(2 sy^2)) [exp(-i kappa x) - exp(-kappa^2 sx^2 / 2)].
Complex evaluate_morlet_reference(double x, double y, double kappa, double sigma_x, double sigma_y);

namespace detail {

/// Packet at a complex value of ct (analytic continuation in time). Used by
/// the contour form of the admissibility coefficient.
Complex gwp_complex_time(std::span<const double> r, Complex ct, const PacketParams& params, Scale scale);

}  // namespace detail

}  // namespace gwp
