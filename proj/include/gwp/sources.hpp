// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <span>

#include "gwp/packet.hpp"
#include "gwp/types.hpp"
#include "gwp/wavelet.hpp"

namespace gwp {

/// Field value of a moving point source. On the source trajectory
/// x1 + ct = 0 the fields are undefined; `singular` is set and `value` is 0.
struct SourceValue {
    Complex value{0.0, 0.0};
    bool singular = false;
};

/// Field emitted by a point source moving along -x1 at speed c:
///   Theta(x1+ct) / (x1+ct)^{(n-1)/2} * exp[i q (x1 - ct + |x_perp|^2 / (x1+ct))].
/// Zero ahead of the source (x1 + ct < 0). Throws std::invalid_argument
/// unless q > 0 and c > 0.
SourceValue retarded_field(double q, std::span<const double> r, double t, double c = 1.0);

/// Mirror of retarded_field, supported on x1 + ct < 0. The square roots of
/// the negative x1 + ct are the boundary values from below the real axis,
/// which is where the eps-regularized beam approaches them.
SourceValue advanced_field(double q, std::span<const double> r, double t, double c = 1.0);

/// The sum of both fields with x1 shifted by -i eps/2 and t by -i eps/(2c):
/// the Gaussian beam of width parameter eps on every transverse axis.
/// Throws std::invalid_argument unless eps > 0.
Complex regularized_sum(double q, std::span<const double> r, double t, double eps, double c = 1.0);

/// Source time dependence A sqrt(q) exp(-2 i q c t), A = -exp(-i pi/4) 4 sqrt(pi) c^2.
Complex elementary_pulse(double q, double t, double c = 1.0);

/// Weight of the beam decomposition of the packet:
///   F(q) = a q^{-nu-1} exp[-gamma (q + kappa^2 / q)],  a = p^{2nu} / ((2 gamma)^nu sqrt(2 pi)),
/// and 0 for q <= 0. exp_p scaling multiplies by exp(p).
double spectral_density(double q, const PacketParams& params, Scale scale = Scale::natural);

/// Composite source B sigma^{nu-1/2} K_{nu-1/2}(sigma), sigma = 2 kappa gamma (1 + 2ict/gamma)^{1/2},
/// B = -4 c^2 exp(-i pi/4) p / sqrt(gamma).
Complex composite_pulse(double t, const PacketParams& params, Scale scale = Scale::natural);

struct OracleValue {
    Complex value;
    /// Integral of |integrand|, the scale of the quadrature error.
    double magnitude = 0.0;
    double rel_change = 0.0;
};

/// The composite source as the integral of F(q) phi(q, t) over q > 0,
/// taken along the steepest-descent ray of the integrand (the real axis at
/// t = 0) so that large |t| does not cancel catastrophically.
/// Throws NonConvergence.
OracleValue composite_pulse_quadrature(double t, const PacketParams& params, Scale scale = Scale::natural,
                                       double tol = 1e-12);

/// The packet as the superposition of Gaussian beams, integral of
/// F(q) beam(q, r, t) over q > 0, computed with q = kappa exp(u).
/// `density_factor` multiplies F. Throws NonConvergence.
OracleValue beam_superposition_oracle(std::span<const double> r, double t, const PacketParams& params,
                                      Scale scale = Scale::natural, double tol = 1e-12,
                                      double density_factor = 1.0);

}  // namespace gwp
