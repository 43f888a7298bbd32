// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace gwp {

/// Vector-valued integrand: writes `out.size()` components at x.
using LineIntegrand = std::function<void(double x, std::vector<double>& out)>;
using PlaneIntegrand = std::function<void(double x, double y, std::vector<double>& out)>;

struct QuadratureResult {
    std::vector<double> value;
    /// Integrals of the component magnitudes, the reference for the
    /// convergence test.
    std::vector<double> magnitude;
    /// Largest |last change| / magnitude over components at termination.
    double rel_change = 0.0;
    std::size_t evaluations = 0;
};

/// Integral over the real line of a smooth integrand with (possibly
/// stretched) exponential tails, by the trapezoid rule in u after the
/// substitution x = center + scale * sinh(u). The u-range grows until the
/// boundary terms are negligible, then the step is halved until every
/// component changes by at most tol times its magnitude integral.
/// Throws NonConvergence when the step budget is exhausted.
QuadratureResult integrate_line(const LineIntegrand& f, std::size_t components, double center, double scale,
                                double tol);

/// Iterated version of integrate_line over the plane; the inner (y)
/// integrals run at tol / 10.
QuadratureResult integrate_plane(const PlaneIntegrand& f, std::size_t components, double cx, double sx,
                                 double cy, double sy, double tol);

/// Integral over (0, inf) of a smooth integrand by the trapezoid rule after
/// x = scale * exp(u), with the same range growth and step halving.
QuadratureResult integrate_half_line(const LineIntegrand& f, std::size_t components, double scale, double tol);

}  // namespace gwp
