// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include "gwp/types.hpp"

namespace gwp {

/// Square root on the branch with non-negative real part; sqrt_pos_re(0) == 0.
Complex sqrt_pos_re(Complex z);

/// Modified Bessel function of the second kind (MacDonald's function) K_nu(z)
/// for Re z > 0 and any real order.
///
/// Half-integer orders use the terminating closed form. Other orders use
/// Temme's series for |z| <= 2, Steed's continued fraction for 2 < |z| <= 25
/// and the Hankel asymptotic expansion beyond, followed by forward recurrence
/// in the order where needed.
///
/// Throws std::domain_error when Re z <= 0 or z is not finite and
/// std::overflow_error when the result is not representable.
Complex bessel_k(double nu, Complex z);

/// exp(z) * K_nu(z). Same algorithms and domain as bessel_k, but finite for
/// arguments whose unscaled value would underflow.
Complex bessel_k_scaled(double nu, Complex z);

}  // namespace gwp
