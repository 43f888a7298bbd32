// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "gwp/sources.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gwp/quadrature.hpp"
#include "gwp/special_functions.hpp"

namespace gwp {

namespace {

void require_q(double q) {
    if (!(q > 0.0) || !std::isfinite(q)) throw std::invalid_argument("source field: q must be positive");
}

void require_c(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("source field: c must be positive");
}

// Common factor of both fields, valid for x1 + ct != 0.
Complex free_field(double q, std::span<const double> r, double ct) {
    double perp2 = 0.0;
    for (std::size_t j = 1; j < r.size(); ++j) perp2 += r[j] * r[j];
    const double alpha = r[0] - ct;
    const double beta = r[0] + ct;
    // sqrt(beta - i0): real for beta > 0, -i sqrt|beta| for beta < 0
    const Complex root = beta > 0.0 ? Complex(std::sqrt(beta), 0.0) : Complex(0.0, -std::sqrt(-beta));
    const Complex denom = std::pow(root, static_cast<double>(r.size() - 1));
    return std::polar(1.0, q * (alpha + perp2 / beta)) / denom;
}

SourceValue one_sided(double q, std::span<const double> r, double t, double c, int side) {
    require_q(q);
    require_c(c);
    if (r.size() < 2) throw std::invalid_argument("source field: need at least two coordinates");
    const double beta = r[0] + c * t;
    SourceValue v;
    if (beta == 0.0) {
        v.singular = true;
        return v;
    }
    if ((beta > 0.0) == (side > 0)) v.value = free_field(q, r, c * t);
    return v;
}

}  // namespace

SourceValue retarded_field(double q, std::span<const double> r, double t, double c) {
    return one_sided(q, r, t, c, +1);
}

SourceValue advanced_field(double q, std::span<const double> r, double t, double c) {
    return one_sided(q, r, t, c, -1);
}

Complex regularized_sum(double q, std::span<const double> r, double t, double eps, double c) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("regularized_sum: eps must be positive");
    if (r.size() < 2) throw std::invalid_argument("regularized_sum: need at least two coordinates");
    const PacketParams beam = PacketParams::axisymmetric(static_cast<int>(r.size()), 1.0, 0.5, 1.0, eps, c);
    return evaluate_beam(q, r, t, beam);
}

Complex elementary_pulse(double q, double t, double c) {
    require_q(q);
    const Complex a = -std::polar(4.0 * std::sqrt(pi) * c * c, -pi / 4.0);
    return a * std::sqrt(q) * std::polar(1.0, -2.0 * q * c * t);
}

double spectral_density(double q, const PacketParams& params, Scale scale) {
    if (!(q > 0.0)) return 0.0;
    const double nu = params.nu();
    const double gamma = params.gamma();
    const double kappa = params.kappa();
    double lg = 2.0 * nu * std::log(params.p()) - nu * std::log(2.0 * gamma) - 0.5 * std::log(2.0 * pi) -
                (nu + 1.0) * std::log(q) - gamma * (q + kappa * kappa / q);
    if (scale == Scale::exp_p) lg += params.p();
    return std::exp(lg);
}

Complex composite_pulse(double t, const PacketParams& params, Scale scale) {
    const double p = params.p();
    const double gamma = params.gamma();
    const double c = params.c();
    const Complex b = -4.0 * c * c * std::polar(1.0, -pi / 4.0) * p / std::sqrt(gamma);
    const Complex sigma = p * sqrt_pos_re(1.0 + 2.0 * I * c * t / gamma);
    const double order = params.nu() - 0.5;
    const Complex shift = scale == Scale::exp_p ? sigma - p : sigma;
    return b * std::pow(sigma, order) * bessel_k_scaled(order, sigma) * std::exp(-shift);
}

namespace {

OracleValue integrate_over_q(const std::function<Complex(double)>& integrand, double kappa, double tol) {
    LineIntegrand f = [&](double q, std::vector<double>& out) {
        const Complex v = integrand(q);
        out[0] = v.real();
        out[1] = v.imag();
    };
    const QuadratureResult r = integrate_half_line(f, 2, kappa, tol);
    return OracleValue{Complex(r.value[0], r.value[1]), std::hypot(r.magnitude[0], r.magnitude[1]), r.rel_change};
}

}  // namespace

OracleValue composite_pulse_quadrature(double t, const PacketParams& params, Scale scale, double tol) {
    // F(q) phi(q, t) = A a q^{-nu-1/2} exp(-beta q - gamma kappa^2 / q) with beta = gamma + 2ict.
    // The integrand is analytic for Re q > 0, so the path is turned onto the
    // ray through the saddle, q = kappa sqrt(gamma / beta) e^u, where the
    // exponent is -sigma cosh u and the real-axis oscillation is gone.
    const double gamma = params.gamma();
    const double kappa = params.kappa();
    const double c = params.c();
    const double nu = params.nu();
    const Complex beta(gamma, 2.0 * c * t);
    const Complex dir = std::sqrt(gamma / beta);
    const Complex sigma = 2.0 * kappa * gamma / dir;
    const Complex amp = -std::polar(4.0 * std::sqrt(pi) * c * c, -pi / 4.0);
    const double log_a = 2.0 * nu * std::log(params.p()) - nu * std::log(2.0 * gamma) - 0.5 * std::log(2.0 * pi);
    const double shift = scale == Scale::exp_p ? params.p() : 0.0;
    LineIntegrand f = [&](double x, std::vector<double>& out) {
        // x = kappa e^u along the real axis; q = x * dir on the ray, dq = q du
        const Complex q = x * dir;
        const Complex lg = log_a + (0.5 - nu) * std::log(q) - sigma * 0.5 * (x / kappa + kappa / x) + shift;
        const Complex v = amp * std::exp(lg) / x;
        out[0] = v.real();
        out[1] = v.imag();
    };
    const QuadratureResult r = integrate_half_line(f, 2, kappa, tol);
    return OracleValue{Complex(r.value[0], r.value[1]), std::hypot(r.magnitude[0], r.magnitude[1]), r.rel_change};
}

OracleValue beam_superposition_oracle(std::span<const double> r, double t, const PacketParams& params, Scale scale,
                                      double tol, double density_factor) {
    if (static_cast<int>(r.size()) != params.dim()) {
        throw std::invalid_argument("beam_superposition_oracle: point dimension does not match packet dimension");
    }
    return integrate_over_q(
        [&](double q) {
            const double w = density_factor * spectral_density(q, params, scale);
            return w == 0.0 ? Complex(0.0) : w * evaluate_beam(q, r, t, params);
        },
        params.kappa(), tol);
}

}  // namespace gwp
