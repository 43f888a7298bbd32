// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "gwp/wavelet.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gwp/special_functions.hpp"

namespace gwp {

namespace {

void require_dim(std::span<const double> v, const PacketParams& params, const char* what) {
    if (static_cast<int>(v.size()) != params.dim()) {
        throw std::invalid_argument(std::string(what) + ": point dimension does not match packet dimension");
    }
}

Complex theta_at(std::span<const double> r, Complex ct, const PacketParams& params) {
    const double x1 = r[0];
    Complex th = x1 - ct;
    for (std::size_t j = 1; j < r.size(); ++j) {
        th += r[j] * r[j] / (x1 + ct - I * params.eps(j - 1));
    }
    return th;
}

Complex transverse_denominator(double x1, Complex ct, const PacketParams& params) {
    Complex d = 1.0;
    for (double e : params.epsilons()) d *= sqrt_pos_re(x1 + ct - I * e);
    return d;
}

// sqrt(2/pi) z^nu K_nu(z) times exp(p) when scaled.
Complex radial_profile(Complex z, double nu, double p, Scale scale) {
    const Complex ks = bessel_k_scaled(nu, z);
    const Complex shift = scale == Scale::exp_p ? z - p : z;
    return std::sqrt(2.0 / pi) * std::pow(z, nu) * ks * std::exp(-shift);
}

double prefactor_c(const PacketParams& params, Scale scale) {
    const double c = std::pow(params.p(), params.nu() - 0.5);
    return scale == Scale::exp_p ? c : c * std::exp(-params.p());
}

}  // namespace

namespace detail {

Complex gwp_complex_time(std::span<const double> r, Complex ct, const PacketParams& params, Scale scale) {
    const Complex th = theta_at(r, ct, params);
    const Complex s = sqrt_pos_re(1.0 - I * th / params.gamma());
    const Complex z = params.p() * s;
    return radial_profile(z, params.nu(), params.p(), scale) / transverse_denominator(r[0], ct, params);
}

}  // namespace detail

Complex theta(std::span<const double> r, double t, const PacketParams& params) {
    require_dim(r, params, "theta");
    return theta_at(r, params.c() * t, params);
}

Complex s_value(std::span<const double> r, double t, const PacketParams& params) {
    return sqrt_pos_re(1.0 - I * theta(r, t, params) / params.gamma());
}

Complex evaluate_gwp(std::span<const double> r, double t, const PacketParams& params, Scale scale) {
    require_dim(r, params, "evaluate_gwp");
    return detail::gwp_complex_time(r, params.c() * t, params, scale);
}

Complex evaluate_gwp_2d(double x, double y, double t, const PacketParams& params, Scale scale) {
    if (params.dim() != 2) throw std::invalid_argument("evaluate_gwp_2d: packet is not planar");
    const double ct = params.c() * t;
    const Complex w = x + ct - I * params.eps(0);
    const Complex th = x - ct + y * y / w;
    const Complex s = sqrt_pos_re(1.0 - I * th / params.gamma());
    return radial_profile(params.p() * s, params.nu(), params.p(), scale) / sqrt_pos_re(w);
}

double fourier_log_modulus(std::span<const double> k, const PacketParams& params, Scale scale) {
    require_dim(k, params, "fourier_gwp");
    const double k1 = k[0];
    double kperp2 = 0.0;
    for (std::size_t j = 1; j < k.size(); ++j) kperp2 += k[j] * k[j];
    const double kk = std::sqrt(k1 * k1 + kperp2);
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    if (kk == 0.0) return neg_inf;
    // k + k1 without cancellation on the negative k1 side.
    const double kp = k1 >= 0.0 ? kk + k1 : kperp2 / (kk - k1);
    if (!(kp > 0.0)) return neg_inf;

    const double n = params.dim();
    const double nu = params.nu();
    const double gamma = params.gamma();
    const double kappa = params.kappa();
    double transverse = 0.0;
    for (std::size_t j = 1; j < k.size(); ++j) transverse += k[j] * k[j] * params.eps(j - 1);
    const double exponent = -kp * gamma / 2.0 - transverse / (2.0 * kp) - 2.0 * kappa * kappa * gamma / kp;
    double logmod = exponent + 0.5 * n * std::log(2.0 * pi) + 2.0 * nu * std::log(params.p()) -
                    nu * std::log(gamma) - std::log(kk) - (nu + 0.5 * (n - 1.0)) * std::log(kp);
    if (scale == Scale::exp_p) logmod += params.p();
    return logmod;
}

Complex fourier_gwp(std::span<const double> k, const PacketParams& params, double t, Scale scale) {
    const double logmod = fourier_log_modulus(k, params, scale);
    if (logmod < underflow_exponent) return 0.0;
    double k2 = 0.0;
    for (double v : k) k2 += v * v;
    const double phase = pi * (params.dim() - 1) / 4.0 - std::sqrt(k2) * params.c() * t;
    return std::polar(std::exp(logmod), phase);
}

Complex fourier_gwp_2d(double kx, double ky, const PacketParams& params, double t, Scale scale) {
    if (params.dim() != 2) throw std::invalid_argument("fourier_gwp_2d: packet is not planar");
    const double kk = std::hypot(kx, ky);
    if (kk == 0.0) return 0.0;
    const double ky2 = ky * ky;
    const double k_plus = kx >= 0.0 ? kk + kx : ky2 / (kk - kx);
    const double k_minus = kx <= 0.0 ? kk - kx : ky2 / (kk + kx);
    if (!(k_plus > 0.0)) return 0.0;
    const double p = params.p();
    const double nu = params.nu();
    const double gamma = params.gamma();
    const double exponent =
        -k_plus * gamma / 2.0 - k_minus * params.eps(0) / 2.0 - p * p / (2.0 * gamma * k_plus);
    double logmod = exponent + std::log(2.0 * pi) + 2.0 * nu * std::log(p) - nu * std::log(gamma) -
                    std::log(kk) - (nu + 0.5) * std::log(k_plus);
    if (scale == Scale::exp_p) logmod += p;
    if (logmod < underflow_exponent) return 0.0;
    return std::polar(std::exp(logmod), pi / 4.0 - kk * params.c() * t);
}

Complex evaluate_beam(double q, std::span<const double> r, double t, const PacketParams& params) {
    if (!(q > 0.0) || !std::isfinite(q)) throw std::invalid_argument("evaluate_beam: q must be positive");
    require_dim(r, params, "evaluate_beam");
    const double ct = params.c() * t;
    return std::exp(I * q * theta_at(r, ct, params)) / transverse_denominator(r[0], ct, params);
}

Complex evaluate_beam_cutoff_limit(std::span<const double> r, double t, const PacketParams& params,
                                   Scale scale) {
    const double kappa = params.kappa();
    const double dx = r[0] - params.c() * t;
    const double cutoff = std::exp(-kappa * dx * dx / (4.0 * params.gamma()));
    return evaluate_beam(kappa, r, t, params) * cutoff * prefactor_c(params, scale);
}

Complex evaluate_morlet_limit(std::span<const double> r, double t, const PacketParams& params, Scale scale) {
    require_dim(r, params, "evaluate_morlet_limit");
    const double dx = r[0] - params.c() * t;
    const double sl = params.sigma_long();
    Complex expo = I * params.kappa() * dx - dx * dx / (2.0 * sl * sl);
    Complex denom = 1.0;
    for (std::size_t j = 1; j < r.size(); ++j) {
        const double st = params.sigma_trans(j - 1);
        expo -= r[j] * r[j] / (2.0 * st * st);
        denom *= sqrt_pos_re(-I * params.eps(j - 1));
    }
    return prefactor_c(params, scale) * std::exp(expo) / denom;
}

Complex evaluate_paraxial_time_limit(std::span<const double> r, double t, const PacketParams& params,
                                     Scale scale) {
    require_dim(r, params, "evaluate_paraxial_time_limit");
    const double ct = params.c() * t;
    const double dx = r[0] - ct;
    const double kappa = params.kappa();
    const double sl = params.sigma_long();
    Complex expo = I * kappa * dx - dx * dx / (2.0 * sl * sl);
    Complex denom = 1.0;
    for (std::size_t j = 1; j < r.size(); ++j) {
        const double e = params.eps(j - 1);
        const double st2 = params.sigma_trans(j - 1) * params.sigma_trans(j - 1);
        const double spread = 1.0 + 4.0 * ct * ct / (e * e);
        const double y2 = r[j] * r[j];
        expo += -y2 / (2.0 * st2 * spread) + I * 2.0 * ct * kappa * y2 / (4.0 * ct * ct + e * e);
        denom *= sqrt_pos_re(2.0 * ct - I * e);
    }
    return prefactor_c(params, scale) * std::exp(expo) / denom;
}

Complex evaluate_morlet_reference(double x, double y, double kappa, double sigma_x, double sigma_y) {
    const double envelope = std::exp(-x * x / (2.0 * sigma_x * sigma_x) - y * y / (2.0 * sigma_y * sigma_y));
    return envelope * (std::exp(-I * kappa * x) - std::exp(-kappa * kappa * sigma_x * sigma_x / 2.0));
}

}  // namespace gwp
