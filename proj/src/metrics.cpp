// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "gwp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "gwp/quadrature.hpp"
#include "gwp/wavelet.hpp"

namespace gwp {

double l2_norm(const PlaneFunction& f, const Window& w) {
    const QuadratureResult r = integrate_plane(
        [&](double x, double y, std::vector<double>& o) { o[0] = std::norm(f(x, y)); }, 1, w.cx, w.sx, w.cy, w.sy,
        1e-10);
    return std::sqrt(r.value[0]);
}

double l2_norm(const ComplexField& f) {
    f.grid.validate();
    double cell = 1.0;
    for (double h : f.grid.spacing) cell *= h;
    double s = 0.0;
    for (Complex v : f.values) s += std::norm(v);
    return std::sqrt(s * cell);
}

AxisMoments weighted_moments(const PlaneFunction& f, const Window& w, double tol) {
    // Moments about the window centre keep the variance free of cancellation.
    const QuadratureResult r = integrate_plane(
        [&](double x, double y, std::vector<double>& o) {
            const double m = std::norm(f(x, y));
            const double dx = x - w.cx;
            const double dy = y - w.cy;
            o[0] = m;
            o[1] = m * dx;
            o[2] = m * dy;
            o[3] = m * dx * dx;
            o[4] = m * dy * dy;
        },
        5, w.cx, w.sx, w.cy, w.sy, tol);
    AxisMoments out;
    const double n = r.value[0];
    if (!(n > 0.0) || !std::isfinite(n)) throw NonConvergence("weighted_moments: vanishing or non-finite norm");
    out.norm2 = n;
    const double mx = r.value[1] / n;
    const double my = r.value[2] / n;
    out.center[0] = w.cx + mx;
    out.center[1] = w.cy + my;
    out.width[0] = std::sqrt(std::max(0.0, r.value[3] / n - mx * mx));
    out.width[1] = std::sqrt(std::max(0.0, r.value[4] / n - my * my));
    out.quadrature_err = r.rel_change;
    return out;
}

AxisMoments centers_and_widths(MomentTarget target, const PacketParams& params, double t) {
    if (params.dim() != 2) throw std::invalid_argument("centers_and_widths: packet must be planar");
    const double sx = params.sigma_long();
    const double sy = params.sigma_trans(0);
    if (target == MomentTarget::position) {
        return weighted_moments([&](double x, double y) { return evaluate_gwp_2d(x, y, t, params, Scale::exp_p); },
                                Window{params.c() * t, sx, 0.0, sy});
    }
    return weighted_moments([&](double kx, double ky) { return fourier_gwp_2d(kx, ky, params, t, Scale::exp_p); },
                            Window{params.kappa(), 1.0 / sx, 0.0, 1.0 / sy});
}

std::pair<double, double> uncertainty_products(const MomentReport& r) {
    return {r.width_kx * r.width_x, r.width_ky * r.width_y};
}

ResolvingPowers resolving_powers(const MomentReport& r) {
    ResolvingPowers out;
    out.directional = r.center_kx > r.width_kx;
    if (out.directional) {
        out.srp = (r.center_kx + r.width_kx) / (r.center_kx - r.width_kx);
        const double base = std::sqrt(r.center_kx * r.center_kx - r.width_kx * r.width_kx);
        out.arp = 2.0 * std::atan2(r.width_ky, base);
    }
    return out;
}

MomentReport moment_report(const PacketParams& params, double t) {
    const AxisMoments pos = centers_and_widths(MomentTarget::position, params, t);
    const AxisMoments frq = centers_and_widths(MomentTarget::frequency, params, t);
    MomentReport r;
    r.center_x = pos.center[0];
    r.center_y = pos.center[1];
    r.width_x = pos.width[0];
    r.width_y = pos.width[1];
    r.center_kx = frq.center[0];
    r.center_ky = frq.center[1];
    r.width_kx = frq.width[0];
    r.width_ky = frq.width[1];
    std::tie(r.product_x, r.product_y) = uncertainty_products(r);
    const ResolvingPowers rp = resolving_powers(r);
    r.srp = rp.srp;
    r.arp = rp.arp;
    r.directional = rp.directional;
    // A relative error e in each second moment moves a width by about e / 2;
    // a product carries two widths.
    r.quadrature_err = std::max(pos.quadrature_err, frq.quadrature_err);
    return r;
}

std::vector<double> figure_family_values(SweepMode mode) {
    if (mode == SweepMode::fixed_eps_over_gamma) return {1.0 / 3.0, 2.0 / 3.0, 2.0};
    return {4.0, 8.0, 64.0};
}

PacketParams sweep_params(SweepMode mode, double value, double sqrt_p, double nu, double eps) {
    if (!(value > 0.0) || !(sqrt_p > 0.0)) throw std::invalid_argument("sweep_params: value and sqrt_p must be positive");
    const double p = sqrt_p * sqrt_p;
    if (mode == SweepMode::fixed_eps_over_gamma) return PacketParams::planar(p, nu, eps / value, eps);
    const double kappa = value / (2.0 * eps);
    return PacketParams::planar(p, nu, p / (2.0 * kappa), eps);
}

SweepResult run_sweep(SweepMode mode, const std::vector<double>& values, const std::vector<double>& sqrt_p, double nu,
                      double eps) {
    if (values.empty() || sqrt_p.empty()) throw std::invalid_argument("run_sweep: empty value or sqrt_p list");
    SweepResult res;
    res.mode = mode;
    res.values = values;
    res.sqrt_p = sqrt_p;
    const std::vector<double> known = figure_family_values(mode);
    for (double v : values) {
        const bool match = std::any_of(known.begin(), known.end(), [&](double k) { return std::abs(v - k) <= 1e-9 * k; });
        if (!match) res.off_figure = true;
    }
    for (double v : values) {
        for (double s : sqrt_p) {
            PacketParams prm = sweep_params(mode, v, s, nu, eps);
            res.points.push_back(SweepPoint{s, v, prm, {}, 0, 0, 0, 0, 0, 0});
        }
    }
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(res.points.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            SweepPoint& pt = res.points[static_cast<std::size_t>(i)];
            pt.report = moment_report(pt.params);
            const double sx = pt.params.sigma_long();
            const double sy = pt.params.sigma_trans(0);
            pt.dx_over_sigx = pt.report.width_x / sx;
            pt.dy_over_sigy = pt.report.width_y / sy;
            pt.dkx_2sigx = pt.report.width_kx * 2.0 * sx;
            pt.dky_2sigy = pt.report.width_ky * 2.0 * sy;
            pt.dx_over_rms = pt.dx_over_sigx * std::sqrt(2.0);
            pt.dy_over_rms = pt.dy_over_sigy * std::sqrt(2.0);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return res;
}

}  // namespace gwp
