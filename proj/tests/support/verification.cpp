// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <random>
#include <stdexcept>
#include <tuple>

#include "gwp/cwt.hpp"
#include "gwp/fft.hpp"
#include "gwp/field.hpp"
#include "gwp/metrics.hpp"
#include "gwp/quadrature.hpp"
#include "gwp/sources.hpp"
#include "gwp/special_functions.hpp"
#include "gwp/wavelet.hpp"
#include "oracles.hpp"
#include "wave_residual.hpp"

namespace gwp::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const PacketParams kFig1 = PacketParams::planar(0.5, 0.5, 0.25, 1.0);
const PacketParams kFig2 = PacketParams::planar(1.0, 0.5, 0.5, 16.0);

struct Outcome {
    bool passed;
    std::string detail;
};

// Wave-equation residual ratio under h -> h/2 at 50 random points per set.
Outcome exact_solution() {
    constexpr double kTarget = 4.0, kBand = 0.5, kBudget = 10.0;
    const auto t0 = Clock::now();
    std::mt19937_64 gen(20260101);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double lo = 1e300, hi = 0.0;
    int bad = 0, total = 0;
    for (int dim : {2, 3}) {
        for (const auto& [p, nu, gamma, eps] : {std::tuple{0.5, 0.5, 0.25, 1.0}, std::tuple{1.0, 0.5, 0.5, 16.0},
                                               std::tuple{100.0, 0.5, 1.0, 1.0}}) {
            const PacketParams q = PacketParams::axisymmetric(dim, p, nu, gamma, eps);
            const oracle::Field f = [&](const std::vector<double>& r, double t) {
                return evaluate_gwp(r, t, q, Scale::exp_p);
            };
            const double h = 0.05 * std::min({q.sigma_long(), q.sigma_trans(0), 1.0 / q.kappa()});
            for (int i = 0; i < 50; ++i) {
                const double t = 0.2 * u(gen) * q.sigma_long();
                std::vector<double> r(static_cast<std::size_t>(dim));
                r[0] = q.c() * t + u(gen) * q.sigma_long();
                for (int j = 1; j < dim; ++j) r[j] = u(gen) * q.sigma_trans(0);
                const double ratio = oracle::refinement_ratio(f, r, t, h, q.c());
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
                if (!(std::abs(ratio - kTarget) <= kBand)) ++bad;
                ++total;
            }
        }
    }
    const double secs = seconds_since(t0);
    return {bad == 0 && secs < kBudget,
            fmt("%d points, ratio in [%.4f, %.4f], %d outside 4 +/- 0.5, %.2f s of %.0f s", total, lo, hi, bad, secs, kBudget)};
}

// Relative L2 distance between the scaled, phase-corrected DFT of the sampled
// packet and the closed-form spectrum over every DFT bin.
double dft_error(const PacketParams& q, std::size_t n, double extent) {
    const std::size_t d = static_cast<std::size_t>(q.dim());
    const std::vector<std::size_t> shape(d, n);
    const GridSpec g = GridSpec::centered(std::vector<double>(d, 0.0), std::vector<double>(d, extent), shape);
    ComplexField f = sample_field(FieldKind::position, g, q, 0.0, Scale::exp_p);
    FftPlan(shape, FftDirection::forward).execute(f.values);
    const double h = g.spacing[0];
    const double cell = std::pow(h, static_cast<double>(d));
    double num = 0.0, den = 0.0;
    std::vector<double> k(d);
    for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
        std::size_t rem = idx;
        double phase = 0.0;
        for (std::size_t a = d; a-- > 0;) {
            k[a] = fft_frequency(rem % n, n, h);
            rem /= n;
            phase += k[a] * g.origin[a];
        }
        const Complex approx = f.values[idx] * cell * std::polar(1.0, -phase);
        const Complex exact = fourier_gwp(k, q, 0.0, Scale::exp_p);
        num += std::norm(approx - exact);
        den += std::norm(exact);
    }
    return std::sqrt(num / den);
}

Outcome fourier_closed_form() {
    constexpr double kTol2 = 1e-6, kTol3 = 1e-4, kBudget = 60.0;
    const auto t0 = Clock::now();
    const double e2a = dft_error(PacketParams::planar(16.0, 0.5, 1.0, 1.0), 256, 20.0);
    const double e2b = dft_error(PacketParams::planar(16.0, 1.5, 1.0, 2.0), 256, 20.0);
    const double e3 = dft_error(PacketParams::axisymmetric(3, 16.0, 0.5, 1.0, 1.0), 64, 9.0);
    const double secs = seconds_since(t0);
    const bool ok = e2a <= kTol2 && e2b <= kTol2 && e3 <= kTol3 && secs < kBudget;
    return {ok, fmt("256^2: %.2e, %.2e (tol %.0e); 64^3: %.2e (tol %.0e); %.2f s", e2a, e2b, kTol2, e3, kTol3, secs)};
}

Outcome zero_moments() {
    constexpr double kTol = 1e-8;
    double worst = 0.0;
    for (const auto& [q, t] : {std::pair{kFig1, 0.0}, std::pair{kFig1, 0.3}, std::pair{kFig2, 0.0},
                              std::pair{PacketParams::planar(100.0, 0.5, 1.0, 1.0), 0.0}}) {
        std::vector<std::pair<int, int>> lm;
        for (int l = 0; l <= 4; ++l) {
            for (int m = 0; l + m <= 4; ++m) lm.emplace_back(l, m);
        }
        const double cx = q.c() * t, sx = q.sigma_long(), sy = q.sigma_trans(0);
        PlaneIntegrand moments = [&](double x, double y, std::vector<double>& o) {
            const Complex v = evaluate_gwp_2d(x, y, t, q, Scale::exp_p);
            for (std::size_t c = 0; c < lm.size(); ++c) {
                const double w = std::pow(x, lm[c].first) * std::pow(y, lm[c].second);
                o[2 * c] = w * v.real();
                o[2 * c + 1] = w * v.imag();
            }
        };
        // |.| has kinks on the axes, so the normalizers run at a loose tolerance.
        PlaneIntegrand absolute = [&](double x, double y, std::vector<double>& o) {
            const double v = std::abs(evaluate_gwp_2d(x, y, t, q, Scale::exp_p));
            for (std::size_t c = 0; c < lm.size(); ++c) {
                o[c] = std::abs(std::pow(x, lm[c].first) * std::pow(y, lm[c].second)) * v;
            }
        };
        const QuadratureResult r = integrate_plane(moments, 2 * lm.size(), cx, sx, 0.0, sy, 1e-11);
        const QuadratureResult a = integrate_plane(absolute, lm.size(), cx, sx, 0.0, sy, 1e-3);
        for (std::size_t c = 0; c < lm.size(); ++c) {
            worst = std::max(worst, std::hypot(r.value[2 * c], r.value[2 * c + 1]) / a.value[c]);
        }
    }
    return {worst <= kTol, fmt("4 packets, l+m <= 4, worst |moment| / int|x^l y^m psi| = %.2e (tol %.0e)", worst, kTol)};
}

Outcome beam_oracle() {
    constexpr double kTol = 1e-6, kCentreTol = 1e-8;
    const std::vector<double> centre = {0.0, 0.0};
    const Complex psi0 = evaluate_gwp(centre, 0.0, kFig1);
    const double centre_err = std::abs(beam_superposition_oracle(centre, 0.0, kFig1).value - psi0) / std::abs(psi0);
    std::mt19937_64 gen(404);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double t = 0.5 * u(gen);
        const std::vector<double> r = {kFig1.c() * t + u(gen) * kFig1.sigma_long(), u(gen) * kFig1.sigma_trans(0)};
        const Complex psi = evaluate_gwp(r, t, kFig1, Scale::exp_p);
        const Complex sup = beam_superposition_oracle(r, t, kFig1, Scale::exp_p).value;
        worst = std::max(worst, std::abs(sup - psi) / std::abs(psi));
    }
    return {worst <= kTol && centre_err <= kCentreTol,
            fmt("centre %.2e (tol %.0e), 20 points worst %.2e (tol %.0e)", centre_err, kCentreTol, worst, kTol)};
}

Outcome heisenberg() {
    std::vector<double> sqrt_p;
    for (double s = 1.0; s <= 8.0 + 1e-12; s += 0.5) sqrt_p.push_back(s);
    double min_x = 1e300, min_y = 1e300;
    int bad = 0, total = 0;
    for (SweepMode mode : {SweepMode::fixed_eps_over_gamma, SweepMode::fixed_kappa_eps}) {
        const SweepResult s = run_sweep(mode, figure_family_values(mode), sqrt_p);
        for (const SweepPoint& pt : s.points) {
            const double err = pt.report.quadrature_err;
            min_x = std::min(min_x, pt.report.product_x);
            min_y = std::min(min_y, pt.report.product_y);
            if (!(pt.report.product_x >= 0.5 - err) || !(pt.report.product_y >= 0.5 - err)) ++bad;
            ++total;
        }
    }
    const MomentReport m4 = moment_report(PacketParams::planar(4.0, 0.5, 0.5, 1.0));
    const MomentReport m256 = moment_report(PacketParams::planar(256.0, 0.5, 0.5, 1.0));
    const bool trend = m256.product_x - 0.5 < m4.product_x - 0.5 && m256.product_y - 0.5 < m4.product_y - 0.5;
    return {bad == 0 && trend,
            fmt("%d sweep points, min products (%.5f, %.5f), %d violations; eps/gamma=2 products p=4 (%.5f, %.5f) "
                "p=256 (%.5f, %.5f)",
                total, min_x, min_y, bad, m4.product_x, m4.product_y, m256.product_x, m256.product_y)};
}

Outcome morlet_convergence() {
    constexpr double kSlope = -0.5, kBand = 0.1;
    const PacketParams base = PacketParams::planar(16.0, 0.5, 1.0, 1.0);
    std::vector<double> lp, ld;
    for (double p : {16.0, 64.0, 256.0, 1024.0}) {
        const PacketParams q = PacketParams::planar(p, base.nu(), base.gamma(), base.eps(0));
        const Window w{0.0, q.sigma_long(), 0.0, q.sigma_trans(0)};
        const double diff = l2_norm(
            [&](double x, double y) {
                const std::vector<double> r = {x, y};
                return evaluate_gwp_2d(x, y, 0.0, q, Scale::exp_p) - evaluate_morlet_limit(r, 0.0, q, Scale::exp_p);
            },
            w);
        const double ref = l2_norm(
            [&](double x, double y) {
                const std::vector<double> r = {x, y};
                return evaluate_morlet_limit(r, 0.0, q, Scale::exp_p);
            },
            w);
        lp.push_back(std::log(p));
        ld.push_back(std::log(diff / ref));
    }
    const double n = static_cast<double>(lp.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lp.size(); ++i) {
        mx += lp[i] / n;
        my += ld[i] / n;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lp.size(); ++i) {
        sxy += (lp[i] - mx) * (ld[i] - my);
        sxx += (lp[i] - mx) * (lp[i] - mx);
    }
    const double slope = sxy / sxx;
    return {std::abs(slope - kSlope) <= kBand,
            fmt("slope %.4f (target -0.5 +/- 0.1), deviation %.4f at p=16 and %.4f at p=1024", slope, std::exp(ld.front()),
                std::exp(ld.back()))};
}

Outcome resolving_power() {
    constexpr double kTol = 0.02;
    const double p = 1024.0;
    const double asym = (2.0 * std::sqrt(p) + 1.0) / (2.0 * std::sqrt(p) - 1.0);
    double worst = 0.0;
    bool dir_ok = true;
    for (double r : figure_family_values(SweepMode::fixed_eps_over_gamma)) {
        const MomentReport m = moment_report(PacketParams::planar(p, 0.5, 1.0 / r, 1.0));
        worst = m.srp ? std::max(worst, std::abs(*m.srp / asym - 1.0)) : 1e300;
        for (double pp : {4.0, 16.0, 64.0, 256.0, 1024.0}) {
            if (!moment_report(PacketParams::planar(pp, 0.5, 1.0 / r, 1.0)).directional) dir_ok = false;
        }
        if (moment_report(PacketParams::planar(0.25, 0.5, 1.0 / r, 1.0)).directional) dir_ok = false;
    }
    return {worst <= kTol && dir_ok,
            fmt("SRP at p=1024 worst deviation %.2f%% from %.5f (tol 2%%); directional for p >= 4 and not at "
                "p=0.25: %s",
                100.0 * worst, asym, dir_ok ? "yes" : "no")};
}

Outcome admissibility() {
    constexpr double kTol = 1e-3;
    double worst_closed = 0.0, worst_red = 0.0;
    for (double kg : {1.0, 2.0}) {
        const PacketParams q = PacketParams::axisymmetric(3, 2.0 * kg, 0.5, 1.0, 1.0);
        const AdmissibilityResult closed = admissibility_closed_form_3d(q);
        const AdmissibilityResult direct = admissibility_direct(q);
        const AdmissibilityResult red = admissibility_reduction(q);
        const double d = direct.in(closed.convention).value;
        worst_closed = std::max(worst_closed, std::abs(closed.value - d) / d);
        worst_red = std::max(worst_red, std::abs(red.in(direct.convention).value - direct.value) / direct.value);
    }
    return {worst_closed <= kTol && worst_red <= kTol,
            fmt("closed form vs direct %.2e, reduction vs direct %.2e (tol %.0e; closed form in the convention "
                "without (2 pi)^-n)",
                worst_closed, worst_red, kTol)};
}

Outcome cwt_round_trip() {
    constexpr double kErrTol = 0.05, kGainTol = 0.05, kBudget = 120.0;
    const auto t0 = Clock::now();
    const PacketParams q = PacketParams::planar(16.0, 0.5, 1.0, 1.0);
    const std::size_t n = 256;
    const double h = 1.0;
    const GridSpec g = GridSpec::centered({0.0, 0.0}, {n * h, n * h}, {n, n});
    ComplexField f{g, std::vector<Complex>(n * n), FieldSpace::position};
    struct Component {
        double carrier, angle, x0, y0, width;
    };
    const Component comps[] = {{0.40, 0.3, -20.0, 15.0, 11.0}, {0.22, 2.0, 20.0, -10.0, 20.0}, {0.12, 4.0, 0.0, 5.0, 35.0}};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = g.coord(0, i), y = g.coord(1, j);
            Complex v = 0.0;
            for (const Component& c : comps) {
                const double dx = x - c.x0, dy = y - c.y0;
                const double k_dot_r = c.carrier * (std::cos(c.angle) * x + std::sin(c.angle) * y);
                v += std::exp(-(dx * dx + dy * dy) / (2.0 * c.width * c.width)) * std::polar(1.0, k_dot_r);
            }
            f.values[i * n + j] = v;
        }
    }
    const double a_min = 1.05 * spectral_extent(q).essential_radius / (pi / h);
    const std::vector<double> scales = geometric_scales(a_min, std::pow(2.0, 0.25), 32);
    const TransformCoefficients w = forward_cwt(f, scales, uniform_angles(16), q, 0.0);
    const AdmissibilityResult c = admissibility_2d(q);
    const Reconstruction rec = inverse_cwt(w, c);
    double num = 0.0, den = 0.0, gg = 0.0;
    Complex gf = 0.0;
    for (std::size_t m = 0; m < f.values.size(); ++m) {
        num += std::norm(rec.field.values[m] - f.values[m]);
        den += std::norm(f.values[m]);
        gf += std::conj(rec.field.values[m]) * f.values[m];
        gg += std::norm(rec.field.values[m]);
    }
    const double err = std::sqrt(num / den);
    // f ~ beta * reconstruction, so the optimal coefficient is C* = C / beta
    const double beta = gf.real() / gg;
    const double two_pi_sq = 4.0 * pi * pi;
    const double ratio_without = 1.0 / beta;
    const double ratio_with = two_pi_sq / beta;
    const double off_without = std::abs(ratio_without - 1.0);
    const double off_with = std::abs(ratio_with - 1.0);
    const bool gain_ok = std::min(off_without, off_with) <= kGainTol;
    const double secs = seconds_since(t0);
    return {err <= kErrTol && gain_ok && secs < kBudget,
            fmt("relative L2 %.2e (tol 5%%); C*/C = %.4f without (2 pi)^-2, %.4f with; matches the %s convention; "
                "%.1f s",
                err, ratio_without, ratio_with, off_without <= off_with ? "without-(2 pi)^-n" : "with-(2 pi)^-n", secs)};
}

Outcome special_functions() {
    auto rel = [](Complex a, Complex b) { return std::abs(a - b) / std::abs(b); };
    std::vector<Complex> zs;
    for (double m : {1e-3, 0.05, 0.7, 1.9, 2.1, 5.0, 12.0, 24.0, 26.0, 80.0, 400.0}) {
        for (double arg : {0.0, 0.3, -0.6, 0.78}) zs.push_back(std::polar(m, arg));
    }
    const std::vector<double> orders = {0.0, 1e-9, 0.2, 0.5, 0.999999, 1.0, 1.3, 2.5, 3.7, 6.0, 9.1, 10.0};
    double half = 0.0, recur = 0.0, conj = 0.0, series = 0.0;
    for (Complex z : zs) {
        half = std::max(half, rel(bessel_k(0.5, z), std::sqrt(pi / (2.0 * z)) * std::exp(-z)));
        for (double nu : orders) {
            const Complex km = bessel_k(nu - 1.0, z), k0 = bessel_k(nu, z), kp = bessel_k(nu + 1.0, z);
            recur = std::max(recur, std::abs(kp - km - 2.0 * nu / z * k0) / std::abs(kp));
            conj = std::max(conj, rel(bessel_k(nu, std::conj(z)), std::conj(k0)));
            series = std::max(series, rel(bessel_k_scaled(nu, z), oracle::bessel_k_scaled_integral(nu, z)));
        }
    }
    for (double nu : {0.0, 0.3, 1.0, 2.7, 7.5}) {
        for (Complex z : {Complex(0.01, 0.0), Complex(0.5, 0.4), Complex(2.0, -1.0), Complex(4.5, 0.0)}) {
            const Complex w = oracle::bessel_i_series(nu, z) * bessel_k(nu + 1.0, z) +
                              oracle::bessel_i_series(nu + 1.0, z) * bessel_k(nu, z);
            series = std::max(series, rel(w, 1.0 / z));
        }
    }
    const bool ok = half <= 1e-12 && recur <= 1e-12 && conj <= 1e-14 && series <= 1e-10;
    return {ok, fmt("K_1/2 identity %.1e (tol 1e-12); recurrence %.1e (tol 1e-12); conjugation %.1e (tol 1e-14); "
                    "oracles %.1e (tol 1e-10)",
                    half, recur, conj, series)};
}

Outcome source_split() {
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int partition_bad = 0;
    for (int i = 0; i < 2000; ++i) {
        std::vector<double> r(i % 2 ? 3 : 2);
        for (double& v : r) v = u(gen);
        const double t = u(gen);
        const SourceValue a = retarded_field(1.7, r, t), b = advanced_field(1.7, r, t);
        const bool one_sided = (a.value == Complex(0.0)) != (b.value == Complex(0.0));
        if (a.value * b.value != Complex(0.0) || !one_sided) ++partition_bad;
    }
    const std::vector<double> on = {-0.25, 0.4};
    if (!retarded_field(1.0, on, 0.25).singular || !advanced_field(1.0, on, 0.25).singular) ++partition_bad;

    const std::vector<double> pt = {0.7, 0.3};
    const double t = 0.3;  // x + ct = 1
    const Complex limit = retarded_field(2.0, pt, t).value + advanced_field(2.0, pt, t).value;
    std::vector<double> dist;
    for (double eps : {0.1, 0.01, 0.001}) dist.push_back(std::abs(regularized_sum(2.0, pt, t, eps) - limit));
    const bool monotone = dist[1] < dist[0] && dist[2] < dist[1];

    const PacketParams q = PacketParams::planar(4.0, 0.5, 1.0, 1.0);
    double worst = 0.0;
    for (double ct_over_gamma : {0.0, 0.5, 2.0}) {
        const double tt = ct_over_gamma * q.gamma() / q.c();
        const Complex closed = composite_pulse(tt, q);
        worst = std::max(worst, std::abs(composite_pulse_quadrature(tt, q).value - closed) / std::abs(closed));
    }
    return {partition_bad == 0 && monotone && worst <= 1e-6,
            fmt("partition violations %d of 2000; |reg - (u+ + u-)| at eps 0.1, 0.01, 0.001: %.2e, %.2e, %.2e; "
                "composite dual path %.2e (tol 1e-6)",
                partition_bad, dist[0], dist[1], dist[2], worst)};
}

struct Entry {
    const char* name;
    Outcome (*run)();
};

const Entry kEntries[kCriterionCount] = {
    {"wave-equation residual under refinement", exact_solution},
    {"closed-form spectrum against the DFT", fourier_closed_form},
    {"zero mean and moments", zero_moments},
    {"beam-superposition oracle", beam_oracle},
    {"Heisenberg products", heisenberg},
    {"Morlet-limit convergence rate", morlet_convergence},
    {"spatial resolving power and directionality", resolving_power},
    {"admissibility coefficients", admissibility},
    {"CWT round trip", cwt_round_trip},
    {"special functions", special_functions},
    {"retarded/advanced split and composite pulse", source_split},
};

}  // namespace

CriterionResult run_criterion(int id) {
    if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    const Entry& e = kEntries[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = e.name;
    const auto t0 = Clock::now();
    try {
        const Outcome o = e.run();
        r.passed = o.passed;
        r.detail = o.detail;
    } catch (const std::exception& ex) {
        r.passed = false;
        r.detail = std::string("error: ") + ex.what();
    }
    r.seconds = seconds_since(t0);
    return r;
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids) {
    std::vector<int> todo = ids;
    if (todo.empty()) {
        for (int i = 1; i <= kCriterionCount; ++i) todo.push_back(i);
    }
    std::vector<CriterionResult> out;
    for (int id : todo) out.push_back(run_criterion(id));
    return out;
}

std::string format_line(const CriterionResult& r) {
    return fmt("%s %2d  %s: %s [%.2f s]", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
}

}  // namespace gwp::verify
