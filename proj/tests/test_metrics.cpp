// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include <cmath>
#include <vector>

#include "doctest.h"
#include "gwp/fft.hpp"
#include "gwp/field.hpp"
#include "gwp/metrics.hpp"
#include "gwp/wavelet.hpp"

using namespace gwp;

TEST_CASE("l2 norms") {
    const double s = 0.7;
    auto gauss = [&](double x, double y) { return Complex(std::exp(-(x * x + y * y) / (2 * s * s)), 0.0); };
    CHECK(l2_norm(gauss, Window{0, s, 0, s}) == doctest::Approx(s * std::sqrt(pi)).epsilon(1e-9));
    CHECK(l2_norm(gauss, Window{1.5, 2 * s, -0.8, 0.5 * s}) == doctest::Approx(s * std::sqrt(pi)).epsilon(1e-9));

    const PacketParams fig2 = PacketParams::planar(1.0, 0.5, 0.5, 16.0);
    const double n = l2_norm([&](double x, double y) { return evaluate_gwp_2d(x, y, 0.0, fig2); },
                             Window{0, fig2.sigma_long(), 0, fig2.sigma_trans(0)});
    CHECK(n > 0.0);
    CHECK(std::isfinite(n));

    GridSpec g = GridSpec::centered({0, 0}, {12, 12}, {96, 96});
    ComplexField f = sample_field(FieldKind::position, g, PacketParams::planar(16.0, 0.5, 1.0, 1.0), 0.0);
    const double grid_norm = l2_norm(f);
    const PacketParams q = PacketParams::planar(16.0, 0.5, 1.0, 1.0);
    const double exact = l2_norm([&](double x, double y) { return evaluate_gwp_2d(x, y, 0.0, q); },
                                 Window{0, q.sigma_long(), 0, q.sigma_trans(0)});
    CHECK(grid_norm == doctest::Approx(exact).epsilon(1e-4));
}

TEST_CASE("symmetry zeros and centre") {
    for (const PacketParams& q : {PacketParams::planar(0.5, 0.5, 0.25, 1.0), PacketParams::planar(9.0, 1.5, 1.0, 3.0)}) {
        const AxisMoments pos = centers_and_widths(MomentTarget::position, q, 0.3);
        const AxisMoments frq = centers_and_widths(MomentTarget::frequency, q, 0.3);
        CHECK(std::abs(pos.center[1]) < 1e-9 * pos.width[1]);
        CHECK(std::abs(frq.center[1]) < 1e-9 * frq.width[1]);
    }
    // the centre approaches x = ct as p grows
    double prev = 1e300;
    for (double p : {4.0, 64.0, 1024.0}) {
        const PacketParams q = PacketParams::planar(p, 0.5, 1.0, 1.0);
        const double off = std::abs(centers_and_widths(MomentTarget::position, q, 0.7).center[0] - 0.7) / q.sigma_long();
        CHECK(off < prev);
        prev = off;
    }
    CHECK(prev < 0.02);
}

TEST_CASE("widths approach those of the Morlet limit") {
    for (double r : {1.0 / 3.0, 2.0}) {
        const PacketParams q = PacketParams::planar(1024.0, 0.5, 1.0 / r, 1.0);
        const AxisMoments exact = centers_and_widths(MomentTarget::position, q);
        const AxisMoments limit = weighted_moments(
            [&](double x, double y) {
                const std::vector<double> pt = {x, y};
                return evaluate_morlet_limit(pt, 0.0, q, Scale::exp_p);
            },
            Window{0.0, q.sigma_long(), 0.0, q.sigma_trans(0)});
        CHECK(limit.width[0] == doctest::Approx(q.sigma_long() / std::sqrt(2.0)).epsilon(1e-8));
        CHECK(exact.width[0] / limit.width[0] == doctest::Approx(1.0).epsilon(0.05));
        CHECK(exact.width[1] / limit.width[1] == doctest::Approx(1.0).epsilon(0.05));
    }
}

TEST_CASE("Heisenberg products") {
    // Gaussian: the product is exactly 1/2
    const double s = 1.3;
    const AxisMoments gx = weighted_moments([&](double x, double y) { return Complex(std::exp(-(x * x + y * y) / (2 * s * s))); },
                                            Window{0, s, 0, s});
    const AxisMoments gk = weighted_moments([&](double kx, double ky) { return Complex(std::exp(-(kx * kx + ky * ky) * s * s / 2)); },
                                            Window{0, 1 / s, 0, 1 / s});
    CHECK(gx.width[0] * gk.width[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(gx.width[1] * gk.width[1] == doctest::Approx(0.5).epsilon(1e-9));

    for (double p : {0.5, 2.0, 9.0, 100.0}) {
        for (double r : {1.0 / 3.0, 2.0 / 3.0, 2.0}) {
            const MomentReport m = moment_report(PacketParams::planar(p, 0.5, 1.0 / r, 1.0));
            CHECK(m.product_x >= 0.5 - m.quadrature_err);
            CHECK(m.product_y >= 0.5 - m.quadrature_err);
        }
    }
    const MomentReport m4 = moment_report(PacketParams::planar(4.0, 0.5, 0.5, 1.0));
    const MomentReport m256 = moment_report(PacketParams::planar(256.0, 0.5, 0.5, 1.0));
    CHECK(m256.product_x - 0.5 < m4.product_x - 0.5);
    CHECK(m256.product_y - 0.5 < m4.product_y - 0.5);
    const auto [px, py] = uncertainty_products(m4);
    CHECK(px == m4.product_x);
    CHECK(py == m4.product_y);
}

TEST_CASE("resolving powers") {
    const double p = 1024.0;
    const MomentReport m = moment_report(PacketParams::planar(p, 0.5, 1.0, 1.0));
    REQUIRE(m.srp.has_value());
    const double asym = (2 * std::sqrt(p) + 1) / (2 * std::sqrt(p) - 1);
    CHECK(std::abs(*m.srp / asym - 1.0) < 0.02);

    CHECK_FALSE(moment_report(PacketParams::planar(0.25, 0.5, 1.0, 1.0)).directional);
    CHECK_FALSE(moment_report(PacketParams::planar(0.25, 0.5, 1.0, 1.0)).srp.has_value());
    for (double r : {1.0 / 3.0, 2.0 / 3.0, 2.0}) {
        double prev = 10.0;
        for (double sp : {2.0, 3.0, 4.0, 6.0, 8.0, 16.0}) {
            const MomentReport mr = moment_report(PacketParams::planar(sp * sp, 0.5, 1.0 / r, 1.0));
            CHECK(mr.directional);
            REQUIRE(mr.arp.has_value());
            CHECK(*mr.arp < prev);
            prev = *mr.arp;
        }
    }
    MomentReport synthetic;
    synthetic.center_kx = 3.0;
    synthetic.width_kx = 1.0;
    synthetic.width_ky = std::sqrt(8.0);
    const ResolvingPowers rp = resolving_powers(synthetic);
    CHECK(*rp.srp == doctest::Approx(2.0));
    CHECK(*rp.arp == doctest::Approx(pi / 2));
}

TEST_CASE("frequency moments from a sampled packet") {
    const PacketParams q = PacketParams::planar(16.0, 0.5, 1.0, 1.0);
    const std::size_t n = 256;
    const GridSpec g = GridSpec::centered({0, 0}, {24, 24}, {n, n});
    ComplexField f = sample_field(FieldKind::position, g, q, 0.0);
    FftPlan plan({n, n}, FftDirection::forward);
    plan.execute(f.values);
    double w = 0, mx = 0, my = 0, vx = 0, vy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double kx = fft_frequency(i, n, g.spacing[0]), ky = fft_frequency(j, n, g.spacing[1]);
            const double m = std::norm(f.values[i * n + j]);
            w += m;
            mx += m * kx;
            my += m * ky;
            vx += m * kx * kx;
            vy += m * ky * ky;
        }
    }
    mx /= w;
    my /= w;
    const double dkx = std::sqrt(vx / w - mx * mx), dky = std::sqrt(vy / w - my * my);
    const AxisMoments cf = centers_and_widths(MomentTarget::frequency, q);
    CHECK(mx == doctest::Approx(cf.center[0]).epsilon(1e-4));
    CHECK(std::abs(my) < 1e-4 * cf.width[1]);
    CHECK(dkx == doctest::Approx(cf.width[0]).epsilon(1e-4));
    CHECK(dky == doctest::Approx(cf.width[1]).epsilon(1e-4));
}

TEST_CASE("sweeps") {
    const std::vector<double> sp = {1.0, 2.0, 4.0, 7.5, 8.0};
    const SweepResult a = run_sweep(SweepMode::fixed_eps_over_gamma, figure_family_values(SweepMode::fixed_eps_over_gamma), sp);
    CHECK_FALSE(a.off_figure);
    REQUIRE(a.points.size() == 15);
    CHECK(a.points[5].family_value == doctest::Approx(2.0 / 3.0));
    CHECK(a.points[5].sqrt_p == 1.0);
    for (const SweepPoint& pt : a.points) {
        CHECK(pt.report.product_x >= 0.5 - pt.report.quadrature_err);
        CHECK(pt.report.product_y >= 0.5 - pt.report.quadrature_err);
        CHECK(pt.dx_over_rms == doctest::Approx(pt.dx_over_sigx * std::sqrt(2.0)));
        CHECK(pt.params.eps(0) / pt.params.gamma() == doctest::Approx(pt.family_value));
    }
    // curves level off by sqrt(p) = 8
    for (std::size_t v = 0; v < 3; ++v) {
        const SweepPoint& x = a.points[v * 5 + 3];
        const SweepPoint& y = a.points[v * 5 + 4];
        for (auto [u, w] : {std::pair{x.dx_over_sigx, y.dx_over_sigx}, {x.dy_over_sigy, y.dy_over_sigy},
                            {x.dkx_2sigx, y.dkx_2sigx}, {x.dky_2sigy, y.dky_2sigy}}) {
            CHECK(std::abs(w / u - 1.0) < 0.02);
        }
    }

    const SweepResult b = run_sweep(SweepMode::fixed_kappa_eps, {64.0, 5.0}, {2.0, 3.0});
    CHECK(b.off_figure);
    CHECK(2.0 * b.points[0].params.kappa() * b.points[0].params.eps(0) == doctest::Approx(64.0));
    // eps/gamma = 2 at p = 4 is the same packet as 2 kappa eps = 8
    const PacketParams u = sweep_params(SweepMode::fixed_eps_over_gamma, 2.0, 2.0, 0.5, 1.0);
    const PacketParams w = sweep_params(SweepMode::fixed_kappa_eps, 8.0, 2.0, 0.5, 1.0);
    CHECK(u.gamma() == doctest::Approx(w.gamma()));
    CHECK_THROWS_AS(run_sweep(SweepMode::fixed_kappa_eps, {}, {2.0}), std::invalid_argument);
}
