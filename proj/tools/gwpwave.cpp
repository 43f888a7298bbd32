// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

// gwpwave: render packets, compute metrics and sweeps, run the CWT and the
// acceptance checks. Exit status: 0 success, 1 failed verification,
// 2 configuration error, 3 numerical non-convergence.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "config.hpp"
#include "gwp/cwt.hpp"
#include "gwp/field.hpp"
#include "gwp/metrics.hpp"
#include "gwp/sources.hpp"
#include "gwp/wavelet.hpp"
#include "output.hpp"
#include "verification.hpp"

namespace fs = std::filesystem;
using namespace gwpcli;
using gwp::Complex;
using gwp::PacketParams;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNonConvergence = 3;

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + format_double(v[i]);
    return s;
}

std::string describe(const RunConfig& rc) {
    std::string s = "gwpwave p=" + format_double(rc.params.p()) + " nu=" + format_double(rc.params.nu()) +
                    " gamma=" + format_double(rc.params.gamma()) + " eps=" + join(rc.params.epsilons()) +
                    " c=" + format_double(rc.params.c()) + " dim=" + std::to_string(rc.params.dim()) +
                    " t=" + format_double(rc.t);
    return s;
}

PacketParams planar_view(const PacketParams& q) {
    return PacketParams::planar(q.p(), q.nu(), q.gamma(), q.eps(0), q.c());
}

// Field grid in the (x1, x2) plane; other coordinates are zero.
gwp::GridSpec plane_grid(const RunConfig& rc) {
    const PacketParams& q = rc.params;
    std::vector<double> extent = rc.grid.extent;
    if (extent.empty()) extent = {6.0 * q.sigma_long(), 6.0 * q.sigma_trans(0)};
    gwp::GridSpec g = gwp::GridSpec::centered({q.c() * rc.t, 0.0}, extent, {rc.grid.nx, rc.grid.ny});
    g.validate();
    return g;
}

std::vector<double> magnitudes_for_image(const std::vector<Complex>& values, std::size_t nx, std::size_t ny) {
    // image rows run from the largest y down; values are x-major
    std::vector<double> img(nx * ny);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) img[(ny - 1 - j) * nx + i] = std::abs(values[i * ny + j]);
    }
    return img;
}

std::string field_csv(const std::string& comment, const char* xname, const char* yname, const gwp::GridSpec& g,
                      const std::vector<Complex>& values) {
    CsvWriter w(comment, {xname, yname, "re", "im", "abs"});
    for (std::size_t i = 0; i < g.shape[0]; ++i) {
        for (std::size_t j = 0; j < g.shape[1]; ++j) {
            const Complex v = values[i * g.shape[1] + j];
            w.row(std::vector<double>{g.coord(0, i), g.coord(1, j), v.real(), v.imag(), std::abs(v)});
        }
    }
    return w.str();
}

int cmd_render(const RunConfig& rc) {
    const PacketParams& q = rc.params;
    const std::size_t d = static_cast<std::size_t>(q.dim());
    const gwp::GridSpec g = plane_grid(rc);
    std::vector<Complex> pos(g.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < g.shape[0]; ++i) {
        std::vector<double> r(d, 0.0);
        for (std::size_t j = 0; j < g.shape[1]; ++j) {
            r[0] = g.coord(0, i);
            r[1] = g.coord(1, j);
            pos[i * g.shape[1] + j] = gwp::evaluate_gwp(r, rc.t, q);
        }
    }
    const double kmax = 1.2 * gwp::spectral_extent(planar_view(q)).essential_radius;
    const gwp::GridSpec kg = gwp::GridSpec::centered({0.0, 0.0}, {2.0 * kmax, 2.0 * kmax}, {rc.grid.nx, rc.grid.ny});
    std::vector<Complex> spec(kg.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < kg.shape[0]; ++i) {
        std::vector<double> k(d, 0.0);
        for (std::size_t j = 0; j < kg.shape[1]; ++j) {
            k[0] = kg.coord(0, i);
            k[1] = kg.coord(1, j);
            spec[i * kg.shape[1] + j] = gwp::fourier_gwp(k, q, rc.t);
        }
    }
    const std::string slice = d > 2 ? " slice=x1,x2" : "";
    write_atomic(rc.out / "position.csv", field_csv(describe(rc) + slice, "x", "y", g, pos));
    write_atomic(rc.out / "spectrum.csv", field_csv(describe(rc) + slice, "kx", "ky", kg, spec));
    if (rc.pgm) {
        write_atomic(rc.out / "position_abs.pgm", pgm_image(magnitudes_for_image(pos, g.shape[0], g.shape[1]), g.shape[0], g.shape[1]));
        write_atomic(rc.out / "spectrum_abs.pgm", pgm_image(magnitudes_for_image(spec, kg.shape[0], kg.shape[1]), kg.shape[0], kg.shape[1]));
    }
    std::printf("wrote %s and %s (%zu x %zu)\n", (rc.out / "position.csv").c_str(), (rc.out / "spectrum.csv").c_str(),
                rc.grid.nx, rc.grid.ny);
    return kExitOk;
}

void require_planar(const RunConfig& rc, const char* what) {
    if (rc.params.dim() != 2) throw ConfigError(std::string(what) + ": only planar packets (packet.dim=2)");
}

int cmd_metrics(const RunConfig& rc) {
    require_planar(rc, "metrics");
    const gwp::MomentReport m = gwp::moment_report(rc.params, rc.t);
    CsvWriter w(describe(rc), {"center_x", "center_y", "dx", "dy", "center_kx", "center_ky", "dkx", "dky", "prod_x",
                               "prod_y", "srp", "arp", "directional", "quad_err"});
    w.row(std::vector<std::string>{format_double(m.center_x), format_double(m.center_y), format_double(m.width_x),
                                   format_double(m.width_y), format_double(m.center_kx), format_double(m.center_ky),
                                   format_double(m.width_kx), format_double(m.width_ky), format_double(m.product_x),
                                   format_double(m.product_y), format_optional(m.srp), format_optional(m.arp),
                                   m.directional ? "1" : "0", format_double(m.quadrature_err)});
    write_atomic(rc.out / "metrics.csv", w.str());
    std::printf("dx=%.6g dy=%.6g dkx=%.6g dky=%.6g products (%.6g, %.6g) directional=%d\n", m.width_x, m.width_y,
                m.width_kx, m.width_ky, m.product_x, m.product_y, m.directional ? 1 : 0);
    return kExitOk;
}

int cmd_sweep(const RunConfig& rc) {
    const bool eps_mode = rc.sweep.mode == gwp::SweepMode::fixed_eps_over_gamma;
    const gwp::SweepResult s = gwp::run_sweep(rc.sweep.mode, rc.sweep.values, rc.sweep.sqrt_p, rc.params.nu(),
                                              rc.params.eps(0));
    const std::string comment = std::string("gwpwave sweep mode=") + (eps_mode ? "eps-over-gamma" : "kappa-eps") +
                                " values=" + join(rc.sweep.values) + " sqrt_p=" + join(rc.sweep.sqrt_p) +
                                " nu=" + format_double(rc.params.nu()) + " eps=" + format_double(rc.params.eps(0)) +
                                " off_figure=" + (s.off_figure ? "1" : "0");
    CsvWriter w(comment, {"sqrt_p", "family_value", "dx", "dy", "dkx", "dky", "dx_over_sigx", "dy_over_sigy", "prod_x",
                          "prod_y", "srp", "arp", "directional", "quad_err"});
    for (const gwp::SweepPoint& pt : s.points) {
        const gwp::MomentReport& m = pt.report;
        w.row(std::vector<std::string>{format_double(pt.sqrt_p), format_double(pt.family_value), format_double(m.width_x),
                                       format_double(m.width_y), format_double(m.width_kx), format_double(m.width_ky),
                                       format_double(pt.dx_over_sigx), format_double(pt.dy_over_sigy),
                                       format_double(m.product_x), format_double(m.product_y), format_optional(m.srp),
                                       format_optional(m.arp), m.directional ? "1" : "0",
                                       format_double(m.quadrature_err)});
    }
    write_atomic(rc.out / "sweep.csv", w.str());
    std::printf("wrote %zu sweep points to %s%s\n", s.points.size(), (rc.out / "sweep.csv").c_str(),
                s.off_figure ? " (family values differ from the figure set)" : "");
    return kExitOk;
}

// Grid CSV with columns x, y, re, im (further columns ignored), '#' comments
// and one header row. Nodes must fill a uniform rectangular grid.
gwp::ComplexField read_field_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read input " + path.string());
    struct Node {
        double x, y;
        Complex v;
    };
    std::vector<Node> nodes;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!header_seen) {
            header_seen = true;
            if (cells.size() >= 1 && cells[0].find_first_of("0123456789") == std::string::npos) continue;
        }
        if (cells.size() < 4) throw ConfigError(path.string() + ": expected columns x,y,re,im");
        nodes.push_back({parse_real("input", cells[0]), parse_real("input", cells[1]),
                         Complex(parse_real("input", cells[2]), parse_real("input", cells[3]))});
    }
    std::vector<double> xs, ys;
    for (const Node& n : nodes) {
        xs.push_back(n.x);
        ys.push_back(n.y);
    }
    auto unique_sorted = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    unique_sorted(xs);
    unique_sorted(ys);
    if (xs.size() < 2 || ys.size() < 2 || xs.size() * ys.size() != nodes.size()) {
        throw ConfigError(path.string() + ": nodes do not form a rectangular grid");
    }
    auto spacing = [&](const std::vector<double>& v, const char* axis) {
        const double h = (v.back() - v.front()) / static_cast<double>(v.size() - 1);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (std::abs(v[i] - (v.front() + h * static_cast<double>(i))) > 1e-9 * h * static_cast<double>(v.size())) {
                throw ConfigError(path.string() + ": " + axis + " spacing is not uniform");
            }
        }
        return h;
    };
    gwp::GridSpec g;
    g.origin = {xs.front(), ys.front()};
    g.spacing = {spacing(xs, "x"), spacing(ys, "y")};
    g.shape = {xs.size(), ys.size()};
    gwp::ComplexField f{g, std::vector<Complex>(g.size()), gwp::FieldSpace::position};
    for (const Node& n : nodes) {
        const auto i = static_cast<std::size_t>(std::lround((n.x - g.origin[0]) / g.spacing[0]));
        const auto j = static_cast<std::size_t>(std::lround((n.y - g.origin[1]) / g.spacing[1]));
        f.values[i * g.shape[1] + j] = n.v;
    }
    return f;
}

// Three Gaussian-windowed plane waves on a unit-spacing grid.
gwp::ComplexField synthetic_image(std::size_t nx, std::size_t ny) {
    const gwp::GridSpec g = gwp::GridSpec::centered({0.0, 0.0}, {double(nx), double(ny)}, {nx, ny});
    gwp::ComplexField f{g, std::vector<Complex>(g.size()), gwp::FieldSpace::position};
    struct Component {
        double carrier, angle, x0, y0, width;
    };
    const Component comps[] = {{0.40, 0.3, -20.0, 15.0, 11.0}, {0.22, 2.0, 20.0, -10.0, 20.0}, {0.12, 4.0, 0.0, 5.0, 35.0}};
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const double x = g.coord(0, i), y = g.coord(1, j);
            Complex v = 0.0;
            for (const Component& c : comps) {
                const double dx = x - c.x0, dy = y - c.y0;
                v += std::exp(-(dx * dx + dy * dy) / (2.0 * c.width * c.width)) *
                     std::polar(1.0, c.carrier * (std::cos(c.angle) * x + std::sin(c.angle) * y));
            }
            f.values[i * ny + j] = v;
        }
    }
    return f;
}

struct Analysis {
    std::vector<double> scales;
    std::vector<double> angles;
};

Analysis analysis_grid(const RunConfig& rc, const gwp::GridSpec& g) {
    const double h = std::max(g.spacing[0], g.spacing[1]);
    const double a_min = rc.cwt.scale_min.value_or(1.05 * gwp::spectral_extent(rc.params).essential_radius / (gwp::pi / h));
    double ratio = std::pow(2.0, 0.25);
    if (rc.cwt.scale_max) {
        if (rc.cwt.scales < 2) throw ConfigError("cwt.scale_max needs at least two scales");
        ratio = std::pow(*rc.cwt.scale_max / a_min, 1.0 / static_cast<double>(rc.cwt.scales - 1));
    }
    std::size_t angles = rc.cwt.angles;
    if (angles == 0) {
        const gwp::MomentReport m = gwp::moment_report(rc.params);
        angles = m.arp ? gwp::angle_count_for_arp(*m.arp) : 16;
    }
    return {gwp::geometric_scales(a_min, ratio, rc.cwt.scales), gwp::uniform_angles(angles)};
}

int cmd_cwt_analyze(const RunConfig& rc) {
    require_planar(rc, "cwt");
    if (rc.input.empty()) throw ConfigError("cwt analyze: --input is required");
    const gwp::ComplexField f = read_field_csv(rc.input);
    const Analysis a = analysis_grid(rc, f.grid);
    const gwp::TransformCoefficients w = gwp::forward_cwt(f, a.scales, a.angles, rc.params, rc.t);
    const double cell = f.grid.spacing[0] * f.grid.spacing[1];
    CsvWriter out(describe(rc) + " input=" + rc.input.filename().string(),
                  {"scale", "angle", "energy", "max_abs", "x_at_max", "y_at_max"});
    for (std::size_t is = 0; is < a.scales.size(); ++is) {
        for (std::size_t ia = 0; ia < a.angles.size(); ++ia) {
            const Complex* s = w.slice(is, ia);
            double energy = 0.0, best = -1.0;
            std::size_t arg = 0;
            for (std::size_t m = 0; m < w.slice_size(); ++m) {
                energy += std::norm(s[m]);
                if (std::abs(s[m]) > best) {
                    best = std::abs(s[m]);
                    arg = m;
                }
            }
            const std::size_t ny = w.b_grid.shape[1];
            out.row(std::vector<double>{a.scales[is], a.angles[ia], energy * cell, best, w.b_grid.coord(0, arg / ny),
                                        w.b_grid.coord(1, arg % ny)});
        }
    }
    write_atomic(rc.out / "cwt_summary.csv", out.str());
    std::printf("%zu scales x %zu angles, wrote %s\n", a.scales.size(), a.angles.size(),
                (rc.out / "cwt_summary.csv").c_str());
    return kExitOk;
}

int cmd_cwt_roundtrip(const RunConfig& rc) {
    require_planar(rc, "cwt");
    const gwp::ComplexField f = rc.input.empty() ? synthetic_image(rc.grid.nx, rc.grid.ny) : read_field_csv(rc.input);
    const Analysis a = analysis_grid(rc, f.grid);
    const gwp::TransformCoefficients w = gwp::forward_cwt(f, a.scales, a.angles, rc.params, rc.t);
    const gwp::AdmissibilityResult c = gwp::admissibility_2d(rc.params, rc.t);
    const gwp::Reconstruction rec = gwp::inverse_cwt(w, c);
    double num = 0.0, den = 0.0, gg = 0.0;
    Complex gf = 0.0;
    for (std::size_t m = 0; m < f.values.size(); ++m) {
        num += std::norm(rec.field.values[m] - f.values[m]);
        den += std::norm(f.values[m]);
        gf += std::conj(rec.field.values[m]) * f.values[m];
        gg += std::norm(rec.field.values[m]);
    }
    const double err = std::sqrt(num / den);
    const double gain = gf.real() / gg;
    const std::string comment = describe(rc) + " input=" + (rc.input.empty() ? "synthetic" : rc.input.filename().string());
    write_atomic(rc.out / "reconstruction.csv", field_csv(comment, "x", "y", rec.field.grid, rec.field.values));
    CsvWriter s(comment, {"scales", "angles", "scale_min", "scale_max", "admissibility", "rel_l2", "optimal_c_over_c",
                          "response_min", "response_median", "response_max"});
    s.row(std::vector<double>{double(a.scales.size()), double(a.angles.size()), a.scales.front(), a.scales.back(), c.value,
                              err, 1.0 / gain, rec.coverage.response_min, rec.coverage.response_median,
                              rec.coverage.response_max});
    write_atomic(rc.out / "roundtrip_summary.csv", s.str());
    std::printf("relative L2 error %.3e, optimal C*/C %.4f, %zu scales x %zu angles\n", err, 1.0 / gain, a.scales.size(),
                a.angles.size());
    return kExitOk;
}

int cmd_verify(const RunConfig& rc) {
    int failed = 0;
    for (const gwp::verify::CriterionResult& r : gwp::verify::run_criteria(rc.criteria)) {
        std::printf("%s\n", gwp::verify::format_line(r).c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d criteria failed\n", failed);
    return failed ? kExitVerifyFailed : kExitOk;
}

int cmd_sources(const RunConfig& rc) {
    const PacketParams& q = rc.params;
    const double tol = rc.tolerances.at("quadrature");
    const std::size_t n = rc.grid.nx;
    const double half = rc.grid.extent.empty() ? 4.0 * q.gamma() / q.c() : 0.5 * rc.grid.extent[0];

    CsvWriter pulse(describe(rc), {"t", "closed_re", "closed_im", "quad_re", "quad_im", "rel_diff"});
    for (std::size_t i = 0; i < n; ++i) {
        const double t = n > 1 ? -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
        const Complex a = gwp::composite_pulse(t, q, gwp::Scale::exp_p);
        const Complex b = gwp::composite_pulse_quadrature(t, q, gwp::Scale::exp_p, tol).value;
        pulse.row(std::vector<double>{t, a.real(), a.imag(), b.real(), b.imag(), std::abs(a - b) / std::abs(a)});
    }
    CsvWriter density(describe(rc) + " scale=exp(p)", {"q", "density"});
    for (std::size_t i = 1; i <= n; ++i) {
        const double qq = 4.0 * q.kappa() * static_cast<double>(i) / static_cast<double>(n);
        density.row(std::vector<double>{qq, gwp::spectral_density(qq, q, gwp::Scale::exp_p)});
    }
    // retarded and advanced fields across the source at x2 = 0.3, time t
    CsvWriter split(describe(rc) + " q=kappa x2=0.3",
                    {"x", "retarded_re", "retarded_im", "advanced_re", "advanced_im", "singular"});
    const double x0 = -q.c() * rc.t;
    std::vector<double> r(static_cast<std::size_t>(q.dim()), 0.0);
    r[1] = 0.3;
    for (std::size_t i = 0; i < n; ++i) {
        r[0] = x0 - 2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(n > 1 ? n - 1 : 1);
        const gwp::SourceValue u = gwp::retarded_field(q.kappa(), r, rc.t, q.c());
        const gwp::SourceValue v = gwp::advanced_field(q.kappa(), r, rc.t, q.c());
        split.row(std::vector<std::string>{format_double(r[0]), format_double(u.value.real()),
                                           format_double(u.value.imag()), format_double(v.value.real()),
                                           format_double(v.value.imag()), u.singular ? "1" : "0"});
    }
    write_atomic(rc.out / "composite_pulse.csv", pulse.str());
    write_atomic(rc.out / "spectral_density.csv", density.str());
    write_atomic(rc.out / "source_split.csv", split.str());
    std::printf("wrote composite_pulse.csv, spectral_density.csv and source_split.csv to %s\n", rc.out.c_str());
    return kExitOk;
}

int dispatch(const RunConfig& rc) {
    switch (rc.command) {
        case Command::render: return cmd_render(rc);
        case Command::metrics: return cmd_metrics(rc);
        case Command::sweep: return cmd_sweep(rc);
        case Command::cwt_analyze: return cmd_cwt_analyze(rc);
        case Command::cwt_roundtrip: return cmd_cwt_roundtrip(rc);
        case Command::verify: return cmd_verify(rc);
        case Command::sources: return cmd_sources(rc);
    }
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian wave packet wavelet toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value config file (dotted keys)");

    // flag -> config key; flags given on the command line override the file
    std::vector<std::pair<CLI::Option*, std::string>> flag_keys;
    std::map<std::string, std::string> flag_values;
    auto flag = [&](CLI::App* target, const std::string& name, const std::string& key, const std::string& help) {
        flag_keys.emplace_back(target->add_option(name, flag_values[key], help), key);
    };
    auto common = [&](CLI::App* sub) {
        sub->fallthrough();
        flag(sub, "--out", "io.out", "output directory");
        flag(sub, "--p", "packet.p", "packet parameter p");
        flag(sub, "--nu", "packet.nu", "Bessel order nu");
        flag(sub, "--gamma", "packet.gamma", "longitudinal parameter gamma");
        flag(sub, "--eps", "packet.eps", "transverse parameter(s) eps, comma list for n-D");
        flag(sub, "--c", "packet.c", "wave speed");
        flag(sub, "--t", "packet.t", "time");
        flag(sub, "--dim", "packet.dim", "space dimension");
        flag(sub, "--nx", "grid.nx", "grid points along x");
        flag(sub, "--ny", "grid.ny", "grid points along y");
        flag(sub, "--extent", "grid.extent", "window extent, one or two values");
    };

    CLI::App* render = app.add_subcommand("render", "position and spectrum grids");
    common(render);
    bool pgm = false;
    render->add_flag("--pgm", pgm, "also write 8-bit PGM images of |psi|");
    CLI::App* metrics = app.add_subcommand("metrics", "centres, widths, products and resolving powers");
    common(metrics);
    CLI::App* sweep = app.add_subcommand("sweep", "metric sweeps over sqrt(p)");
    common(sweep);
    flag(sweep, "--mode", "sweep.mode", "eps-over-gamma or kappa-eps");
    flag(sweep, "--values", "sweep.values", "family values, fractions allowed");
    flag(sweep, "--sqrt-p", "sweep.sqrt_p", "sqrt(p) values");
    CLI::App* cwt = app.add_subcommand("cwt", "continuous wavelet transform");
    cwt->require_subcommand(1);
    cwt->fallthrough();
    CLI::App* analyze = cwt->add_subcommand("analyze", "forward transform of a grid CSV");
    CLI::App* roundtrip = cwt->add_subcommand("roundtrip", "forward and inverse transform");
    for (CLI::App* sub : {analyze, roundtrip}) {
        common(sub);
        flag(sub, "--scales", "cwt.scales", "number of scales");
        flag(sub, "--scale-min", "cwt.scale_min", "smallest scale");
        flag(sub, "--scale-max", "cwt.scale_max", "largest scale");
        flag(sub, "--angles", "cwt.angles", "number of angles (0: from the angular resolving power)");
        flag(sub, "--input", "io.input", "grid CSV with columns x,y,re,im");
    }
    CLI::App* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->fallthrough();
    flag(verify, "--criteria", "verify.criteria", "comma list of criterion ids (default all)");
    CLI::App* sources = app.add_subcommand("sources", "moving-source fields and composite pulse tables");
    common(sources);
    flag(sources, "--tol", "tol.quadrature", "quadrature tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    Command command = Command::render;
    if (metrics->parsed()) command = Command::metrics;
    if (sweep->parsed()) command = Command::sweep;
    if (analyze->parsed()) command = Command::cwt_analyze;
    if (roundtrip->parsed()) command = Command::cwt_roundtrip;
    if (verify->parsed()) command = Command::verify;
    if (sources->parsed()) command = Command::sources;

    try {
        KeyValues kv;
        if (!config_path.empty()) kv = read_config_file(config_path);
        for (const auto& [opt, key] : flag_keys) {
            if (opt->count() > 0) kv[key] = flag_values[key];
        }
        if (pgm) kv["render.pgm"] = "true";
        const RunConfig rc = build_config(command, kv);
        return dispatch(rc);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "gwpwave: configuration error: %s\n", e.what());
        return kExitConfig;
    } catch (const gwp::CoverageError& e) {
        std::fprintf(stderr, "gwpwave: %s (median response %.3g)\n", e.what(), e.diagnostic.response_median);
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "gwpwave: invalid argument: %s\n", e.what());
        return kExitConfig;
    } catch (const gwp::NonConvergence& e) {
        std::fprintf(stderr, "gwpwave: %s\n", e.what());
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "gwpwave: %s\n", e.what());
        return kExitVerifyFailed;
    }
}
