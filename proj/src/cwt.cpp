// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "gwp/cwt.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "gwp/fft.hpp"
#include "gwp/quadrature.hpp"
#include "gwp/special_functions.hpp"
#include "gwp/wavelet.hpp"

namespace gwp {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kQuadTol = 1e-11;
constexpr unsigned kMaxDepth = 18;

void require_planar(const PacketParams& params, const char* what) {
    if (params.dim() != 2) throw std::invalid_argument(std::string(what) + ": packet must be planar");
}

std::array<double, 2> rotate_inverse(double alpha, double x, double y) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return {c * x + s * y, -s * x + c * y};
}

double surface_of_sphere(int m) {
    // |S^m| = 2 pi^{(m+1)/2} / Gamma((m+1)/2)
    return 2.0 * std::pow(pi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

// log|psi_hat| along direction (cos phi, sin phi, 0, ...) at radius r.
double log_modulus_polar(const PacketParams& params, double r, double phi) {
    std::vector<double> k(params.dim(), 0.0);
    k[0] = r * std::cos(phi);
    k[1] = r * std::sin(phi);
    return fourier_log_modulus(k, params);
}

// Range [u_lo, u_hi] of u = ln(k / kappa) outside which |psi_hat|^2 is below
// exp(-drop) times its maximum in every sampled direction.
std::pair<double, double> log_radius_range(const PacketParams& params, double drop) {
    const double kappa = params.kappa();
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> samples;
    for (double u = -40.0; u <= 40.0; u += 0.05) {
        double m = -std::numeric_limits<double>::infinity();
        for (int j = 0; j <= 32; ++j) m = std::max(m, log_modulus_polar(params, kappa * std::exp(u), pi * j / 32.0));
        samples.emplace_back(u, m);
        best = std::max(best, m);
    }
    double lo = 40.0, hi = -40.0;
    for (auto [u, m] : samples) {
        if (2.0 * (m - best) > -drop) {
            lo = std::min(lo, u);
            hi = std::max(hi, u);
        }
    }
    if (lo > hi) throw NonConvergence("admissibility: spectrum not resolved on the radius scan");
    return {lo - 0.5, hi + 0.5};
}

double conv_factor(int dim) { return std::pow(2.0 * pi, dim); }

}  // namespace

Complex family_member(const FamilyIndex& idx, double x, double y, double t, const PacketParams& params) {
    if (!(idx.a > 0.0)) throw std::invalid_argument("family_member: scale must be positive");
    require_planar(params, "family_member");
    const auto q = rotate_inverse(idx.alpha, x - idx.b[0], y - idx.b[1]);
    return evaluate_gwp_2d(q[0] / idx.a, q[1] / idx.a, t, params) / idx.a;
}

Complex family_member_spectrum(const FamilyIndex& idx, double kx, double ky, double t, const PacketParams& params) {
    if (!(idx.a > 0.0)) throw std::invalid_argument("family_member_spectrum: scale must be positive");
    require_planar(params, "family_member_spectrum");
    const auto q = rotate_inverse(idx.alpha, kx, ky);
    return idx.a * fourier_gwp_2d(idx.a * q[0], idx.a * q[1], params, t) *
           std::exp(-I * (kx * idx.b[0] + ky * idx.b[1]));
}

SpectralExtent spectral_extent(const PacketParams& params, double rel_threshold) {
    const double kappa = params.kappa();
    double best = -std::numeric_limits<double>::infinity();
    double peak = kappa;
    std::vector<std::pair<double, double>> samples;
    for (double u = -30.0; u <= 30.0; u += 0.01) {
        const double r = kappa * std::exp(u);
        double m = -std::numeric_limits<double>::infinity();
        for (int j = 0; j <= 64; ++j) m = std::max(m, log_modulus_polar(params, r, pi * j / 64.0));
        samples.emplace_back(r, m);
        if (m > best) {
            best = m;
            peak = r;
        }
    }
    const double cut = best + std::log(rel_threshold);
    double ess = peak;
    for (auto [r, m] : samples) {
        if (m >= cut) ess = std::max(ess, r);
    }
    return {peak, ess};
}

std::vector<double> geometric_scales(double a_min, double ratio, std::size_t count) {
    if (!(a_min > 0.0) || !(ratio > 1.0)) throw std::invalid_argument("geometric_scales: need a_min > 0, ratio > 1");
    std::vector<double> s(count);
    for (std::size_t j = 0; j < count; ++j) s[j] = a_min * std::pow(ratio, static_cast<double>(j));
    return s;
}

std::vector<double> uniform_angles(std::size_t count) {
    std::vector<double> a(count);
    for (std::size_t j = 0; j < count; ++j) a[j] = 2.0 * pi * static_cast<double>(j) / static_cast<double>(count);
    return a;
}

std::size_t angle_count_for_arp(double arp) {
    if (!(arp > 0.0)) throw std::invalid_argument("angle_count_for_arp: arp must be positive");
    return static_cast<std::size_t>(std::ceil(2.0 * pi / arp - 1e-12));
}

TransformCoefficients forward_cwt(const ComplexField& f, const std::vector<double>& scales,
                                  const std::vector<double>& angles, const PacketParams& params, double t) {
    require_planar(params, "forward_cwt");
    f.grid.validate();
    if (f.space != FieldSpace::position || f.grid.dim() != 2) {
        throw std::invalid_argument("forward_cwt: input must be a planar position-space field");
    }
    if (scales.empty()) throw std::invalid_argument("forward_cwt: empty scale list");
    if (angles.empty()) throw std::invalid_argument("forward_cwt: empty angle list");
    for (std::size_t j = 0; j < scales.size(); ++j) {
        if (!(scales[j] > 0.0)) throw std::invalid_argument("forward_cwt: scales must be positive");
        if (j > 0 && !(scales[j] > scales[j - 1])) throw std::invalid_argument("forward_cwt: scales must increase");
    }
    const double h = std::max(f.grid.spacing[0], f.grid.spacing[1]);
    const SpectralExtent ext = spectral_extent(params);
    if (ext.essential_radius / scales.front() >= pi / h) {
        throw std::invalid_argument("forward_cwt: grid too coarse for the smallest scale (essential |k| " +
                                    std::to_string(ext.essential_radius / scales.front()) + " >= pi/h " +
                                    std::to_string(pi / h) + ")");
    }

    const std::size_t nx = f.grid.shape[0];
    const std::size_t ny = f.grid.shape[1];
    const std::size_t n = nx * ny;
    FftPlan fwd({nx, ny}, FftDirection::forward);
    FftPlan bwd({nx, ny}, FftDirection::backward);
    std::vector<Complex> fhat = f.values;
    fwd.execute(fhat);

    std::vector<double> kx(nx), ky(ny);
    for (std::size_t i = 0; i < nx; ++i) kx[i] = fft_frequency(i, nx, f.grid.spacing[0]);
    for (std::size_t j = 0; j < ny; ++j) ky[j] = fft_frequency(j, ny, f.grid.spacing[1]);

    TransformCoefficients out{scales, angles, f.grid, std::vector<Complex>(scales.size() * angles.size() * n),
                              params, t};
    const std::ptrdiff_t slices = static_cast<std::ptrdiff_t>(scales.size() * angles.size());
    const double inv_n = 1.0 / static_cast<double>(n);

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t sl = 0; sl < slices; ++sl) {
        const std::size_t is = static_cast<std::size_t>(sl) / angles.size();
        const std::size_t ia = static_cast<std::size_t>(sl) % angles.size();
        const FamilyIndex idx{scales[is], angles[ia], {0.0, 0.0}};
        std::vector<Complex> buf(n);
        for (std::size_t i = 0; i < nx; ++i) {
            for (std::size_t j = 0; j < ny; ++j) {
                const Complex g = family_member_spectrum(idx, kx[i], ky[j], t, params);
                buf[i * ny + j] = fhat[i * ny + j] * std::conj(g);
            }
        }
        bwd.execute(buf);
        Complex* dst = out.slice(is, ia);
        for (std::size_t m = 0; m < n; ++m) dst[m] = buf[m] * inv_n;
    }
    return out;
}

AdmissibilityResult AdmissibilityResult::in(Convention target) const {
    if (target == convention) return *this;
    AdmissibilityResult r = *this;
    const double f = conv_factor(dim);
    const double scale = target == Convention::with_2pi_power ? 1.0 / f : f;
    r.value *= scale;
    r.est_error *= scale;
    r.convention = target;
    return r;
}

AdmissibilityResult admissibility_2d(const PacketParams& params, double t) {
    require_planar(params, "admissibility_2d");
    (void)t;
    AdmissibilityResult r = admissibility_direct(params).in(Convention::without_2pi_power);
    return r;
}

AdmissibilityResult admissibility_direct(const PacketParams& params) {
    const int n = params.dim();
    if (!params.axisymmetric() && n > 3) {
        throw std::invalid_argument("admissibility_direct: non-axisymmetric packets supported up to n = 3");
    }
    const auto [ulo, uhi] = log_radius_range(params, 80.0);
    const double kappa = params.kappa();
    double err_total = 0.0;

    // dk / k = du; the k^{n-1} of the volume element cancels against 1/k^n.
    auto radial = [&](auto&& angular) {
        double err = 0.0;
        const double v = gauss_kronrod<double, 61>::integrate(
            [&](double u) { return angular(kappa * std::exp(u)); }, ulo, uhi, kMaxDepth, kQuadTol, &err);
        err_total += err;
        return v;
    };

    double value = 0.0;
    if (params.axisymmetric()) {
        const double sphere = n == 2 ? 2.0 : surface_of_sphere(n - 2);
        value = sphere * radial([&](double k) {
                    return gauss_kronrod<double, 61>::integrate(
                        [&](double th) {
                            const double lm = log_modulus_polar(params, k, th);
                            return std::exp(2.0 * lm) * std::pow(std::sin(th), n - 2);
                        },
                        0.0, pi, kMaxDepth, kQuadTol);
                });
    } else {
        value = radial([&](double k) {
            return gauss_kronrod<double, 61>::integrate(
                [&](double th) {
                    const double st = std::sin(th);
                    const double ct = std::cos(th);
                    const double inner = gauss_kronrod<double, 31>::integrate(
                        [&](double ph) {
                            const std::vector<double> kv = {k * ct, k * st * std::cos(ph), k * st * std::sin(ph)};
                            return std::exp(2.0 * fourier_log_modulus(kv, params));
                        },
                        0.0, 2.0 * pi, kMaxDepth, kQuadTol);
                    return inner * st;
                },
                0.0, pi, kMaxDepth, kQuadTol);
        });
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw NonConvergence("admissibility_direct: quadrature produced a non-positive value");
    }
    AdmissibilityResult r;
    r.value = value;
    r.method = AdmissibilityMethod::direct_quadrature;
    r.convention = Convention::without_2pi_power;
    r.est_error = std::max(err_total, 1e-12 * value);
    r.dim = n;
    return r.in(Convention::with_2pi_power);
}

AdmissibilityResult admissibility_reduction(const PacketParams& params) {
    const int n = params.dim();
    const double p = params.p();
    const double gamma = params.gamma();
    const double c = params.c();
    const double nu2 = 2.0 * params.nu() + 0.5 * (n - 1);

    // Doubled packet on the imaginary time axis; tau is c times the time
    // parameter. Evaluated in logs, all factors are real and positive.
    auto log_psi2 = [&](double tau) {
        const double s = std::sqrt(1.0 + tau / (2.0 * gamma));
        const double z = 2.0 * p * s;
        double lv = 0.5 * std::log(2.0 / pi) + nu2 * std::log(z) + std::log(bessel_k_scaled(nu2, z).real()) - z;
        for (double e : params.epsilons()) lv -= 0.5 * std::log(tau + 2.0 * e);
        return lv;
    };
    // Shift by the value at the integrand's scale so large p stays representable.
    const double shift = -2.0 * p;
    LineIntegrand f = [&](double tau, std::vector<double>& out) {
        out[0] = std::exp(n * std::log(tau) + log_psi2(tau) - shift);
    };
    const QuadratureResult q = integrate_half_line(f, 1, 2.0 * gamma, 1e-12);

    double log_const = 0.5 * n * std::log(2.0 * pi) - (n - 1) * std::log(p) + 0.5 * (n - 1) * std::log(gamma) -
                       (2.0 * params.nu() + 0.5 * (n - 1)) * std::log(2.0) - std::lgamma(n + 1.0);
    // c^{n+1} from dt = dtau / c cancels the c dependence of tau^n; the
    // coefficient is independent of c.
    (void)c;
    const double value = std::exp(log_const + shift) * q.value[0];
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw NonConvergence("admissibility_reduction: value not representable");
    }
    AdmissibilityResult r;
    r.value = value;
    r.method = AdmissibilityMethod::reduction_integral;
    r.convention = Convention::with_2pi_power;
    r.est_error = std::max(q.rel_change, 1e-14) * value;
    r.dim = n;
    return r;
}

NdAdmissibility admissibility_nd(const PacketParams& params) {
    NdAdmissibility out;
    out.direct = admissibility_direct(params);
    out.reduction = admissibility_reduction(params);
    const double diff = std::abs(out.direct.value - out.reduction.value);
    const double allow = std::max(1e-6 * out.direct.value, out.direct.est_error + out.reduction.est_error);
    out.consistent = diff <= allow;
    return out;
}

AdmissibilityResult admissibility_closed_form_3d(const PacketParams& params) {
    if (params.dim() != 3 || !params.axisymmetric() || params.eps(0) != params.gamma()) {
        throw std::invalid_argument("admissibility_closed_form_3d: requires n = 3 and eps = gamma");
    }
    const double two_nu = 2.0 * params.nu();
    if (two_nu < 0.0 || two_nu != std::round(two_nu)) {
        throw std::invalid_argument("admissibility_closed_form_3d: 2 nu must be a nonnegative integer");
    }
    const int m_max = static_cast<int>(two_nu);
    const double p = params.p();
    const double gamma = params.gamma();
    const double kappa = params.kappa();
    const double z = 4.0 * kappa * gamma;
    double sum = 0.0;
    for (int m = 0; m <= m_max; ++m) {
        const double fact_ratio = std::exp(std::lgamma(two_nu + 1.0) - std::lgamma(m + 1.0));
        sum += fact_ratio * std::pow(2.0, -2.0 * two_nu + m - 1.0) * std::pow(kappa, -2.0 * two_nu + m - 5.0) /
               std::pow(gamma, 1.0 - m) * bessel_k(m + 3.0, z).real();
    }
    AdmissibilityResult r;
    r.value = std::pow(2.0 * pi, 4) * std::pow(p / gamma, 2.0 * two_nu) * sum;
    r.method = AdmissibilityMethod::closed_form_3d;
    r.convention = Convention::without_2pi_power;
    r.est_error = 1e-13 * r.value;
    r.dim = 3;
    return r;
}

Reconstruction inverse_cwt(const TransformCoefficients& w, const AdmissibilityResult& c) {
    const PacketParams& params = w.source_params;
    require_planar(params, "inverse_cwt");
    if (w.scales.size() < 2) throw std::invalid_argument("inverse_cwt: need at least two scales");
    if (w.angles.empty()) throw std::invalid_argument("inverse_cwt: empty angle list");
    const double dlog = std::log(w.scales[1] / w.scales[0]);
    for (std::size_t j = 1; j < w.scales.size(); ++j) {
        if (std::abs(std::log(w.scales[j] / w.scales[j - 1]) - dlog) > 1e-9 * std::abs(dlog) || !(dlog > 0.0)) {
            throw std::invalid_argument("inverse_cwt: scales must be log-spaced and increasing");
        }
    }
    const double dalpha = 2.0 * pi / static_cast<double>(w.angles.size());
    for (std::size_t j = 0; j < w.angles.size(); ++j) {
        if (std::abs(w.angles[j] - w.angles[0] - dalpha * static_cast<double>(j)) > 1e-9) {
            throw std::invalid_argument("inverse_cwt: angles must be uniformly spaced over a full turn");
        }
    }
    const double cval = c.in(Convention::without_2pi_power).value;
    if (!(cval > 0.0)) throw std::invalid_argument("inverse_cwt: admissibility coefficient must be positive");

    const std::size_t nx = w.b_grid.shape[0];
    const std::size_t ny = w.b_grid.shape[1];
    const std::size_t n = nx * ny;
    FftPlan fwd({nx, ny}, FftDirection::forward);
    FftPlan bwd({nx, ny}, FftDirection::backward);
    std::vector<double> kx(nx), ky(ny);
    for (std::size_t i = 0; i < nx; ++i) kx[i] = fft_frequency(i, nx, w.b_grid.spacing[0]);
    for (std::size_t j = 0; j < ny; ++j) ky[j] = fft_frequency(j, ny, w.b_grid.spacing[1]);

    std::vector<Complex> acc(n, 0.0);
    std::vector<double> response(n, 0.0);
    const std::ptrdiff_t nscales = static_cast<std::ptrdiff_t>(w.scales.size());

#pragma omp parallel
    {
        std::vector<Complex> local(n, 0.0);
        std::vector<double> local_resp(n, 0.0);
        std::vector<Complex> buf(n);
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t is = 0; is < nscales; ++is) {
            const double a = w.scales[static_cast<std::size_t>(is)];
            const double weight = dlog * dalpha / (a * a) / cval;
            for (std::size_t ia = 0; ia < w.angles.size(); ++ia) {
                const Complex* src = w.slice(static_cast<std::size_t>(is), ia);
                std::copy(src, src + n, buf.begin());
                fwd.execute(buf);
                const FamilyIndex idx{a, w.angles[ia], {0.0, 0.0}};
                for (std::size_t i = 0; i < nx; ++i) {
                    for (std::size_t j = 0; j < ny; ++j) {
                        const Complex g = family_member_spectrum(idx, kx[i], ky[j], w.t, params);
                        local[i * ny + j] += weight * buf[i * ny + j] * g;
                        local_resp[i * ny + j] += weight * std::norm(g);
                    }
                }
            }
        }
#pragma omp critical
        {
            for (std::size_t m = 0; m < n; ++m) {
                acc[m] += local[m];
                response[m] += local_resp[m];
            }
        }
    }

    bwd.execute(acc);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (Complex& v : acc) v *= inv_n;

    const SpectralExtent ext = spectral_extent(params);
    CoverageDiagnostic d;
    d.annulus_inner = ext.peak_radius / w.scales.back();
    d.annulus_outer = std::min(ext.peak_radius / w.scales.front(), pi / std::max(w.b_grid.spacing[0], w.b_grid.spacing[1]));
    std::vector<double> band;
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const double r = std::hypot(kx[i], ky[j]);
            if (r >= d.annulus_inner && r <= d.annulus_outer) band.push_back(response[i * ny + j]);
        }
    }
    if (band.empty()) {
        throw CoverageError("inverse_cwt: no frequency samples inside the analysed band", d);
    }
    std::sort(band.begin(), band.end());
    d.response_min = band.front();
    d.response_max = band.back();
    d.response_median = band[band.size() / 2];
    if (d.response_median < 0.5 || d.response_median > 2.0) {
        throw CoverageError("inverse_cwt: scale/angle coverage insufficient (median response " +
                                std::to_string(d.response_median) + ")",
                            d);
    }
    Reconstruction out{ComplexField{w.b_grid, std::move(acc), FieldSpace::position}, d};
    return out;
}

}  // namespace gwp
