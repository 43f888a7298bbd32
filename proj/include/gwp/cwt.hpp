// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gwp/field.hpp"
#include "gwp/packet.hpp"
#include "gwp/types.hpp"

namespace gwp {

// ---------------------------------------------------------------------------
// Wavelet family
// ---------------------------------------------------------------------------

struct FamilyIndex {
    double a = 1.0;
    double alpha = 0.0;
    std::array<double, 2> b{0.0, 0.0};
};

/// (1/a) psi(M_alpha^{-1} (r - b) / a) for a planar packet. Throws
/// std::invalid_argument when a <= 0.
Complex family_member(const FamilyIndex& idx, double x, double y, double t, const PacketParams& params);

/// Spectrum of the family member: a psi_hat(a M_alpha^{-1} k) exp(-i k.b).
Complex family_member_spectrum(const FamilyIndex& idx, double kx, double ky, double t, const PacketParams& params);

/// Spectral support of a packet: radius of the |psi_hat| maximum and the
/// largest radius where |psi_hat| >= rel_threshold * max.
struct SpectralExtent {
    double peak_radius;
    double essential_radius;
};
SpectralExtent spectral_extent(const PacketParams& params, double rel_threshold = 1e-6);

// ---------------------------------------------------------------------------
// Transform
// ---------------------------------------------------------------------------

struct TransformCoefficients {
    std::vector<double> scales;
    std::vector<double> angles;
    GridSpec b_grid;
    /// [scale][angle][b], b in row-major grid order.
    std::vector<Complex> values;
    PacketParams source_params;
    double t = 0.0;

    std::size_t slice_size() const { return b_grid.size(); }
    Complex* slice(std::size_t is, std::size_t ia) { return values.data() + (is * angles.size() + ia) * slice_size(); }
    const Complex* slice(std::size_t is, std::size_t ia) const {
        return values.data() + (is * angles.size() + ia) * slice_size();
    }
};

/// a_min * ratio^j, j = 0..count-1.
std::vector<double> geometric_scales(double a_min, double ratio, std::size_t count);
/// count angles 2 pi j / count.
std::vector<double> uniform_angles(std::size_t count);
/// Angle count matching an angular resolving power, ceil(2 pi / arp).
std::size_t angle_count_for_arp(double arp);

/// W(a, alpha, b) on the translation grid of `f`, computed slice by slice as
/// an inverse DFT of DFT(f) * conj(a psi_hat(a M_alpha^{-1} k)); translations
/// wrap periodically. Throws std::invalid_argument for empty or non-positive
/// or unsorted scales, empty angles, a non-planar or frequency-space input,
/// and when the smallest-scale wavelet is not resolved by the grid.
TransformCoefficients forward_cwt(const ComplexField& f, const std::vector<double>& scales,
                                  const std::vector<double>& angles, const PacketParams& params, double t);

// ---------------------------------------------------------------------------
// Admissibility
// ---------------------------------------------------------------------------

enum class AdmissibilityMethod { closed_form_3d, reduction_integral, direct_quadrature };

/// without_2pi_power: C = int |psi_hat|^2 / |k|^n d^n k.
/// with_2pi_power: the same integral divided by (2 pi)^n.
enum class Convention { with_2pi_power, without_2pi_power };

struct AdmissibilityResult {
    double value = 0.0;
    AdmissibilityMethod method = AdmissibilityMethod::direct_quadrature;
    Convention convention = Convention::without_2pi_power;
    double est_error = 0.0;
    int dim = 2;

    /// Same coefficient expressed in the other convention.
    AdmissibilityResult in(Convention target) const;
};

/// Planar coefficient by adaptive quadrature in polar coordinates, returned
/// in the without_2pi_power convention. t is accepted for interface symmetry;
/// the modulus of the spectrum does not depend on it.
AdmissibilityResult admissibility_2d(const PacketParams& params, double t = 0.0);

/// Direct n-dimensional quadrature (with_2pi_power). Axisymmetric packets of
/// any dimension reduce to two integrals; other packets are supported up to
/// n = 3. Throws std::invalid_argument beyond that.
AdmissibilityResult admissibility_direct(const PacketParams& params);

/// One-dimensional integral of the packet with doubled parameters along the
/// imaginary time axis (with_2pi_power).
AdmissibilityResult admissibility_reduction(const PacketParams& params);

struct NdAdmissibility {
    AdmissibilityResult direct;
    AdmissibilityResult reduction;
    /// |direct - reduction| within the larger of 1e-6 relative and the
    /// combined error estimates.
    bool consistent = false;
};
NdAdmissibility admissibility_nd(const PacketParams& params);

/// Finite Bessel sum for n = 3, eps = gamma and integer 2 nu >= 0
/// (without_2pi_power). Throws std::invalid_argument otherwise.
AdmissibilityResult admissibility_closed_form_3d(const PacketParams& params);

// ---------------------------------------------------------------------------
// Reconstruction
// ---------------------------------------------------------------------------

/// Reconstruction response sum_j w_j |g_hat_j(k)|^2 / C sampled over the
/// annulus between the smallest- and largest-scale spectral peaks.
struct CoverageDiagnostic {
    double annulus_inner = 0.0;
    double annulus_outer = 0.0;
    double response_min = 0.0;
    double response_median = 0.0;
    double response_max = 0.0;
};

class CoverageError : public std::runtime_error {
public:
    CoverageError(const std::string& what, CoverageDiagnostic d) : std::runtime_error(what), diagnostic(d) {}
    CoverageDiagnostic diagnostic;
};

struct Reconstruction {
    ComplexField field;
    CoverageDiagnostic coverage;
};

/// (1/C) sum over scales, angles and translations of W psi^{a,alpha,b}, with
/// the measure da/a^3 taken as d(ln a)/a^2 at the midpoint of each log cell
/// and a uniform angle step. The result lives on the translation grid.
/// Requires at least two log-spaced scales and uniformly spaced angles
/// (std::invalid_argument); throws CoverageError when the median response
/// over the analysed band lies outside [0.5, 2].
Reconstruction inverse_cwt(const TransformCoefficients& w, const AdmissibilityResult& c);

}  // namespace gwp
