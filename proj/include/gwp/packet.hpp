// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <span>
#include <string>
#include <vector>

namespace gwp {

/// Parameter set of one Gaussian Wave Packet in n >= 2 space dimensions.
///
/// The packet propagates along the first axis. Each transverse axis j = 2..n
/// carries its own width parameter eps_j; equal values give the axisymmetric
/// packet. Time is not part of the parameter set, it is an evaluation
/// argument.
class PacketParams {
public:
    /// Throws std::invalid_argument unless p, gamma, c and every eps are
    /// positive and finite and nu is finite.
    PacketParams(double p, double nu, double gamma, std::vector<double> epsilons, double c = 1.0);

    /// Two-dimensional packet (single transverse width).
    static PacketParams planar(double p, double nu, double gamma, double eps, double c = 1.0);
    /// n-dimensional packet with all transverse widths equal to eps.
    static PacketParams axisymmetric(int dim, double p, double nu, double gamma, double eps,
                                     double c = 1.0);

    double p() const { return p_; }
    double nu() const { return nu_; }
    double gamma() const { return gamma_; }
    double c() const { return c_; }
    const std::vector<double>& epsilons() const { return eps_; }
    /// Transverse width of axis j = 2..n, zero-based as eps(0) for axis 2.
    double eps(std::size_t j) const { return eps_[j]; }
    int dim() const { return static_cast<int>(eps_.size()) + 1; }

    /// Carrier wavenumber p / (2 gamma).
    double kappa() const { return p_ / (2.0 * gamma_); }
    bool axisymmetric() const;

    /// |nu| > 10 is accepted but outside the validated range.
    bool nu_untested() const;

    /// Asymptotic (large-p) Gaussian widths: sigma_1^2 = 4 gamma^2 / p,
    /// sigma_j^2 = gamma eps_j / p.
    double sigma_long() const;
    double sigma_trans(std::size_t j) const;

    std::string describe() const;

private:
    double p_;
    double nu_;
    double gamma_;
    std::vector<double> eps_;
    double c_;
};

}  // namespace gwp
