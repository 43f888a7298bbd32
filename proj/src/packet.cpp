// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "gwp/packet.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gwp {

namespace {

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || !(v > 0.0)) {
        throw std::invalid_argument(std::string("PacketParams: ") + name + " must be positive and finite");
    }
}

}  // namespace

PacketParams::PacketParams(double p, double nu, double gamma, std::vector<double> epsilons, double c)
    : p_(p), nu_(nu), gamma_(gamma), eps_(std::move(epsilons)), c_(c) {
    require_positive(p_, "p");
    require_positive(gamma_, "gamma");
    require_positive(c_, "c");
    if (!std::isfinite(nu_)) throw std::invalid_argument("PacketParams: nu must be finite");
    if (eps_.empty()) throw std::invalid_argument("PacketParams: dimension must be at least 2");
    for (double e : eps_) require_positive(e, "eps");
}

PacketParams PacketParams::planar(double p, double nu, double gamma, double eps, double c) {
    return PacketParams(p, nu, gamma, {eps}, c);
}

PacketParams PacketParams::axisymmetric(int dim, double p, double nu, double gamma, double eps, double c) {
    if (dim < 2) throw std::invalid_argument("PacketParams: dimension must be at least 2");
    return PacketParams(p, nu, gamma, std::vector<double>(static_cast<std::size_t>(dim - 1), eps), c);
}

bool PacketParams::axisymmetric() const {
    for (double e : eps_) {
        if (e != eps_.front()) return false;
    }
    return true;
}

bool PacketParams::nu_untested() const { return std::abs(nu_) > 10.0; }

double PacketParams::sigma_long() const { return 2.0 * gamma_ / std::sqrt(p_); }

double PacketParams::sigma_trans(std::size_t j) const { return std::sqrt(gamma_ * eps_.at(j) / p_); }

std::string PacketParams::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "p=" << p_ << " nu=" << nu_ << " gamma=" << gamma_ << " eps=";
    for (std::size_t j = 0; j < eps_.size(); ++j) os << (j ? "," : "") << eps_[j];
    os << " c=" << c_ << " dim=" << dim();
    return os.str();
}

}  // namespace gwp
