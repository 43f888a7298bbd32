// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gwp {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

// Largest negative exponent that still yields a normal double.
inline constexpr double underflow_exponent = -745.0;

/// Raised when an iterative or adaptive numerical procedure does not reach its
/// tolerance within its work budget.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gwp
