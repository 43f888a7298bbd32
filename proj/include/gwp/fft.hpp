// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <cstddef>
#include <vector>

#include "gwp/types.hpp"

namespace gwp {

enum class FftDirection { forward, backward };

/// Unnormalized multi-dimensional DFT over a row-major array. The forward
/// transform uses exp(-2 pi i m j / N). One plan can be executed on any number
/// of arrays of the planned shape, concurrently.
class FftPlan {
public:
    FftPlan(std::vector<std::size_t> shape, FftDirection dir);
    ~FftPlan();
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    void execute(std::vector<Complex>& data) const;
    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t size() const;

private:
    std::vector<std::size_t> shape_;
    void* plan_ = nullptr;
};

/// Angular frequency of DFT bin m on an axis of n nodes with spacing h,
/// folded to [-pi/h, pi/h).
double fft_frequency(std::size_t m, std::size_t n, double h);

}  // namespace gwp
