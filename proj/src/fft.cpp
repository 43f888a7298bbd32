// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "gwp/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace gwp {

namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

FftPlan::FftPlan(std::vector<std::size_t> shape, FftDirection dir) : shape_(std::move(shape)) {
    if (shape_.empty()) throw std::invalid_argument("FftPlan: empty shape");
    std::vector<int> n;
    for (std::size_t s : shape_) {
        if (s == 0) throw std::invalid_argument("FftPlan: zero-length axis");
        n.push_back(static_cast<int>(s));
    }
    std::vector<Complex> scratch(size());
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const int sign = dir == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD;
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft(static_cast<int>(n.size()), n.data(), buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_) throw std::runtime_error("FftPlan: planner failed");
}

FftPlan::~FftPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

std::size_t FftPlan::size() const {
    std::size_t n = 1;
    for (std::size_t s : shape_) n *= s;
    return n;
}

void FftPlan::execute(std::vector<Complex>& data) const {
    if (data.size() != size()) throw std::invalid_argument("FftPlan: array size does not match plan");
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(static_cast<fftw_plan>(plan_), buf, buf);
}

double fft_frequency(std::size_t m, std::size_t n, double h) {
    const long long mm = static_cast<long long>(m);
    const long long nn = static_cast<long long>(n);
    const long long folded = mm < (nn + 1) / 2 ? mm : mm - nn;
    return 2.0 * pi * static_cast<double>(folded) / (static_cast<double>(nn) * h);
}

}  // namespace gwp
