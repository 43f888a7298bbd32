// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#pragma once

#include <cstddef>
#include <vector>

#include "gwp/packet.hpp"
#include "gwp/types.hpp"
#include "gwp/wavelet.hpp"

namespace gwp {

enum class FieldSpace { position, frequency };

/// Uniform rectangular grid. Node i along axis d sits at origin[d] + i * spacing[d].
struct GridSpec {
    std::vector<double> origin;
    std::vector<double> spacing;
    std::vector<std::size_t> shape;

    std::size_t dim() const { return shape.size(); }
    std::size_t size() const;
    double coord(std::size_t axis, std::size_t i) const { return origin[axis] + static_cast<double>(i) * spacing[axis]; }
    /// Throws std::invalid_argument on mismatched lengths, empty shape,
    /// zero-length axes or non-positive spacing.
    void validate() const;

    /// Grid of shape n^dim centred on `center` with total extent `extent` per
    /// axis (nodes at center - extent/2 + i * extent/n).
    static GridSpec centered(const std::vector<double>& center, const std::vector<double>& extent,
                             const std::vector<std::size_t>& shape);
};

/// Row-major complex samples; the last axis varies fastest.
struct ComplexField {
    GridSpec grid;
    std::vector<Complex> values;
    FieldSpace space = FieldSpace::position;

    Complex& at(std::size_t i, std::size_t j) { return values[i * grid.shape[1] + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return values[i * grid.shape[1] + j]; }
};

enum class FieldKind { position, frequency, beam, morlet_limit };

/// Default grid: 6 asymptotic widths per axis around (ct, 0, ..., 0) with
/// `points` nodes per axis.
GridSpec default_grid(const PacketParams& params, double t, std::size_t points);

/// Evaluates a closed form at every node. `frequency` samples the spectrum,
/// `beam` the Gaussian beam at q = kappa. Evaluation is parallel over rows.
ComplexField sample_field(FieldKind kind, const GridSpec& grid, const PacketParams& params, double t,
                          Scale scale = Scale::natural);

}  // namespace gwp
