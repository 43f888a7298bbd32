// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 gwpwave contributors

#include "gwp/field.hpp"

#include <cmath>
#include <stdexcept>

namespace gwp {

std::size_t GridSpec::size() const {
    std::size_t n = 1;
    for (std::size_t s : shape) n *= s;
    return n;
}

void GridSpec::validate() const {
    if (shape.empty()) throw std::invalid_argument("GridSpec: empty shape");
    if (origin.size() != shape.size() || spacing.size() != shape.size()) {
        throw std::invalid_argument("GridSpec: origin, spacing and shape lengths differ");
    }
    for (std::size_t d = 0; d < shape.size(); ++d) {
        if (shape[d] == 0) throw std::invalid_argument("GridSpec: zero-length axis");
        if (!(spacing[d] > 0.0) || !std::isfinite(spacing[d])) {
            throw std::invalid_argument("GridSpec: spacing must be positive and finite");
        }
        if (!std::isfinite(origin[d])) throw std::invalid_argument("GridSpec: origin must be finite");
    }
}

GridSpec GridSpec::centered(const std::vector<double>& center, const std::vector<double>& extent,
                            const std::vector<std::size_t>& shape) {
    if (center.size() != shape.size() || extent.size() != shape.size()) {
        throw std::invalid_argument("GridSpec::centered: length mismatch");
    }
    GridSpec g;
    g.shape = shape;
    for (std::size_t d = 0; d < shape.size(); ++d) {
        if (shape[d] == 0) throw std::invalid_argument("GridSpec: zero-length axis");
        g.spacing.push_back(extent[d] / static_cast<double>(shape[d]));
        g.origin.push_back(center[d] - 0.5 * extent[d]);
    }
    g.validate();
    return g;
}

GridSpec default_grid(const PacketParams& params, double t, std::size_t points) {
    const int n = params.dim();
    std::vector<double> center(n, 0.0);
    std::vector<double> extent(n);
    center[0] = params.c() * t;
    extent[0] = 6.0 * params.sigma_long();
    for (int j = 1; j < n; ++j) extent[j] = 6.0 * params.sigma_trans(j - 1);
    return GridSpec::centered(center, extent, std::vector<std::size_t>(n, points));
}

ComplexField sample_field(FieldKind kind, const GridSpec& grid, const PacketParams& params, double t, Scale scale) {
    grid.validate();
    if (static_cast<int>(grid.dim()) != params.dim()) {
        throw std::invalid_argument("sample_field: grid dimension does not match packet dimension");
    }
    ComplexField f;
    f.grid = grid;
    f.space = kind == FieldKind::frequency ? FieldSpace::frequency : FieldSpace::position;
    const std::size_t total = grid.size();
    f.values.assign(total, Complex(0.0, 0.0));
    const std::size_t dim = grid.dim();

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
        std::vector<double> r(dim);
        std::size_t rem = static_cast<std::size_t>(idx);
        for (std::size_t d = dim; d-- > 0;) {
            r[d] = grid.coord(d, rem % grid.shape[d]);
            rem /= grid.shape[d];
        }
        Complex v;
        switch (kind) {
            case FieldKind::position: v = evaluate_gwp(r, t, params, scale); break;
            case FieldKind::frequency: v = fourier_gwp(r, params, t, scale); break;
            case FieldKind::beam: v = evaluate_beam(params.kappa(), r, t, params); break;
            case FieldKind::morlet_limit: v = evaluate_morlet_limit(r, t, params, scale); break;
        }
        f.values[static_cast<std::size_t>(idx)] = v;
    }
    return f;
}

}  // namespace gwp
