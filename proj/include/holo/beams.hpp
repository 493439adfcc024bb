#pragma once

#include <optional>

#include "holo/field.hpp"

namespace holo {

/// Hermite-Gaussian TEM_mn mode at its waist plane.
struct BeamSpec {
    int m = 9; // horizontal order (nodal lines crossing the x axis)
    int n = 7; // vertical order
    std::optional<double> waist; // meters; defaults to width * pitch / 8
    double center_x = 0.0;       // meters, relative to pixel (width/2, height/2)
    double center_y = 0.0;

    double waist_for(const GridSpec& grid) const { return waist.value_or(grid.width * grid.pitch / 8.0); }
};

/// Physicists' Hermite polynomial H_order(x) by the three-term recurrence.
double hermite(int order, double x);

/// u = H_m(sqrt2 x / w) H_n(sqrt2 y / w) exp(-(x^2 + y^2) / w^2), scaled to unit peak amplitude.
/// The phase is 0 or pi. Requires waist >= 4 * pitch.
Field hermite_gaussian(const GridSpec& grid, const BeamSpec& spec);

} // namespace holo
