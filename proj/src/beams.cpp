#include "holo/beams.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

namespace holo {

double hermite(int order, double x) {
    if (order < 0) {
        throw Error("Hermite order must be non-negative");
    }
    double prev = 1.0;
    if (order == 0) {
        return prev;
    }
    double cur = 2.0 * x;
    for (int k = 1; k < order; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Field hermite_gaussian(const GridSpec& grid, const BeamSpec& spec) {
    grid.validate();
    if (spec.m < 0 || spec.n < 0) {
        throw Error(fmt::format("mode orders must be non-negative, got TEM{},{}", spec.m, spec.n));
    }
    const double w = spec.waist_for(grid);
    if (!(w >= 4.0 * grid.pitch)) {
        throw Error(fmt::format("beam waist {} m is below the resolvable bound 4 * pitch = {} m", w, 4.0 * grid.pitch));
    }

    // separable: evaluate each axis once
    const double s = std::numbers::sqrt2 / w;
    std::vector<double> gx(grid.width);
    std::vector<double> gy(grid.height);
    for (int i = 0; i < grid.width; ++i) {
        const double x = (i - grid.width / 2) * grid.pitch - spec.center_x;
        gx[i] = hermite(spec.m, s * x) * std::exp(-x * x / (w * w));
    }
    for (int j = 0; j < grid.height; ++j) {
        const double y = (j - grid.height / 2) * grid.pitch - spec.center_y;
        gy[j] = hermite(spec.n, s * y) * std::exp(-y * y / (w * w));
    }
    const auto abs_less = [](double a, double b) { return std::abs(a) < std::abs(b); };
    const double peak = std::abs(*std::max_element(gx.begin(), gx.end(), abs_less)) *
                        std::abs(*std::max_element(gy.begin(), gy.end(), abs_less));
    if (peak == 0.0) {
        throw Error("beam has no support on this grid");
    }

    Field field(grid);
    for (int j = 0; j < grid.height; ++j) {
        for (int i = 0; i < grid.width; ++i) {
            field(i, j) = complex{gx[i] * gy[j] / peak, 0.0};
        }
    }
    return field;
}

} // namespace holo
