#include "holo/field.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace holo {

void GridSpec::validate() const {
    if (width < 2 || height < 2 || width % 2 != 0 || height % 2 != 0) {
        throw Error(fmt::format("grid dimensions must be even and >= 2, got {}x{}", width, height));
    }
    if (!(pitch > 0.0) || !std::isfinite(pitch)) {
        throw Error(fmt::format("pixel pitch must be positive, got {}", pitch));
    }
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
        throw Error(fmt::format("wavelength must be positive, got {}", wavelength));
    }
}

double wrap_phase(double radians) {
    double w = std::fmod(radians, two_pi);
    if (w < 0.0) {
        w += two_pi;
    }
    // fmod of a tiny negative value can round up to exactly 2*pi
    if (w >= two_pi) {
        w = 0.0;
    }
    return w;
}

Plane::Plane(int w, int h, double fill)
    : width(w), height(h), values(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

Plane::Plane(int w, int h, std::vector<double> v) : width(w), height(h), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
        throw Error(fmt::format("plane data length {} does not match {}x{}", values.size(), w, h));
    }
}

Field::Field(GridSpec grid) : grid_(grid) {
    grid_.validate();
    data_.assign(grid_.size(), complex{});
}

Field::Field(GridSpec grid, std::vector<complex> data) : grid_(grid), data_(std::move(data)) {
    grid_.validate();
    if (data_.size() != grid_.size()) {
        throw Error(fmt::format("field data length {} does not match grid {}x{}", data_.size(), grid_.width,
                                grid_.height));
    }
}

Plane Field::amplitude_plane() const {
    Plane out(width(), height());
    std::transform(data_.begin(), data_.end(), out.values.begin(), [](complex c) { return std::abs(c); });
    return out;
}

Plane Field::phase_plane() const {
    Plane out(width(), height());
    std::transform(data_.begin(), data_.end(), out.values.begin(),
                   [](complex c) { return wrap_phase(std::arg(c)); });
    return out;
}

double Field::max_amplitude() const {
    double m = 0.0;
    for (const auto& c : data_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

double Field::energy() const {
    std::vector<double> sq(data_.size());
    std::transform(data_.begin(), data_.end(), sq.begin(), [](complex c) { return std::norm(c); });
    return pairwise_sum(sq);
}

bool Field::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t block = 64;
    if (values.size() <= block) {
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

} // namespace holo
