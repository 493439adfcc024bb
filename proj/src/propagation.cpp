#include "holo/propagation.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "fft.hpp"

namespace holo {
namespace {

void check_input(const Field& field) {
    if (field.size() == 0) {
        throw Error("cannot propagate an empty field");
    }
    field.grid().validate();
    if (!field.all_finite()) {
        throw Error("field contains non-finite samples");
    }
}

complex transfer(double fx, double fy, const GridSpec& grid, const PropagationSpec& spec) {
    const double z = spec.distance;
    const double lambda = grid.wavelength;
    if (spec.method == PropagationMethod::fresnel) {
        const double phase = two_pi * z / lambda - std::numbers::pi * lambda * z * (fx * fx + fy * fy);
        return std::polar(1.0, phase);
    }
    const double arg = 1.0 / (lambda * lambda) - fx * fx - fy * fy;
    if (arg < 0.0) {
        return z == 0.0 ? complex{1.0, 0.0} : complex{};
    }
    return std::polar(1.0, two_pi * z * std::sqrt(arg));
}

Field propagate_unpadded(const Field& field, const PropagationSpec& spec) {
    const GridSpec& grid = field.grid();
    const int w = grid.width;
    const int h = grid.height;
    std::vector<complex> spectrum(field.data().begin(), field.data().end());
    fft::forward(spectrum, w, h);

    const double extent_x = w * grid.pitch;
    const double extent_y = h * grid.pitch;
    double limit_x = INFINITY;
    double limit_y = INFINITY;
    if (spec.band_limit) {
        const double z = spec.distance;
        limit_x = 1.0 / (grid.wavelength * std::sqrt(std::pow(2.0 * z / extent_x, 2) + 1.0));
        limit_y = 1.0 / (grid.wavelength * std::sqrt(std::pow(2.0 * z / extent_y, 2) + 1.0));
    }
    for (int ky = 0; ky < h; ++ky) {
        const double fy = fft::signed_index(ky, h) / extent_y;
        for (int kx = 0; kx < w; ++kx) {
            const double fx = fft::signed_index(kx, w) / extent_x;
            auto& s = spectrum[static_cast<std::size_t>(ky) * w + kx];
            if (std::abs(fx) >= limit_x || std::abs(fy) >= limit_y) {
                s = complex{};
                continue;
            }
            s *= transfer(fx, fy, grid, spec);
        }
    }
    fft::inverse(spectrum, w, h);
    return Field(grid, std::move(spectrum));
}

} // namespace

Field propagate(const Field& field, const PropagationSpec& spec) {
    check_input(field);
    if (!std::isfinite(spec.distance)) {
        throw Error("propagation distance must be finite");
    }
    if (spec.padding == Padding::none) {
        return propagate_unpadded(field, spec);
    }

    const GridSpec& grid = field.grid();
    GridSpec padded = grid;
    padded.width *= 2;
    padded.height *= 2;
    const int ox = grid.width / 2;
    const int oy = grid.height / 2;
    Field big(padded);
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            big(x + ox, y + oy) = field(x, y);
        }
    }
    const Field out_big = propagate_unpadded(big, spec);
    Field out(grid);
    for (int y = 0; y < grid.height; ++y) {
        for (int x = 0; x < grid.width; ++x) {
            out(x, y) = out_big(x + ox, y + oy);
        }
    }
    return out;
}

void ApertureSpec::validate() const {
    if (!(fraction > 0.0) || fraction > 1.0) {
        throw Error(fmt::format("aperture fraction must lie in (0, 1], got {}", fraction));
    }
}

bool ApertureSpec::passes(int kx, int ky, int width, int height) const {
    const double rx = 0.5 * fraction * width;
    const double ry = 0.5 * fraction * height;
    if (shape == ApertureShape::square) {
        return std::abs(kx) <= rx && std::abs(ky) <= ry;
    }
    const double u = kx / rx;
    const double v = ky / ry;
    return u * u + v * v <= 1.0;
}

Field spectrum_filter(const Field& field, const ApertureSpec& aperture) {
    check_input(field);
    aperture.validate();
    const int w = field.width();
    const int h = field.height();
    std::vector<complex> spectrum(field.data().begin(), field.data().end());
    fft::forward(spectrum, w, h);
    for (int ky = 0; ky < h; ++ky) {
        const int sy = fft::signed_index(ky, h);
        for (int kx = 0; kx < w; ++kx) {
            if (!aperture.passes(fft::signed_index(kx, w), sy, w, h)) {
                spectrum[static_cast<std::size_t>(ky) * w + kx] = complex{};
            }
        }
    }
    fft::inverse(spectrum, w, h);
    return Field(field.grid(), std::move(spectrum));
}

PropagationMethod parse_propagation_method(std::string_view name) {
    if (name == "asm" || name == "angular_spectrum") {
        return PropagationMethod::angular_spectrum;
    }
    if (name == "fresnel") {
        return PropagationMethod::fresnel;
    }
    throw Error(fmt::format("unknown propagation method '{}'", name));
}

ApertureShape parse_aperture_shape(std::string_view name) {
    if (name == "circle") {
        return ApertureShape::circle;
    }
    if (name == "square") {
        return ApertureShape::square;
    }
    throw Error(fmt::format("unknown aperture shape '{}'", name));
}

std::string to_string(PropagationMethod method) {
    return method == PropagationMethod::fresnel ? "fresnel" : "angular_spectrum";
}

std::string to_string(ApertureShape shape) {
    return shape == ApertureShape::square ? "square" : "circle";
}

} // namespace holo
