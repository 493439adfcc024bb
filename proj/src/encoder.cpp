#include "holo/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

namespace holo {
namespace {

void require_nonzero(const Field& f, const char* who) {
    if (f.size() == 0 || f.max_amplitude() == 0.0) {
        throw Error(fmt::format("{}: hologram-plane field is identically zero", who));
    }
    if (!f.all_finite()) {
        throw Error(fmt::format("{}: hologram-plane field contains non-finite samples", who));
    }
}

} // namespace

Field PhaseHologram::to_field() const {
    std::vector<complex> data(phase.size());
    std::transform(phase.begin(), phase.end(), data.begin(), [](double p) { return std::polar(1.0, p); });
    return Field(grid, std::move(data));
}

GrayImage PhaseHologram::to_image() const {
    GrayImage img(grid.width, grid.height);
    std::transform(phase.begin(), phase.end(), img.samples.begin(),
                   [](double p) { return to_gray_level(255.0 * wrap_phase(p) / two_pi); });
    return img;
}

PhaseHologram PhaseHologram::from_image(const GrayImage& image, const GridSpec& grid) {
    grid.validate();
    if (image.width != grid.width || image.height != grid.height) {
        throw Error(fmt::format("hologram image is {}x{}, grid is {}x{}", image.width, image.height, grid.width,
                                grid.height));
    }
    PhaseHologram h{grid, std::vector<double>(grid.size())};
    std::transform(image.samples.begin(), image.samples.end(), h.phase.begin(),
                   [](std::uint8_t v) { return wrap_phase(two_pi * v / 255.0); });
    return h;
}

CancelKind parse_cancel_kind(std::string_view name) {
    if (name == "checkerboard") {
        return CancelKind::checkerboard;
    }
    if (name == "random") {
        return CancelKind::random;
    }
    if (name == "alternate") {
        return CancelKind::alternate;
    }
    throw Error(fmt::format("unknown canceling wave '{}'", name));
}

std::string to_string(CancelKind kind) {
    switch (kind) {
    case CancelKind::checkerboard:
        return "checkerboard";
    case CancelKind::random:
        return "random";
    case CancelKind::alternate:
        return "alternate";
    }
    return "unknown";
}

BinarizeScale parse_binarize_scale(std::string_view name) {
    if (name == "unit") {
        return BinarizeScale::unit;
    }
    if (name == "max") {
        return BinarizeScale::max;
    }
    throw Error(fmt::format("unknown binarization scale '{}'", name));
}

std::string to_string(BinarizeScale scale) {
    return scale == BinarizeScale::max ? "max" : "unit";
}

Plane canceling_phase(const BinaryMask& mask, const CancelSpec& spec) {
    constexpr double pi = std::numbers::pi;
    Plane out(mask.width, mask.height, 0.0);
    switch (spec.kind()) {
    case CancelKind::checkerboard:
        for (int y = 0; y < mask.height; ++y) {
            for (int x = 0; x < mask.width; ++x) {
                if (!mask.on(x, y)) {
                    out(x, y) = ((x + y) % 2) * pi;
                }
            }
        }
        break;
    case CancelKind::random: {
        std::mt19937_64 gen(spec.seed().value_or(0));
        for (std::size_t i = 0; i < mask.bits.size(); ++i) {
            if (!mask.bits[i]) {
                out.values[i] = (gen() >> 63) ? pi : 0.0;
            }
        }
        break;
    }
    case CancelKind::alternate: {
        bool next_is_pi = false;
        for (std::size_t i = 0; i < mask.bits.size(); ++i) {
            if (!mask.bits[i]) {
                out.values[i] = next_is_pi ? pi : 0.0;
                next_is_pi = !next_is_pi;
            }
        }
        break;
    }
    }
    return out;
}

ProposedEncoding encode_proposed(const Field& holo_field, const DitherKernel& kernel, const CancelSpec& cancel,
                                 BinarizeScale scale) {
    require_nonzero(holo_field, "encode_proposed");
    Plane amplitude = holo_field.amplitude_plane();
    const double denom = scale == BinarizeScale::max ? holo_field.max_amplitude() : 1.0;
    for (auto& a : amplitude.values) {
        a = std::min(a / denom, 1.0);
    }
    BinaryMask mask = binarize(amplitude, kernel);
    const Plane theta_c = canceling_phase(mask, cancel);

    PhaseHologram h{holo_field.grid(), std::vector<double>(holo_field.size())};
    const auto data = holo_field.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        h.phase[i] = mask.bits[i] ? wrap_phase(std::arg(data[i])) : theta_c.values[i];
    }
    return {std::move(h), std::move(mask)};
}

PhaseHologram encode_dph(const Field& holo_field) {
    require_nonzero(holo_field, "encode_dph");
    const double peak = holo_field.max_amplitude();
    PhaseHologram h{holo_field.grid(), std::vector<double>(holo_field.size())};
    for (int y = 0; y < holo_field.height(); ++y) {
        for (int x = 0; x < holo_field.width(); ++x) {
            const complex u = holo_field(x, y);
            const double a = std::min(std::abs(u) / peak, 1.0);
            const double theta = std::arg(u);
            const double offset = std::acos(a);
            h.phase[holo_field.index(x, y)] = wrap_phase((x + y) % 2 == 0 ? theta + offset : theta - offset);
        }
    }
    return h;
}

PhaseHologram encode_naive(const Field& holo_field) {
    require_nonzero(holo_field, "encode_naive");
    PhaseHologram h{holo_field.grid(), std::vector<double>(holo_field.size())};
    const auto data = holo_field.data();
    std::transform(data.begin(), data.end(), h.phase.begin(), [](complex u) { return wrap_phase(std::arg(u)); });
    return h;
}

} // namespace holo
