#include "holo/binarizer.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "holo/image.hpp"

namespace holo {

DitherKernel DitherKernel::make(KernelName name) {
    DitherKernel k;
    k.name = name;
    switch (name) {
    case KernelName::floyd_steinberg:
        k.taps = {{1, 0, 7.0 / 16}, {-1, 1, 3.0 / 16}, {0, 1, 5.0 / 16}, {1, 1, 1.0 / 16}};
        break;
    case KernelName::jarvis_judice_ninke:
        k.taps = {{1, 0, 7.0 / 48},  {2, 0, 5.0 / 48},                                         //
                  {-2, 1, 3.0 / 48}, {-1, 1, 5.0 / 48}, {0, 1, 7.0 / 48}, {1, 1, 5.0 / 48}, {2, 1, 3.0 / 48}, //
                  {-2, 2, 1.0 / 48}, {-1, 2, 3.0 / 48}, {0, 2, 5.0 / 48}, {1, 2, 3.0 / 48}, {2, 2, 1.0 / 48}};
        break;
    case KernelName::stucki:
        k.taps = {{1, 0, 8.0 / 42},  {2, 0, 4.0 / 42},                                         //
                  {-2, 1, 2.0 / 42}, {-1, 1, 4.0 / 42}, {0, 1, 8.0 / 42}, {1, 1, 4.0 / 42}, {2, 1, 2.0 / 42}, //
                  {-2, 2, 1.0 / 42}, {-1, 2, 2.0 / 42}, {0, 2, 4.0 / 42}, {1, 2, 2.0 / 42}, {2, 2, 1.0 / 42}};
        break;
    case KernelName::burkes:
        k.taps = {{1, 0, 8.0 / 32},  {2, 0, 4.0 / 32}, //
                  {-2, 1, 2.0 / 32}, {-1, 1, 4.0 / 32}, {0, 1, 8.0 / 32}, {1, 1, 4.0 / 32}, {2, 1, 2.0 / 32}};
        break;
    }
    return k;
}

KernelName parse_kernel_name(std::string_view name) {
    if (name == "fs" || name == "floyd_steinberg") {
        return KernelName::floyd_steinberg;
    }
    if (name == "jjn" || name == "jarvis_judice_ninke") {
        return KernelName::jarvis_judice_ninke;
    }
    if (name == "stucki") {
        return KernelName::stucki;
    }
    if (name == "burkes") {
        return KernelName::burkes;
    }
    throw Error(fmt::format("unknown dither kernel '{}'", name));
}

std::string to_string(KernelName name) {
    switch (name) {
    case KernelName::floyd_steinberg:
        return "floyd_steinberg";
    case KernelName::jarvis_judice_ninke:
        return "jarvis_judice_ninke";
    case KernelName::stucki:
        return "stucki";
    case KernelName::burkes:
        return "burkes";
    }
    return "unknown";
}

BinaryMask binarize(const Plane& amplitude, const DitherKernel& kernel) {
    constexpr double eps = 1e-9;
    const int w = amplitude.width;
    const int h = amplitude.height;
    if (w <= 0 || h <= 0 || amplitude.size() != static_cast<std::size_t>(w) * h) {
        throw Error("binarize needs a non-empty, consistently sized plane");
    }

    std::vector<double> work(amplitude.values);
    for (std::size_t i = 0; i < work.size(); ++i) {
        const double v = work[i];
        if (!(v >= -eps && v <= 1.0 + eps)) {
            throw Error(fmt::format("amplitude sample {} at ({}, {}) lies outside [0, 1]", v, i % w, i / w));
        }
        work[i] = std::clamp(v, 0.0, 1.0);
    }

    BinaryMask mask(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double v = work[static_cast<std::size_t>(y) * w + x];
            const bool on = v >= 0.5;
            mask.set(x, y, on);
            const double err = v - (on ? 1.0 : 0.0);
            if (err == 0.0) {
                continue;
            }
            for (const auto& tap : kernel.taps) {
                const int nx = x + tap.dx;
                const int ny = y + tap.dy;
                if (nx < 0 || nx >= w || ny >= h) {
                    continue;
                }
                work[static_cast<std::size_t>(ny) * w + nx] += err * tap.weight;
            }
        }
    }
    return mask;
}

double mask_density(const BinaryMask& mask) {
    if (mask.bits.empty()) {
        return 0.0;
    }
    const auto on = std::count_if(mask.bits.begin(), mask.bits.end(), [](std::uint8_t b) { return b != 0; });
    return static_cast<double>(on) / static_cast<double>(mask.bits.size());
}

void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask) {
    write_bilevel_png(path, mask.width, mask.height, mask.bits);
}

} // namespace holo
