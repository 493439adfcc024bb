#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "holo/field.hpp"

namespace holo {

/// Binary amplitude plane. A set entry is an on-pixel; the rest are off-pixels.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h, bool fill = false)
        : width(w), height(h), bits(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill ? 1 : 0) {}

    bool on(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool value) { bits[static_cast<std::size_t>(y) * width + x] = value ? 1 : 0; }
    std::size_t size() const { return bits.size(); }

    bool operator==(const BinaryMask&) const = default;
};

enum class KernelName { floyd_steinberg, jarvis_judice_ninke, stucki, burkes };

struct DiffusionTap {
    int dx;
    int dy;
    double weight;
};

/// Error-diffusion weights; every tap lies strictly ahead of the current pixel in raster order.
struct DitherKernel {
    KernelName name = KernelName::floyd_steinberg;
    std::vector<DiffusionTap> taps;

    static DitherKernel make(KernelName name);
    static DitherKernel floyd_steinberg() { return make(KernelName::floyd_steinberg); }
};

KernelName parse_kernel_name(std::string_view name);
std::string to_string(KernelName name);

/// Raster-scan error diffusion at threshold 0.5. Input samples must lie in [0, 1]; values within
/// 1e-9 outside are clamped, anything further is rejected. Error that would land outside the
/// image is dropped.
BinaryMask binarize(const Plane& amplitude, const DitherKernel& kernel);

double mask_density(const BinaryMask& mask);

void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

} // namespace holo
