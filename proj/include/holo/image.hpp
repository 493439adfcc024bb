#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "holo/field.hpp"

namespace holo {

/// 8-bit single-channel image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), samples(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    std::uint8_t& operator()(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t operator()(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }

    bool operator==(const GrayImage&) const = default;
};

/// Reads a PNG (any bit depth or color type) or a binary PGM (P5). Color input is
/// reduced to BT.601 luma.
GrayImage read_image(const std::filesystem::path& path);

void write_png(const std::filesystem::path& path, const GrayImage& image);

/// Writes a 1-bit PNG; nonzero entries become white.
void write_bilevel_png(const std::filesystem::path& path, int width, int height,
                       std::span<const std::uint8_t> bits);

/// Nearest-neighbour resampling. Never introduces gray levels absent from the source.
GrayImage resample_nearest(const GrayImage& image, int width, int height);

/// Object field (amp/255) * exp(i * 2*pi * phase/255), phase wrapped into [0, 2*pi).
Field field_from_images(const GrayImage& amplitude, const GrayImage& phase, const GridSpec& grid);

enum class AmplitudeNorm { max, fixed };

struct AmplitudeScale {
    AmplitudeNorm norm = AmplitudeNorm::max;
    double scale = 1.0; // used when norm == fixed: amplitude/scale maps to 255

    static AmplitudeScale by_max() { return {}; }
    static AmplitudeScale fixed_scale(double s) { return {AmplitudeNorm::fixed, s}; }
};

/// Renders amplitude (normalized per `scale`, clamped) and phase ([0, 2*pi) -> [0, 255]) as 8-bit images.
std::pair<GrayImage, GrayImage> field_to_images(const Field& field, AmplitudeScale scale = {});

/// Rounds to the nearest integer, ties away from zero, then clamps to [0, 255].
std::uint8_t to_gray_level(double value);

/// Amplitude reference plane, amp/255.
Plane amplitude_reference(const GrayImage& amplitude);
/// Phase reference plane in radians, 2*pi*v/255 wrapped into [0, 2*pi).
Plane phase_reference(const GrayImage& phase);

/// Built-in fallback inputs: a radial chirp for amplitude and a diagonal linear ramp for phase.
GrayImage synthetic_amplitude(int width, int height);
GrayImage synthetic_phase(int width, int height);

} // namespace holo
