#pragma once

#include <limits>
#include <span>

#include "holo/field.hpp"

namespace holo {

inline constexpr double psnr_identical = std::numeric_limits<double>::infinity();

/// 10 log10(peak^2 / MSE) in decibels; psnr_identical when the planes match exactly.
double psnr(std::span<const double> test, std::span<const double> reference, double peak);
double psnr(const Plane& test, const Plane& reference, double peak);

/// Both amplitudes max-normalized to [0, 1], peak 1.
double amplitude_psnr(const Field& reconstruction, const Plane& reference_amplitude);
/// Phases in [0, 2*pi) mapped to [0, 1], peak 1, no piston correction.
double phase_psnr(const Field& reconstruction, const Plane& reference_phase);

/// 8-bit variants: both sides rendered to gray levels first, peak 255.
double amplitude_psnr_8bit(const Field& reconstruction, const Plane& reference_amplitude);
double phase_psnr_8bit(const Field& reconstruction, const Plane& reference_phase);

/// Ratio of total squared amplitude of `numerator` to that of `denominator`.
double light_efficiency(const Field& numerator, const Field& denominator);

} // namespace holo
