#include "holo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "holo/image.hpp"

namespace holo {
namespace {

void check_shape(const Field& f, const Plane& p) {
    if (f.width() != p.width || f.height() != p.height) {
        throw Error(fmt::format("reconstruction is {}x{}, reference is {}x{}", f.width(), f.height(), p.width,
                                p.height));
    }
}

std::vector<double> max_normalized(std::span<const double> v) {
    const double peak = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
    std::vector<double> out(v.begin(), v.end());
    if (peak > 0.0) {
        for (auto& x : out) {
            x /= peak;
        }
    }
    return out;
}

} // namespace

double psnr(std::span<const double> test, std::span<const double> reference, double peak) {
    if (test.size() != reference.size()) {
        throw Error(fmt::format("psnr: sample counts differ ({} vs {})", test.size(), reference.size()));
    }
    if (test.empty()) {
        throw Error("psnr: empty planes");
    }
    if (!(peak > 0.0)) {
        throw Error("psnr: peak must be positive");
    }
    std::vector<double> sq(test.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const double d = test[i] - reference[i];
        sq[i] = d * d;
    }
    const double mse = pairwise_sum(sq) / static_cast<double>(sq.size());
    if (mse == 0.0) {
        return psnr_identical;
    }
    return 10.0 * std::log10(peak * peak / mse);
}

double psnr(const Plane& test, const Plane& reference, double peak) {
    if (test.width != reference.width || test.height != reference.height) {
        throw Error(fmt::format("psnr: plane dimensions differ ({}x{} vs {}x{})", test.width, test.height,
                                reference.width, reference.height));
    }
    return psnr(std::span<const double>(test.values), std::span<const double>(reference.values), peak);
}

double amplitude_psnr(const Field& reconstruction, const Plane& reference_amplitude) {
    check_shape(reconstruction, reference_amplitude);
    const auto test = max_normalized(reconstruction.amplitude_plane().values);
    const auto ref = max_normalized(reference_amplitude.values);
    return psnr(test, ref, 1.0);
}

double phase_psnr(const Field& reconstruction, const Plane& reference_phase) {
    check_shape(reconstruction, reference_phase);
    auto test = reconstruction.phase_plane().values;
    std::vector<double> ref(reference_phase.values.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        test[i] /= two_pi;
        ref[i] = wrap_phase(reference_phase.values[i]) / two_pi;
    }
    return psnr(test, ref, 1.0);
}

double amplitude_psnr_8bit(const Field& reconstruction, const Plane& reference_amplitude) {
    check_shape(reconstruction, reference_amplitude);
    auto test = max_normalized(reconstruction.amplitude_plane().values);
    auto ref = max_normalized(reference_amplitude.values);
    for (std::size_t i = 0; i < ref.size(); ++i) {
        test[i] = to_gray_level(255.0 * test[i]);
        ref[i] = to_gray_level(255.0 * ref[i]);
    }
    return psnr(test, ref, 255.0);
}

double phase_psnr_8bit(const Field& reconstruction, const Plane& reference_phase) {
    check_shape(reconstruction, reference_phase);
    auto test = reconstruction.phase_plane().values;
    std::vector<double> ref(reference_phase.values.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        test[i] = to_gray_level(255.0 * test[i] / two_pi);
        ref[i] = to_gray_level(255.0 * wrap_phase(reference_phase.values[i]) / two_pi);
    }
    return psnr(test, ref, 255.0);
}

double light_efficiency(const Field& numerator, const Field& denominator) {
    if (!(numerator.grid() == denominator.grid())) {
        throw Error("light_efficiency: fields live on different grids");
    }
    const double den = denominator.energy();
    if (den == 0.0) {
        throw Error("light_efficiency: reference field carries no energy");
    }
    return numerator.energy() / den;
}

} // namespace holo
