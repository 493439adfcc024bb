#pragma once

#include <string>
#include <string_view>

#include "holo/field.hpp"

namespace holo {

enum class PropagationMethod { angular_spectrum, fresnel };
enum class Padding { none, double_size };

struct PropagationSpec {
    double distance = 0.2; // meters; negative propagates backwards
    PropagationMethod method = PropagationMethod::angular_spectrum;
    bool band_limit = false;
    Padding padding = Padding::none;

    PropagationSpec reversed() const {
        PropagationSpec r = *this;
        r.distance = -distance;
        return r;
    }
};

/// Scalar free-space propagation by a transfer function in the DFT domain.
///
/// Angular spectrum: exp(i 2 pi z sqrt(1/lambda^2 - fx^2 - fy^2)), evanescent bins zeroed.
/// Fresnel: exp(i 2 pi z / lambda) exp(-i pi lambda z (fx^2 + fy^2)).
///
/// With band_limit the transfer function is additionally cut at
/// |f| < 1 / (lambda sqrt((2 z / S)^2 + 1)) per axis, S being the (padded) field extent.
/// Double padding zero-pads to twice the size and crops the centre back out.
Field propagate(const Field& field, const PropagationSpec& spec);

enum class ApertureShape { circle, square };

/// Low-pass aperture in the Fourier plane of a 4f relay, centred on DC.
/// `fraction` is the diameter (circle) or side (square) as a fraction of the grid size per axis.
struct ApertureSpec {
    ApertureShape shape = ApertureShape::circle;
    double fraction = 1.0 / 8.0;

    static ApertureSpec full() { return {ApertureShape::square, 1.0}; }

    void validate() const;
    /// Whether the DFT bin with signed indices (kx, ky) passes on a width x height grid.
    bool passes(int kx, int ky, int width, int height) const;
};

Field spectrum_filter(const Field& field, const ApertureSpec& aperture);

/// Name parsing for CLI/config use; throws holo::Error on unknown names.
PropagationMethod parse_propagation_method(std::string_view name);
ApertureShape parse_aperture_shape(std::string_view name);
std::string to_string(PropagationMethod method);
std::string to_string(ApertureShape shape);

} // namespace holo
