#include "holo/reconstructor.hpp"

namespace holo {

Field reconstruct(const PhaseHologram& hologram, const PropagationSpec& prop, const ApertureSpec& aperture) {
    return reconstruct_field(hologram.to_field(), prop, aperture);
}

Field reconstruct_field(const Field& holo_field, const PropagationSpec& prop, const ApertureSpec& aperture) {
    return propagate(spectrum_filter(holo_field, aperture), prop.reversed());
}

} // namespace holo
