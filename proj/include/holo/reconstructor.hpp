#pragma once

#include "holo/encoder.hpp"
#include "holo/propagation.hpp"

namespace holo {

/// Simulated bench: the hologram is low-passed by the 4f aperture, then travels back to the
/// object plane. `prop` is the object-to-hologram spec used for encoding; its distance is negated.
Field reconstruct(const PhaseHologram& hologram, const PropagationSpec& prop, const ApertureSpec& aperture);

/// Same bench applied to an arbitrary complex hologram-plane field (the ideal complex-SLM reference).
Field reconstruct_field(const Field& holo_field, const PropagationSpec& prop, const ApertureSpec& aperture);

} // namespace holo
