#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holo/binarizer.hpp"
#include "holo/field.hpp"
#include "holo/image.hpp"

namespace holo {

/// Phase-only hologram: every pixel is exp(i * phase), phase in [0, 2*pi).
struct PhaseHologram {
    GridSpec grid;
    std::vector<double> phase;

    Field to_field() const;
    GrayImage to_image() const;
    static PhaseHologram from_image(const GrayImage& image, const GridSpec& grid);
};

enum class CancelKind { checkerboard, random, alternate };

/// Off-pixel canceling wave. The seed is present exactly when kind == random.
class CancelSpec {
public:
    static CancelSpec checkerboard() { return CancelSpec(CancelKind::checkerboard, std::nullopt); }
    static CancelSpec alternate() { return CancelSpec(CancelKind::alternate, std::nullopt); }
    static CancelSpec random(std::uint64_t seed) { return CancelSpec(CancelKind::random, seed); }

    CancelKind kind() const { return kind_; }
    std::optional<std::uint64_t> seed() const { return seed_; }

private:
    CancelSpec(CancelKind kind, std::optional<std::uint64_t> seed) : kind_(kind), seed_(seed) {}
    CancelKind kind_;
    std::optional<std::uint64_t> seed_;
};

CancelKind parse_cancel_kind(std::string_view name);
std::string to_string(CancelKind kind);

/// Canceling phase on the off-pixels of `mask` (0 or pi), 0 on on-pixels.
///   checkerboard: mod(x + y, 2) * pi
///   random:       fair 0/pi draw per off-pixel from mt19937_64(seed), in raster order
///   alternate:    single running toggle over the off-pixels in raster order, starting at 0
Plane canceling_phase(const BinaryMask& mask, const CancelSpec& spec);

/// Scale at which the hologram-plane amplitude is binarized.
enum class BinarizeScale {
    unit, // |u| relative to the unit-modulus SLM pixel, clipped to [0, 1]
    max,  // |u| / max |u|
};

BinarizeScale parse_binarize_scale(std::string_view name);
std::string to_string(BinarizeScale scale);

struct ProposedEncoding {
    PhaseHologram hologram;
    BinaryMask mask;
};

/// Binarized-amplitude encoding: on-pixels keep arg(u), off-pixels carry the canceling wave.
ProposedEncoding encode_proposed(const Field& holo_field, const DitherKernel& kernel, const CancelSpec& cancel,
                                 BinarizeScale scale = BinarizeScale::unit);

/// Double-phase hologram with checkerboard multiplexing: theta + acos(a) on even (x + y),
/// theta - acos(a) on odd, with a = |u| / max |u|.
PhaseHologram encode_dph(const Field& holo_field);

/// Conventional phase-only hologram: arg(u), amplitude discarded.
PhaseHologram encode_naive(const Field& holo_field);

} // namespace holo
