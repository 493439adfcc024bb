// Randomized invariants over several seeds and non-square grids.
#include <doctest.h>

#include <random>

#include "holo/beams.hpp"
#include "holo/metrics.hpp"
#include "holo/reconstructor.hpp"
#include "test_support.hpp"

using namespace holo;

namespace {

const GridSpec grids[] = {{32, 32, 8e-6, 532e-9}, {64, 48, 6.4e-6, 633e-9}, {96, 128, 3.74e-6, 450e-9}};

} // namespace

TEST_CASE("propagation invariants across grids and seeds") {
    for (const auto& grid : grids) {
        for (std::uint64_t seed = 100; seed < 103; ++seed) {
            CAPTURE(grid.width);
            CAPTURE(seed);
            const Field f = test::random_field(grid, seed);
            const Field g = test::random_field(grid, seed + 50);
            for (auto method : {PropagationMethod::angular_spectrum, PropagationMethod::fresnel}) {
                const PropagationSpec spec{0.15, method};
                CHECK(test::relative_l2(propagate(f, {0.0, method}), f) <= 1e-10);
                const Field fwd = propagate(f, spec);
                CHECK(test::relative_l2(propagate(fwd, spec.reversed()), f) <= 1e-8);
                CHECK(std::abs(fwd.energy() / f.energy() - 1.0) <= 1e-9);

                Field sum(grid);
                const Field pg = propagate(g, spec);
                Field expected(grid);
                for (std::size_t i = 0; i < sum.size(); ++i) {
                    sum.data()[i] = 2.5 * f.data()[i] - complex{0, 1} * g.data()[i];
                    expected.data()[i] = 2.5 * fwd.data()[i] - complex{0, 1} * pg.data()[i];
                }
                CHECK(test::relative_l2(propagate(sum, spec), expected) <= 1e-10);
            }
        }
    }
}

TEST_CASE("encoders produce unit-modulus holograms with consistent phases") {
    for (const auto& grid : grids) {
        for (std::uint64_t seed = 200; seed < 203; ++seed) {
            const Field f = test::random_field(grid, seed, 2.0);
            const auto enc = encode_proposed(f, DitherKernel::floyd_steinberg(), CancelSpec::random(seed));
            const Plane tc = canceling_phase(enc.mask, CancelSpec::random(seed));
            for (std::size_t i = 0; i < f.size(); ++i) {
                const double expected = enc.mask.bits[i] ? std::arg(f.data()[i]) : tc.values[i];
                CHECK(test::phase_distance(enc.hologram.phase[i], expected) <= 1e-15);
            }
            for (const auto& h : {enc.hologram, encode_dph(f), encode_naive(f)}) {
                CHECK(std::all_of(h.phase.begin(), h.phase.end(), [](double p) { return p >= 0.0 && p < two_pi; }));
            }
        }
    }
}

TEST_CASE("dither density tracks the mean on structured planes") {
    for (const auto& grid : grids) {
        Plane p(grid.width, grid.height);
        double mean = 0.0;
        for (int y = 0; y < grid.height; ++y) {
            for (int x = 0; x < grid.width; ++x) {
                p(x, y) = 0.5 + 0.45 * std::sin(0.3 * x) * std::cos(0.17 * y);
                mean += p(x, y) / p.size();
            }
        }
        for (auto k : {KernelName::floyd_steinberg, KernelName::jarvis_judice_ninke, KernelName::stucki,
                       KernelName::burkes}) {
            const double bound = 2.0 / std::min(grid.width, grid.height);
            CHECK(std::abs(mask_density(binarize(p, DitherKernel::make(k))) - mean) <= bound);
        }
    }
}

TEST_CASE("light efficiency reciprocity over random pairs") {
    for (std::uint64_t seed = 300; seed < 310; ++seed) {
        const GridSpec grid = test::small_grid(16);
        const Field a = test::random_field(grid, seed, 0.1 + seed % 7);
        const Field b = test::random_field(grid, seed + 1000);
        CHECK(std::abs(light_efficiency(a, b) * light_efficiency(b, a) - 1.0) <= 1e-12);
    }
}

TEST_CASE("Hermite-Gaussian nodal lines for odd orders") {
    const GridSpec grid{128, 128, 8e-6, 532e-9};
    for (int m : {1, 3, 5, 9}) {
        const Field f = hermite_gaussian(grid, {m, 7, 12 * grid.pitch});
        for (int y = 0; y < grid.height; ++y) {
            CHECK(std::abs(f(64, y)) <= 1e-6);
            CHECK(std::abs(f(y, 64)) <= 1e-6);
        }
    }
}
