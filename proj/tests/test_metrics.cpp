#include <doctest.h>

#include <random>

#include "holo/image.hpp"
#include "holo/metrics.hpp"
#include "test_support.hpp"

using namespace holo;

namespace {

Plane random_plane(int w, int h, std::uint64_t seed, double scale = 255.0) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, scale);
    Plane p(w, h);
    for (auto& v : p.values) {
        v = u(gen);
    }
    return p;
}

} // namespace

TEST_CASE("psnr closed forms") {
    const Plane a = random_plane(16, 16, 1);
    CHECK(psnr(a, a, 255.0) == psnr_identical);
    CHECK(std::isinf(psnr_identical));

    Plane ref(32, 32, 100.0);
    Plane test(32, 32, 116.0);
    const double expected = 20.0 * std::log10(255.0 / 16.0);
    CHECK(std::abs(psnr(test, ref, 255.0) - expected) <= 1e-9);
    CHECK(expected == doctest::Approx(24.0484).epsilon(1e-5));

    // mixed +-16 differences have the same MSE
    for (std::size_t i = 0; i < ref.size(); i += 2) {
        test.values[i] = 84.0;
    }
    CHECK(std::abs(psnr(test, ref, 255.0) - expected) <= 1e-9);
}

TEST_CASE("psnr is shift invariant and symmetric") {
    const Plane a = random_plane(40, 24, 2);
    const Plane b = random_plane(40, 24, 3);
    for (double c : {-50.0, 0.5, 1000.0}) {
        Plane as = a, bs = b;
        for (auto& v : as.values) v += c;
        for (auto& v : bs.values) v += c;
        CHECK(psnr(as, bs, 255.0) == doctest::Approx(psnr(a, b, 255.0)).epsilon(1e-9));
    }
    CHECK(psnr(a, b, 255.0) == psnr(b, a, 255.0));
}

TEST_CASE("psnr preconditions") {
    CHECK_THROWS_AS(psnr(Plane(4, 4), Plane(4, 2), 1.0), Error);
    CHECK_THROWS_AS(psnr(Plane(4, 4), Plane(2, 8), 1.0), Error);
    CHECK_THROWS_AS(psnr(Plane(4, 4), Plane(4, 4, 1.0), 0.0), Error);
}

TEST_CASE("field PSNR conventions") {
    const GridSpec grid = test::small_grid(16);
    GrayImage amp(16, 16), phase(16, 16);
    std::mt19937_64 gen(4);
    for (std::size_t i = 0; i < amp.samples.size(); ++i) {
        amp.samples[i] = static_cast<std::uint8_t>(1 + gen() % 255);
        phase.samples[i] = static_cast<std::uint8_t>(gen() % 255);
    }
    const Field f = field_from_images(amp, phase, grid);

    SUBCASE("amplitude is compared after max normalization") {
        Field scaled = f;
        for (auto& c : scaled.data()) {
            c *= 0.125;
        }
        CHECK(amplitude_psnr(scaled, amplitude_reference(amp)) > 250.0);
        CHECK(amplitude_psnr_8bit(scaled, amplitude_reference(amp)) == psnr_identical);
    }
    SUBCASE("phase uses [0, 2pi) mapped to [0, 1] without piston removal") {
        CHECK(phase_psnr(f, phase_reference(phase)) > 250.0);
        CHECK(phase_psnr_8bit(f, phase_reference(phase)) == psnr_identical);
        Field shifted = f;
        for (auto& c : shifted.data()) {
            c *= std::polar(1.0, 0.1);
        }
        CHECK(phase_psnr(shifted, phase_reference(phase)) < 30.0);
    }
    SUBCASE("mismatched reference size") {
        CHECK_THROWS_AS(amplitude_psnr(f, Plane(8, 8)), Error);
        CHECK_THROWS_AS(phase_psnr(f, Plane(16, 8)), Error);
    }
}

TEST_CASE("light efficiency") {
    const GridSpec grid = test::small_grid(32);
    const Field a = test::random_field(grid, 5);
    const Field b = test::random_field(grid, 6, 2.0);
    CHECK(light_efficiency(a, a) == 1.0);
    Field a2 = a;
    for (auto& c : a2.data()) {
        c *= 2.0;
    }
    CHECK(light_efficiency(a2, b) == doctest::Approx(4.0 * light_efficiency(a, b)).epsilon(1e-14));
    CHECK(std::abs(light_efficiency(a, b) * light_efficiency(b, a) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(light_efficiency(a, Field(grid)), Error);
    CHECK_THROWS_AS(light_efficiency(a, Field(test::small_grid(16))), Error);
}
