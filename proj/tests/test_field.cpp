#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "holo/image.hpp"
#include "test_support.hpp"

using namespace holo;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "holo_test_field";
    std::filesystem::create_directories(dir);
    return dir / name;
}

GrayImage random_image(int w, int h, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    GrayImage img(w, h);
    for (auto& s : img.samples) {
        s = static_cast<std::uint8_t>(gen() & 0xff);
    }
    return img;
}

} // namespace

TEST_CASE("grid validation") {
    CHECK_NOTHROW(GridSpec{2, 2, 1e-6, 5e-7}.validate());
    CHECK_NOTHROW(GridSpec{6, 10, 1e-6, 5e-7}.validate());
    CHECK_THROWS_AS(GridSpec({3, 4, 1e-6, 5e-7}).validate(), Error);
    CHECK_THROWS_AS(GridSpec({0, 0, 1e-6, 5e-7}).validate(), Error);
    CHECK_THROWS_AS(GridSpec({4, 4, 0.0, 5e-7}).validate(), Error);
    CHECK_THROWS_AS(GridSpec({4, 4, 1e-6, -1.0}).validate(), Error);
    CHECK_THROWS_AS(Field(GridSpec{4, 4, 1e-6, 5e-7}, std::vector<complex>(15)), Error);
}

TEST_CASE("phase wrap is canonical") {
    CHECK(wrap_phase(0.0) == 0.0);
    CHECK(wrap_phase(two_pi) == 0.0);
    CHECK(wrap_phase(-1e-300) == 0.0);
    CHECK(wrap_phase(-std::numbers::pi / 2) == doctest::Approx(1.5 * std::numbers::pi));
    Field f(test::small_grid(8));
    f(0, 0) = complex{-1.0, -1e-18};
    CHECK(f.phase(0, 0) >= 0.0);
    CHECK(f.phase(0, 0) < two_pi);
}

TEST_CASE("field_from_images maps gray levels") {
    const GridSpec grid = test::small_grid(8);

    SUBCASE("full amplitude, zero phase is 1+0i") {
        const Field f = field_from_images(GrayImage(8, 8, 255), GrayImage(8, 8, 0), grid);
        for (auto c : f.data()) {
            CHECK(c == complex{1.0, 0.0});
        }
    }
    SUBCASE("zero amplitude gives a zero field") {
        const Field f = field_from_images(GrayImage(8, 8, 0), GrayImage(8, 8, 77), grid);
        for (auto c : f.data()) {
            CHECK(std::abs(c) == 0.0);
        }
    }
    SUBCASE("phase level 128") {
        GrayImage phase(8, 8, 0);
        phase(3, 5) = 128;
        const Field f = field_from_images(GrayImage(8, 8, 255), phase, grid);
        const complex expected = std::polar(1.0, two_pi * 128.0 / 255.0);
        CHECK(std::abs(f(3, 5) - expected) < 1e-15);
    }
    SUBCASE("dimension mismatch names the input") {
        try {
            field_from_images(GrayImage(8, 4), GrayImage(8, 8), grid);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("amplitude") != std::string::npos);
        }
        try {
            field_from_images(GrayImage(8, 8), GrayImage(4, 8), grid);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("phase") != std::string::npos);
        }
    }
}

TEST_CASE("field_to_images") {
    const GridSpec grid = test::small_grid(8);

    SUBCASE("uniform 1+0i") {
        Field f(grid);
        for (auto& c : f.data()) {
            c = 1.0;
        }
        const auto [amp, phase] = field_to_images(f);
        CHECK(amp == GrayImage(8, 8, 255));
        CHECK(phase == GrayImage(8, 8, 0));
    }
    SUBCASE("uniform i maps to phase level 64") {
        Field f(grid);
        for (auto& c : f.data()) {
            c = complex{0.0, 1.0};
        }
        const auto [amp, phase] = field_to_images(f);
        CHECK(phase == GrayImage(8, 8, 64));
    }
    SUBCASE("fixed scale clamps") {
        Field f(grid);
        for (auto& c : f.data()) {
            c = 0.5;
        }
        f(0, 0) = 2.0;
        const auto [amp, phase] = field_to_images(f, AmplitudeScale::fixed_scale(1.0));
        CHECK(amp(0, 0) == 255);
        CHECK(amp(1, 0) == 128); // 127.5 rounds away from zero
    }
    SUBCASE("all-zero field cannot be max-normalized") {
        CHECK_THROWS_AS(field_to_images(Field(grid)), Error);
    }
}

TEST_CASE("images -> field -> images round trip within one gray level") {
    const GridSpec grid = test::small_grid(32);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        GrayImage amp = random_image(32, 32, seed);
        amp(0, 0) = 255;
        const GrayImage phase = random_image(32, 32, seed + 100);
        const auto [amp2, phase2] = field_to_images(field_from_images(amp, phase, grid));
        for (std::size_t i = 0; i < amp.samples.size(); ++i) {
            CHECK(std::abs(int(amp.samples[i]) - int(amp2.samples[i])) <= 1);
            if (amp.samples[i] > 0) {
                // 255 is 2*pi, which wraps to level 0
                const int expected = phase.samples[i] == 255 ? 0 : phase.samples[i];
                CHECK(std::abs(expected - int(phase2.samples[i])) <= 1);
            }
        }
    }
}

TEST_CASE("PNG and PGM I/O") {
    const GrayImage img = random_image(37, 21, 9);

    SUBCASE("8-bit PNG round trip") {
        const auto path = temp_path("gray.png");
        write_png(path, img);
        CHECK(read_image(path) == img);
    }
    SUBCASE("binary PGM input") {
        const auto path = temp_path("gray.pgm");
        {
            std::ofstream out(path, std::ios::binary);
            out << "P5\n# comment\n37 21\n255\n";
            out.write(reinterpret_cast<const char*>(img.samples.data()), img.samples.size());
        }
        CHECK(read_image(path) == img);
    }
    SUBCASE("1-bit PNG reads back as 0/255") {
        std::vector<std::uint8_t> bits(37 * 21);
        for (std::size_t i = 0; i < bits.size(); ++i) {
            bits[i] = (i * 7) % 3 == 0;
        }
        const auto path = temp_path("mask.png");
        write_bilevel_png(path, 37, 21, bits);
        const GrayImage back = read_image(path);
        for (std::size_t i = 0; i < bits.size(); ++i) {
            CHECK(back.samples[i] == (bits[i] ? 255 : 0));
        }
    }
    SUBCASE("missing file names the path") {
        try {
            read_image(temp_path("nope.png"));
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("nope.png") != std::string::npos);
        }
    }
}

TEST_CASE("nearest-neighbour resampling keeps the gray-level set") {
    const GrayImage img = random_image(10, 6, 4);
    const GrayImage up = resample_nearest(img, 40, 24);
    CHECK(up(0, 0) == img(0, 0));
    CHECK(up(39, 23) == img(9, 5));
    CHECK(up(4, 4) == img(1, 1));
    for (auto v : up.samples) {
        CHECK(std::find(img.samples.begin(), img.samples.end(), v) != img.samples.end());
    }
    CHECK(resample_nearest(img, 10, 6) == img);
}

TEST_CASE("synthetic inputs span the gray range") {
    const GrayImage amp = synthetic_amplitude(128, 128);
    const GrayImage phase = synthetic_phase(128, 128);
    CHECK(*std::max_element(amp.samples.begin(), amp.samples.end()) == 255);
    CHECK(*std::min_element(amp.samples.begin(), amp.samples.end()) <= 2);
    CHECK(phase(0, 0) == 0);
    CHECK(phase(127, 127) > 250);
}
