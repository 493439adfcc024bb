#include "holo/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>

#include <fmt/format.h>
#include <png.h>

namespace holo {
namespace {

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) {
        throw Error(fmt::format("cannot open '{}'", path.string()));
    }
    return f;
}

std::uint8_t luma601(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return to_gray_level(0.299 * r + 0.587 * g + 0.114 * b);
}

void ignore_warning(png_structp, png_const_charp) {}

GrayImage read_png(const std::filesystem::path& path) {
    auto file = open_file(path, "rb");
    png_byte sig[8];
    if (std::fread(sig, 1, 8, file.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
        throw Error(fmt::format("'{}' is not a PNG file", path.string()));
    }
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, ignore_warning);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("libpng initialisation failed");
    }
    GrayImage image;
    std::vector<png_byte> buffer;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(fmt::format("failed to decode PNG '{}'", path.string()));
    }
    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const auto color = png_get_color_type(png, info);
    const auto depth = png_get_bit_depth(png, info);
    if (depth == 16) {
        png_set_strip_16(png);
    }
    if (color == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
    }
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (png_get_valid(png, info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(png);
    }
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(png);
    }
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));
    const std::size_t rowbytes = png_get_rowbytes(png, info);
    if (rowbytes != static_cast<std::size_t>(width) * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(fmt::format("unsupported PNG layout in '{}'", path.string()));
    }
    buffer.resize(rowbytes * height);
    rows.resize(height);
    for (int y = 0; y < height; ++y) {
        rows[y] = buffer.data() + rowbytes * y;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    image = GrayImage(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const png_byte* px = rows[y] + 3 * x;
            // gray sources arrive as r == g == b and map back to themselves
            image(x, y) = (px[0] == px[1] && px[1] == px[2]) ? px[0] : luma601(px[0], px[1], px[2]);
        }
    }
    return image;
}

int read_pgm_int(std::istream& in) {
    int value = 0;
    in >> std::ws;
    while (in.peek() == '#') {
        std::string comment;
        std::getline(in, comment);
        in >> std::ws;
    }
    if (!(in >> value)) {
        throw Error("malformed PGM header");
    }
    return value;
}

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(fmt::format("cannot open '{}'", path.string()));
    }
    std::string magic(2, '\0');
    in.read(magic.data(), 2);
    if (magic != "P5") {
        throw Error(fmt::format("'{}' is not a binary PGM (P5) file", path.string()));
    }
    const int width = read_pgm_int(in);
    const int height = read_pgm_int(in);
    const int maxval = read_pgm_int(in);
    if (width <= 0 || height <= 0 || maxval <= 0 || maxval > 65535) {
        throw Error(fmt::format("invalid PGM header in '{}'", path.string()));
    }
    in.get(); // single whitespace before the raster
    GrayImage image(width, height);
    const std::size_t n = image.samples.size();
    if (maxval < 256) {
        std::vector<unsigned char> raw(n);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
        if (!in) {
            throw Error(fmt::format("truncated PGM raster in '{}'", path.string()));
        }
        for (std::size_t i = 0; i < n; ++i) {
            image.samples[i] = to_gray_level(255.0 * raw[i] / maxval);
        }
    } else {
        std::vector<unsigned char> raw(2 * n);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(2 * n));
        if (!in) {
            throw Error(fmt::format("truncated PGM raster in '{}'", path.string()));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const int v = (raw[2 * i] << 8) | raw[2 * i + 1];
            image.samples[i] = to_gray_level(255.0 * v / maxval);
        }
    }
    return image;
}

void write_png_rows(const std::filesystem::path& path, int width, int height, int bit_depth,
                    const std::vector<std::vector<png_byte>>& rows) {
    auto file = open_file(path, "wb");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw Error("libpng initialisation failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error(fmt::format("failed to write PNG '{}'", path.string()));
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), bit_depth,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (const auto& row : rows) {
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

} // namespace

std::uint8_t to_gray_level(double value) {
    const double r = std::round(value); // half away from zero
    return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

GrayImage read_image(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) {
        throw Error(fmt::format("missing input file '{}'", path.string()));
    }
    char head[2] = {0, 0};
    {
        std::ifstream probe(path, std::ios::binary);
        probe.read(head, 2);
    }
    if (head[0] == 'P' && head[1] == '5') {
        return read_pgm(path);
    }
    return read_png(path);
}

void write_png(const std::filesystem::path& path, const GrayImage& image) {
    std::vector<std::vector<png_byte>> rows(image.height);
    for (int y = 0; y < image.height; ++y) {
        auto begin = image.samples.begin() + static_cast<std::ptrdiff_t>(y) * image.width;
        rows[y].assign(begin, begin + image.width);
    }
    write_png_rows(path, image.width, image.height, 8, rows);
}

void write_bilevel_png(const std::filesystem::path& path, int width, int height,
                       std::span<const std::uint8_t> bits) {
    if (bits.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw Error("bilevel image size mismatch");
    }
    std::vector<std::vector<png_byte>> rows(height, std::vector<png_byte>((width + 7) / 8, 0));
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (bits[static_cast<std::size_t>(y) * width + x]) {
                rows[y][x / 8] |= static_cast<png_byte>(0x80 >> (x % 8));
            }
        }
    }
    write_png_rows(path, width, height, 1, rows);
}

GrayImage resample_nearest(const GrayImage& image, int width, int height) {
    if (image.width == width && image.height == height) {
        return image;
    }
    if (image.width <= 0 || image.height <= 0 || width <= 0 || height <= 0) {
        throw Error("cannot resample an empty image");
    }
    GrayImage out(width, height);
    for (int y = 0; y < height; ++y) {
        const int sy = static_cast<int>(static_cast<long long>(y) * image.height / height);
        for (int x = 0; x < width; ++x) {
            const int sx = static_cast<int>(static_cast<long long>(x) * image.width / width);
            out(x, y) = image(sx, sy);
        }
    }
    return out;
}

Field field_from_images(const GrayImage& amplitude, const GrayImage& phase, const GridSpec& grid) {
    grid.validate();
    if (amplitude.width != grid.width || amplitude.height != grid.height) {
        throw Error(fmt::format("amplitude image is {}x{}, grid is {}x{}", amplitude.width, amplitude.height,
                                grid.width, grid.height));
    }
    if (phase.width != grid.width || phase.height != grid.height) {
        throw Error(fmt::format("phase image is {}x{}, grid is {}x{}", phase.width, phase.height, grid.width,
                                grid.height));
    }
    std::vector<complex> data(grid.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double a = amplitude.samples[i] / 255.0;
        const double theta = wrap_phase(two_pi * phase.samples[i] / 255.0);
        data[i] = std::polar(a, theta);
    }
    return Field(grid, std::move(data));
}

std::pair<GrayImage, GrayImage> field_to_images(const Field& field, AmplitudeScale scale) {
    if (field.size() == 0) {
        throw Error("cannot render an empty field");
    }
    double denom = scale.scale;
    if (scale.norm == AmplitudeNorm::max) {
        denom = field.max_amplitude();
        if (denom == 0.0) {
            throw Error("cannot max-normalize an all-zero field");
        }
    } else if (!(denom > 0.0)) {
        throw Error("fixed amplitude scale must be positive");
    }
    GrayImage amp(field.width(), field.height());
    GrayImage phase(field.width(), field.height());
    const auto data = field.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        amp.samples[i] = to_gray_level(255.0 * std::abs(data[i]) / denom);
        phase.samples[i] = to_gray_level(255.0 * wrap_phase(std::arg(data[i])) / two_pi);
    }
    return {std::move(amp), std::move(phase)};
}

Plane amplitude_reference(const GrayImage& amplitude) {
    Plane p(amplitude.width, amplitude.height);
    std::transform(amplitude.samples.begin(), amplitude.samples.end(), p.values.begin(),
                   [](std::uint8_t v) { return v / 255.0; });
    return p;
}

Plane phase_reference(const GrayImage& phase) {
    Plane p(phase.width, phase.height);
    std::transform(phase.samples.begin(), phase.samples.end(), p.values.begin(),
                   [](std::uint8_t v) { return wrap_phase(two_pi * v / 255.0); });
    return p;
}

GrayImage synthetic_amplitude(int width, int height) {
    GrayImage img(width, height);
    const double cx = 0.5 * width;
    const double cy = 0.5 * height;
    const double rmax = 0.5 * std::min(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double r = std::hypot(x - cx, y - cy) / rmax;
            // chirp: local frequency grows linearly with radius, ~12 rings to the edge
            const double v = 0.5 + 0.5 * std::cos(std::numbers::pi * 12.0 * r * r);
            img(x, y) = to_gray_level(255.0 * v);
        }
    }
    return img;
}

GrayImage synthetic_phase(int width, int height) {
    GrayImage img(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double t = (static_cast<double>(x) / width + static_cast<double>(y) / height) * 0.5;
            img(x, y) = to_gray_level(255.0 * t);
        }
    }
    return img;
}

} // namespace holo
