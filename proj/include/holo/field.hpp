#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace holo {

using complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Raised for precondition violations and I/O failures across the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sampling geometry shared by every plane of a simulation.
struct GridSpec {
    int width = 1024;
    int height = 1024;
    double pitch = 8e-6;        // meters per pixel
    double wavelength = 532e-9; // meters

    std::size_t size() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }

    /// Throws holo::Error unless dimensions are even and >= 2 and the lengths are positive.
    void validate() const;

    bool operator==(const GridSpec&) const = default;
};

/// Wraps an angle into [0, 2*pi).
double wrap_phase(double radians);

/// A real-valued sample plane, row-major.
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    Plane() = default;
    Plane(int w, int h, double fill = 0.0);
    Plane(int w, int h, std::vector<double> v);

    double& operator()(int x, int y) { return values[index(x, y)]; }
    double operator()(int x, int y) const { return values[index(x, y)]; }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
    std::size_t size() const { return values.size(); }
};

/// Sampled complex optical field.
class Field {
public:
    Field() = default;
    explicit Field(GridSpec grid);
    Field(GridSpec grid, std::vector<complex> data);

    const GridSpec& grid() const { return grid_; }
    int width() const { return grid_.width; }
    int height() const { return grid_.height; }
    std::size_t size() const { return data_.size(); }

    std::span<complex> data() { return data_; }
    std::span<const complex> data() const { return data_; }

    complex& operator()(int x, int y) { return data_[index(x, y)]; }
    const complex& operator()(int x, int y) const { return data_[index(x, y)]; }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * grid_.width + x; }

    double amplitude(int x, int y) const { return std::abs((*this)(x, y)); }
    /// Phase in [0, 2*pi).
    double phase(int x, int y) const { return wrap_phase(std::arg((*this)(x, y))); }

    Plane amplitude_plane() const;
    Plane phase_plane() const;

    double max_amplitude() const;
    double energy() const;
    bool all_finite() const;

private:
    GridSpec grid_;
    std::vector<complex> data_;
};

/// Deterministic pairwise summation.
double pairwise_sum(std::span<const double> values);

} // namespace holo
