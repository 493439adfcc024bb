// NumPy-facing bindings for the core library. Fields are complex128 arrays of shape (height, width).
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holo/beams.hpp"
#include "holo/metrics.hpp"
#include "holo/reconstructor.hpp"
#include "holo/scenario.hpp"

namespace py = pybind11;
using namespace holo;

namespace {

using ComplexArray = py::array_t<complex, py::array::c_style | py::array::forcecast>;
using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using BoolArray = py::array_t<bool, py::array::c_style | py::array::forcecast>;

std::pair<int, int> shape_of(const py::array& a) {
    if (a.ndim() != 2) {
        throw Error("expected a 2-D array of shape (height, width)");
    }
    return {static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0))};
}

Field to_field(const ComplexArray& a, double pitch, double wavelength) {
    const auto [w, h] = shape_of(a);
    const complex* p = a.data();
    return Field(GridSpec{w, h, pitch, wavelength}, std::vector<complex>(p, p + a.size()));
}

Plane to_plane(const RealArray& a) {
    const auto [w, h] = shape_of(a);
    const double* p = a.data();
    return Plane(w, h, std::vector<double>(p, p + a.size()));
}

BinaryMask to_mask(const BoolArray& a) {
    const auto [w, h] = shape_of(a);
    BinaryMask m(w, h);
    std::copy(a.data(), a.data() + a.size(), m.bits.begin());
    return m;
}

ComplexArray from_field(const Field& f) {
    ComplexArray out({f.height(), f.width()});
    std::copy(f.data().begin(), f.data().end(), out.mutable_data());
    return out;
}

RealArray from_values(const std::vector<double>& v, int w, int h) {
    RealArray out({h, w});
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

BoolArray from_mask(const BinaryMask& m) {
    BoolArray out({m.height, m.width});
    std::transform(m.bits.begin(), m.bits.end(), out.mutable_data(), [](std::uint8_t b) { return b != 0; });
    return out;
}

CancelSpec make_cancel(const std::string& kind, std::uint64_t seed) {
    switch (parse_cancel_kind(kind)) {
    case CancelKind::checkerboard:
        return CancelSpec::checkerboard();
    case CancelKind::random:
        return CancelSpec::random(seed);
    case CancelKind::alternate:
        break;
    }
    return CancelSpec::alternate();
}

PropagationSpec make_prop(double distance, const std::string& method, bool band_limit, bool pad) {
    PropagationSpec spec{distance, parse_propagation_method(method), band_limit,
                         pad ? Padding::double_size : Padding::none};
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Phase-only hologram encoding with binarized amplitude";
    py::register_exception<Error>(m, "HoloError", PyExc_ValueError);

    m.def(
        "propagate",
        [](const ComplexArray& field, double distance, double pitch, double wavelength, const std::string& method,
           bool band_limit, bool pad) {
            return from_field(propagate(to_field(field, pitch, wavelength), make_prop(distance, method, band_limit, pad)));
        },
        py::arg("field"), py::arg("distance"), py::arg("pitch") = 8e-6, py::arg("wavelength") = 532e-9,
        py::arg("method") = "asm", py::arg("band_limit") = false, py::arg("pad") = false,
        "Propagate a complex field by `distance` meters.");

    m.def(
        "spectrum_filter",
        [](const ComplexArray& field, double fraction, const std::string& shape) {
            return from_field(spectrum_filter(to_field(field, 8e-6, 532e-9), {parse_aperture_shape(shape), fraction}));
        },
        py::arg("field"), py::arg("fraction") = 0.125, py::arg("shape") = "circle",
        "Low-pass the field with a DC-centred aperture.");

    m.def(
        "binarize",
        [](const RealArray& amplitude, const std::string& kernel) {
            return from_mask(binarize(to_plane(amplitude), DitherKernel::make(parse_kernel_name(kernel))));
        },
        py::arg("amplitude"), py::arg("kernel") = "fs", "Error-diffusion binarization of a [0, 1] plane.");

    m.def(
        "canceling_phase",
        [](const BoolArray& mask, const std::string& kind, std::uint64_t seed) {
            const Plane p = canceling_phase(to_mask(mask), make_cancel(kind, seed));
            return from_values(p.values, p.width, p.height);
        },
        py::arg("mask"), py::arg("kind") = "alternate", py::arg("seed") = 1);

    m.def(
        "encode_proposed",
        [](const ComplexArray& field, const std::string& kernel, const std::string& cancel, std::uint64_t seed,
           const std::string& scale) {
            const auto enc = encode_proposed(to_field(field, 8e-6, 532e-9), DitherKernel::make(parse_kernel_name(kernel)),
                                             make_cancel(cancel, seed), parse_binarize_scale(scale));
            return py::make_tuple(from_values(enc.hologram.phase, enc.mask.width, enc.mask.height),
                                  from_mask(enc.mask));
        },
        py::arg("field"), py::arg("kernel") = "fs", py::arg("cancel") = "alternate", py::arg("seed") = 1,
        py::arg("scale") = "unit", "Returns (phase, mask).");

    m.def(
        "encode_dph",
        [](const ComplexArray& field) {
            const Field f = to_field(field, 8e-6, 532e-9);
            return from_values(encode_dph(f).phase, f.width(), f.height());
        },
        py::arg("field"));

    m.def(
        "encode_naive",
        [](const ComplexArray& field) {
            const Field f = to_field(field, 8e-6, 532e-9);
            return from_values(encode_naive(f).phase, f.width(), f.height());
        },
        py::arg("field"));

    m.def(
        "reconstruct",
        [](const RealArray& phase, double distance, double pitch, double wavelength, double aperture,
           const std::string& shape, const std::string& method) {
            const auto [w, h] = shape_of(phase);
            PhaseHologram holo{GridSpec{w, h, pitch, wavelength},
                               std::vector<double>(phase.data(), phase.data() + phase.size())};
            return from_field(
                reconstruct(holo, make_prop(distance, method, false, false), {parse_aperture_shape(shape), aperture}));
        },
        py::arg("phase"), py::arg("distance"), py::arg("pitch") = 8e-6, py::arg("wavelength") = 532e-9,
        py::arg("aperture") = 0.125, py::arg("shape") = "circle", py::arg("method") = "asm",
        "Simulated 4f reconstruction; `distance` is the encoding distance.");

    m.def(
        "psnr",
        [](const RealArray& test, const RealArray& reference, double peak) {
            return psnr(to_plane(test), to_plane(reference), peak);
        },
        py::arg("test"), py::arg("reference"), py::arg("peak"));

    m.def(
        "light_efficiency",
        [](const ComplexArray& numerator, const ComplexArray& denominator) {
            return light_efficiency(to_field(numerator, 8e-6, 532e-9), to_field(denominator, 8e-6, 532e-9));
        },
        py::arg("numerator"), py::arg("denominator"));

    m.def(
        "hermite_gaussian",
        [](int width, int height, int m_order, int n_order, std::optional<double> waist, double pitch) {
            return from_field(hermite_gaussian(GridSpec{width, height, pitch, 532e-9}, {m_order, n_order, waist}));
        },
        py::arg("width"), py::arg("height"), py::arg("m") = 9, py::arg("n") = 7, py::arg("waist") = py::none(),
        py::arg("pitch") = 8e-6);

    m.def(
        "_run_scenario_json",
        [](const std::string& name, int width, int height, std::optional<double> distance, bool synthetic,
           const std::string& data_dir, const std::string& out_dir, const std::string& cancel, std::uint64_t seed,
           const std::string& kernel, double aperture, const std::string& binarize_scale) {
            Config cfg;
            cfg.grid.width = width;
            cfg.grid.height = height;
            cfg.distance = distance;
            cfg.synthetic = synthetic;
            cfg.data_dir = data_dir;
            cfg.out_dir = out_dir;
            cfg.cancel = parse_cancel_kind(cancel);
            cfg.seed = seed;
            cfg.kernel = parse_kernel_name(kernel);
            cfg.aperture.fraction = aperture;
            cfg.binarize_scale = parse_binarize_scale(binarize_scale);
            py::gil_scoped_release release;
            return run_scenario(parse_scenario_name(name), cfg).to_json().dump();
        },
        py::arg("name"), py::arg("width"), py::arg("height"), py::arg("distance"), py::arg("synthetic"),
        py::arg("data_dir"), py::arg("out_dir"), py::arg("cancel"), py::arg("seed"), py::arg("kernel"),
        py::arg("aperture"), py::arg("binarize_scale"));
}
