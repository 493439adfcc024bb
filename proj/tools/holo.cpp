// holo: phase-only hologram encoding, simulated reconstruction and the standard experiments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "holo/encoder.hpp"
#include "holo/image.hpp"
#include "holo/metrics.hpp"
#include "holo/propagation.hpp"
#include "holo/reconstructor.hpp"
#include "holo/scenario.hpp"

namespace {

struct Options {
    holo::Config cfg;
    std::string method = "proposed";
    std::string cancel = "alternate";
    std::string kernel = "fs";
    std::string aperture_shape = "circle";
    std::string propagation = "asm";
    std::string binarize_scale = "unit";
    double distance = 0.0;
    double waist = 0.0;
    bool pad = false;
    std::string amp;
    std::string phase;
    std::string data_dir = "data";
    std::string out = "out";
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--amp", o.amp, "Amplitude image (PNG or PGM)");
    cmd->add_option("--phase", o.phase, "Phase image (PNG or PGM)");
    cmd->add_option("--data-dir", o.data_dir, "Directory with mandrill/peppers/cameraman/house PNGs")
        ->capture_default_str();
    cmd->add_flag("--synthetic", o.cfg.synthetic, "Use built-in chirp/ramp inputs instead of image files");
    cmd->add_option("--width", o.cfg.grid.width, "Grid width in pixels")->capture_default_str();
    cmd->add_option("--height", o.cfg.grid.height, "Grid height in pixels")->capture_default_str();
    cmd->add_option("--pitch", o.cfg.grid.pitch, "Pixel pitch in meters")->capture_default_str();
    cmd->add_option("--wavelength", o.cfg.grid.wavelength, "Wavelength in meters")->capture_default_str();
    cmd->add_option("--distance", o.distance, "Object-to-hologram distance in meters (scenario default if unset)");
    cmd->add_option("--propagation", o.propagation, "asm|fresnel")->capture_default_str();
    cmd->add_option("--cancel", o.cancel, "checkerboard|random|alternate")->capture_default_str();
    cmd->add_option("--seed", o.cfg.seed, "Seed for the random canceling wave")->capture_default_str();
    cmd->add_option("--kernel", o.kernel, "fs|jjn|stucki|burkes")->capture_default_str();
    cmd->add_option("--binarize-scale", o.binarize_scale, "unit|max")->capture_default_str();
    cmd->add_option("--aperture", o.cfg.aperture.fraction, "4f aperture size as a fraction of the grid")
        ->capture_default_str();
    cmd->add_option("--aperture-shape", o.aperture_shape, "circle|square")->capture_default_str();
    cmd->add_flag("--pad", o.pad, "Zero-pad to double size during propagation");
    cmd->add_flag("--band-limit", o.cfg.band_limit, "Band-limit the transfer function");
    cmd->add_option("--waist", o.waist, "Hermite-Gaussian waist in meters (fig7)");
    cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
}

void finalize(Options& o, CLI::App* cmd) {
    auto& c = o.cfg;
    if (cmd->count("--distance") > 0) {
        c.distance = o.distance;
    }
    if (cmd->count("--waist") > 0) {
        c.waist = o.waist;
    }
    c.propagation = holo::parse_propagation_method(o.propagation);
    c.cancel = holo::parse_cancel_kind(o.cancel);
    c.kernel = holo::parse_kernel_name(o.kernel);
    c.binarize_scale = holo::parse_binarize_scale(o.binarize_scale);
    c.aperture.shape = holo::parse_aperture_shape(o.aperture_shape);
    c.padding = o.pad ? holo::Padding::double_size : holo::Padding::none;
    c.amp_path = o.amp;
    c.phase_path = o.phase;
    c.data_dir = o.data_dir;
    c.out_dir = o.out;
    c.grid.validate();
    c.aperture.validate();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw holo::Error(fmt::format("cannot write '{}'", path.string()));
    }
    out << text;
}

std::pair<holo::GrayImage, holo::GrayImage> load_pair(const Options& o) {
    const auto& c = o.cfg;
    if (c.synthetic) {
        return {holo::synthetic_amplitude(c.grid.width, c.grid.height),
                holo::synthetic_phase(c.grid.width, c.grid.height)};
    }
    if (o.amp.empty() || o.phase.empty()) {
        throw holo::Error("--amp and --phase are required (or pass --synthetic)");
    }
    return {holo::resample_nearest(holo::read_image(o.amp), c.grid.width, c.grid.height),
            holo::resample_nearest(holo::read_image(o.phase), c.grid.width, c.grid.height)};
}

int run_encode(const Options& o) {
    const auto& c = o.cfg;
    const auto [amp, phase] = load_pair(o);
    const auto prop = c.propagation_spec(holo::ScenarioName::fig3);
    const holo::Field holo_field = holo::propagate(holo::field_from_images(amp, phase, c.grid), prop);

    std::filesystem::create_directories(c.out_dir);
    nlohmann::ordered_json report;
    report["command"] = "encode";
    report["method"] = o.method;
    report["config"] = c.to_json(holo::ScenarioName::fig3);
    const auto stem = c.out_dir / fmt::format("encode_{}", o.method);
    if (o.method == "proposed") {
        const auto enc = holo::encode_proposed(holo_field, holo::DitherKernel::make(c.kernel),
                                               c.cancel_spec(c.cancel), c.binarize_scale);
        holo::write_png(stem.string() + "_hologram.png", enc.hologram.to_image());
        holo::write_mask_png(stem.string() + "_mask.png", enc.mask);
        report["mask_density"] = holo::mask_density(enc.mask);
    } else if (o.method == "dph") {
        holo::write_png(stem.string() + "_hologram.png", holo::encode_dph(holo_field).to_image());
    } else if (o.method == "naive") {
        holo::write_png(stem.string() + "_hologram.png", holo::encode_naive(holo_field).to_image());
    } else {
        throw holo::Error(fmt::format("unknown method '{}' (expected proposed, dph or naive)", o.method));
    }
    write_text(c.out_dir / "report.json", report.dump(2) + "\n");
    std::printf("wrote %s_hologram.png\n", stem.string().c_str());
    return 0;
}

int run_reconstruct(const Options& o, const std::string& hologram_path) {
    const auto& c = o.cfg;
    const auto image = holo::resample_nearest(holo::read_image(hologram_path), c.grid.width, c.grid.height);
    const auto hologram = holo::PhaseHologram::from_image(image, c.grid);
    const auto recon = holo::reconstruct(hologram, c.propagation_spec(holo::ScenarioName::fig3), c.aperture);

    std::filesystem::create_directories(c.out_dir);
    const auto [amp, phase] = holo::field_to_images(recon);
    holo::write_png(c.out_dir / "reconstruct_amp.png", amp);
    holo::write_png(c.out_dir / "reconstruct_phase.png", phase);

    nlohmann::ordered_json report;
    report["command"] = "reconstruct";
    report["hologram"] = hologram_path;
    report["config"] = c.to_json(holo::ScenarioName::fig3);
    report["energy"] = recon.energy();
    if (!o.amp.empty() && !o.phase.empty()) {
        const auto ref_amp = holo::resample_nearest(holo::read_image(o.amp), c.grid.width, c.grid.height);
        const auto ref_phase = holo::resample_nearest(holo::read_image(o.phase), c.grid.width, c.grid.height);
        const double a = holo::amplitude_psnr(recon, holo::amplitude_reference(ref_amp));
        const double p = holo::phase_psnr(recon, holo::phase_reference(ref_phase));
        report["amp_psnr_db"] = holo::format_db(a);
        report["phase_psnr_db"] = holo::format_db(p);
        std::printf("amplitude PSNR %s dB, phase PSNR %s dB\n", holo::format_db(a).c_str(),
                    holo::format_db(p).c_str());
    }
    write_text(c.out_dir / "report.json", report.dump(2) + "\n");
    return 0;
}

int run_scenario(const Options& o, const std::string& name) {
    const auto scenario = holo::parse_scenario_name(name);
    const auto result = holo::run_scenario(scenario, o.cfg);
    for (const auto& r : result.reports) {
        std::printf("%-24s amp %8s dB  phase %8s dB  eta %.4f\n", r.method.c_str(),
                    fmt::format("{:.2f}", r.amp_psnr_db).c_str(), fmt::format("{:.2f}", r.phase_psnr_db).c_str(),
                    r.eta);
    }
    return 0;
}

int run_sweep(const Options& o, const std::string& axis_name, const std::vector<double>& values) {
    const auto axis = holo::parse_sweep_axis(axis_name);
    const auto rows = holo::run_sweep(axis, values, o.cfg);
    const auto path = o.cfg.out_dir / "sweep.csv";
    holo::write_sweep_csv(path, rows);
    std::printf("%s\n", holo::sweep_csv_header().c_str());
    for (const auto& row : rows) {
        std::printf("%s\n", holo::to_csv_row(row).c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase-only hologram encoding with binarized amplitude"};
    app.require_subcommand(1);

    Options enc_opts, rec_opts, scen_opts, sweep_opts;

    auto* encode = app.add_subcommand("encode", "Encode an amplitude/phase image pair as a phase-only hologram");
    add_common(encode, enc_opts);
    encode->add_option("--method", enc_opts.method, "proposed|dph|naive")->capture_default_str();

    std::string hologram_path;
    auto* reconstruct = app.add_subcommand("reconstruct", "Simulate the 4f reconstruction of a hologram PNG");
    add_common(reconstruct, rec_opts);
    reconstruct->add_option("--hologram", hologram_path, "8-bit phase hologram PNG")->required();

    std::string scenario_name;
    auto* scenario = app.add_subcommand("scenario", "Run a named experiment: fig1, fig3, fig4, fig7");
    add_common(scenario, scen_opts);
    scenario->add_option("name", scenario_name, "fig1|fig3|fig4|fig7")->required();

    std::string axis;
    std::vector<double> values;
    auto* sweep = app.add_subcommand("sweep", "Sweep hologram size or propagation distance");
    add_common(sweep, sweep_opts);
    sweep->add_option("--axis", axis, "size|distance")->required();
    sweep->add_option("--values", values, "Comma-separated sweep values")->required()->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (*encode) {
            finalize(enc_opts, encode);
            return run_encode(enc_opts);
        }
        if (*reconstruct) {
            finalize(rec_opts, reconstruct);
            return run_reconstruct(rec_opts, hologram_path);
        }
        if (*scenario) {
            finalize(scen_opts, scenario);
            return run_scenario(scen_opts, scenario_name);
        }
        if (*sweep) {
            finalize(sweep_opts, sweep);
            return run_sweep(sweep_opts, axis, values);
        }
    } catch (const holo::Error& e) {
        std::fprintf(stderr, "holo: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "holo: %s\n", e.what());
        return 1;
    }
    return 0;
}
