#include "holo/scenario.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "holo/beams.hpp"
#include "holo/image.hpp"
#include "holo/metrics.hpp"
#include "holo/reconstructor.hpp"

namespace holo {
namespace {

using json = nlohmann::ordered_json;

json db_value(double db) {
    if (std::isinf(db)) {
        return db > 0 ? "inf" : "-inf";
    }
    return db;
}

struct RawInputs {
    GrayImage amplitude;
    GrayImage phase;
    std::string amp_label;
    std::string phase_label;
};

std::pair<const char*, const char*> default_inputs(ScenarioName name) {
    if (name == ScenarioName::fig4) {
        return {"cameraman.png", "house.png"};
    }
    return {"mandrill.png", "peppers.png"};
}

RawInputs load_inputs(ScenarioName name, const Config& cfg) {
    RawInputs in;
    if (name == ScenarioName::fig7) {
        in.amp_label = "hermite_gaussian:TEM97";
        in.phase_label = "hermite_gaussian:TEM97";
        return in;
    }
    if (cfg.synthetic) {
        in.amplitude = synthetic_amplitude(cfg.grid.width, cfg.grid.height);
        in.phase = synthetic_phase(cfg.grid.width, cfg.grid.height);
        in.amp_label = "synthetic:radial_chirp";
        in.phase_label = "synthetic:linear_ramp";
        return in;
    }
    const auto [amp_default, phase_default] = default_inputs(name);
    const auto amp_path = cfg.amp_path.empty() ? cfg.data_dir / amp_default : cfg.amp_path;
    const auto phase_path = cfg.phase_path.empty() ? cfg.data_dir / phase_default : cfg.phase_path;
    try {
        in.amplitude = read_image(amp_path);
        in.phase = read_image(phase_path);
    } catch (const Error& e) {
        throw Error(fmt::format("scenario {}: {}", to_string(name), e.what()));
    }
    in.amp_label = amp_path.string();
    in.phase_label = phase_path.string();
    return in;
}

struct Target {
    Field object;
    Plane ref_amplitude;
    Plane ref_phase;
};

Target make_target(ScenarioName name, const Config& cfg, const RawInputs& raw) {
    if (name == ScenarioName::fig7) {
        BeamSpec beam;
        beam.waist = cfg.waist;
        Field object = hermite_gaussian(cfg.grid, beam);
        Plane amp = object.amplitude_plane();
        Plane phase = object.phase_plane();
        return {std::move(object), std::move(amp), std::move(phase)};
    }
    const GrayImage amp = resample_nearest(raw.amplitude, cfg.grid.width, cfg.grid.height);
    const GrayImage phase = resample_nearest(raw.phase, cfg.grid.width, cfg.grid.height);
    return {field_from_images(amp, phase, cfg.grid), amplitude_reference(amp), phase_reference(phase)};
}

struct Evaluated {
    std::string method;
    std::optional<CancelKind> cancel;
    std::optional<PhaseHologram> hologram;
    std::optional<BinaryMask> mask;
    Field reconstruction;
};

Evaluated evaluate_proposed(const Field& holo_field, const Config& cfg, const PropagationSpec& prop,
                            CancelKind cancel, std::string label) {
    auto enc = encode_proposed(holo_field, DitherKernel::make(cfg.kernel), cfg.cancel_spec(cancel),
                               cfg.binarize_scale);
    Field recon = reconstruct(enc.hologram, prop, cfg.aperture);
    return {std::move(label), cancel, std::move(enc.hologram), std::move(enc.mask), std::move(recon)};
}

Evaluated evaluate_phase_only(PhaseHologram h, const Config& cfg, const PropagationSpec& prop, std::string label) {
    Field recon = reconstruct(h, prop, cfg.aperture);
    return {std::move(label), std::nullopt, std::move(h), std::nullopt, std::move(recon)};
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(fmt::format("cannot write '{}'", path.string()));
    }
    out << j.dump(2) << '\n';
}

std::vector<std::string> write_outputs(const Config& cfg, ScenarioName name, const Evaluated& ev) {
    std::vector<std::string> files;
    const auto stem = fmt::format("{}_{}", to_string(name), ev.method);
    const auto [amp, phase] = field_to_images(ev.reconstruction, AmplitudeScale::by_max());
    const auto emit = [&](const std::string& suffix) {
        const auto file = fmt::format("{}_{}.png", stem, suffix);
        files.push_back(file);
        return cfg.out_dir / file;
    };
    write_png(emit("amp"), amp);
    write_png(emit("phase"), phase);
    if (ev.hologram) {
        write_png(emit("hologram"), ev.hologram->to_image());
    }
    if (ev.mask) {
        write_mask_png(emit("mask"), *ev.mask);
    }
    return files;
}

ScenarioResult run_pipeline(ScenarioName name, const Config& cfg, const RawInputs& raw) {
    cfg.grid.validate();
    cfg.aperture.validate();
    const PropagationSpec prop = cfg.propagation_spec(name);

    json config_echo = cfg.to_json(name);
    config_echo["amp_input"] = raw.amp_label;
    config_echo["phase_input"] = raw.phase_label;

    const Target target = make_target(name, cfg, raw);
    const Field holo_field = propagate(target.object, prop);

    std::vector<Evaluated> runs;
    Evaluated dph = evaluate_phase_only(encode_dph(holo_field), cfg, prop, "dph");
    switch (name) {
    case ScenarioName::fig1:
        for (auto kind : {CancelKind::checkerboard, CancelKind::random, CancelKind::alternate}) {
            runs.push_back(evaluate_proposed(holo_field, cfg, prop, kind, "proposed-" + to_string(kind)));
        }
        break;
    case ScenarioName::fig3:
    case ScenarioName::fig4:
        runs.push_back(evaluate_proposed(holo_field, cfg, prop, cfg.cancel, "proposed"));
        runs.push_back(dph);
        break;
    case ScenarioName::fig7:
        runs.push_back(evaluate_phase_only(encode_naive(holo_field), cfg, prop, "naive"));
        runs.push_back({"complex", std::nullopt, std::nullopt, std::nullopt,
                        reconstruct_field(holo_field, prop, cfg.aperture)});
        runs.push_back(dph);
        runs.push_back(evaluate_proposed(holo_field, cfg, prop, cfg.cancel, "proposed"));
        break;
    }

    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
    }

    ScenarioResult result{name, config_echo, {}};
    const double dph_energy = dph.reconstruction.energy();
    for (const auto& ev : runs) {
        ScenarioReport r;
        r.scenario = to_string(name);
        r.method = ev.method;
        if (ev.cancel) {
            r.cancel = to_string(*ev.cancel);
            if (*ev.cancel == CancelKind::random) {
                r.seed = cfg.seed;
            }
        }
        r.amp_psnr_db = amplitude_psnr(ev.reconstruction, target.ref_amplitude);
        r.phase_psnr_db = phase_psnr(ev.reconstruction, target.ref_phase);
        r.amp_psnr_8bit_db = amplitude_psnr_8bit(ev.reconstruction, target.ref_amplitude);
        r.phase_psnr_8bit_db = phase_psnr_8bit(ev.reconstruction, target.ref_phase);
        r.energy = ev.reconstruction.energy();
        r.eta = r.energy / dph_energy;
        if (ev.mask) {
            r.mask_density = mask_density(*ev.mask);
        }
        r.config = config_echo;
        if (!cfg.out_dir.empty()) {
            r.files = write_outputs(cfg, name, ev);
            const auto report_file = fmt::format("{}_{}_report.json", to_string(name), ev.method);
            r.files.push_back(report_file);
            write_json(cfg.out_dir / report_file, r.to_json());
        }
        result.reports.push_back(std::move(r));
    }
    if (!cfg.out_dir.empty()) {
        write_json(cfg.out_dir / "report.json", result.to_json());
    }
    return result;
}

} // namespace

ScenarioName parse_scenario_name(std::string_view name) {
    if (name == "fig1") {
        return ScenarioName::fig1;
    }
    if (name == "fig3") {
        return ScenarioName::fig3;
    }
    if (name == "fig4") {
        return ScenarioName::fig4;
    }
    if (name == "fig7") {
        return ScenarioName::fig7;
    }
    throw Error(fmt::format("unknown scenario '{}' (expected fig1, fig3, fig4 or fig7)", name));
}

std::string to_string(ScenarioName name) {
    switch (name) {
    case ScenarioName::fig1:
        return "fig1";
    case ScenarioName::fig3:
        return "fig3";
    case ScenarioName::fig4:
        return "fig4";
    case ScenarioName::fig7:
        return "fig7";
    }
    return "unknown";
}

double Config::effective_distance(ScenarioName scenario) const {
    if (distance) {
        return *distance;
    }
    return scenario == ScenarioName::fig7 ? 0.05 : 0.2;
}

PropagationSpec Config::propagation_spec(ScenarioName scenario) const {
    return {effective_distance(scenario), propagation, band_limit, padding};
}

CancelSpec Config::cancel_spec(CancelKind kind) const {
    switch (kind) {
    case CancelKind::checkerboard:
        return CancelSpec::checkerboard();
    case CancelKind::random:
        return CancelSpec::random(seed);
    case CancelKind::alternate:
        break;
    }
    return CancelSpec::alternate();
}

nlohmann::ordered_json Config::to_json(ScenarioName scenario) const {
    json j;
    j["width"] = grid.width;
    j["height"] = grid.height;
    j["pitch_m"] = grid.pitch;
    j["wavelength_m"] = grid.wavelength;
    j["distance_m"] = effective_distance(scenario);
    j["propagation"] = to_string(propagation);
    j["band_limit"] = band_limit;
    j["padding"] = padding == Padding::double_size ? "double" : "none";
    j["aperture_fraction"] = aperture.fraction;
    j["aperture_shape"] = to_string(aperture.shape);
    j["kernel"] = to_string(kernel);
    j["cancel"] = to_string(cancel);
    j["seed"] = seed;
    j["binarize_scale"] = to_string(binarize_scale);
    if (scenario == ScenarioName::fig7) {
        BeamSpec beam;
        beam.waist = waist;
        j["beam_mode"] = fmt::format("TEM{}{}", beam.m, beam.n);
        j["waist_m"] = beam.waist_for(grid);
    }
    return j;
}

nlohmann::ordered_json ScenarioReport::to_json() const {
    json j;
    j["scenario"] = scenario;
    j["method"] = method;
    j["cancel"] = cancel ? json(*cancel) : json(nullptr);
    j["seed"] = seed ? json(*seed) : json(nullptr);
    j["amp_psnr_db"] = db_value(amp_psnr_db);
    j["phase_psnr_db"] = db_value(phase_psnr_db);
    j["amp_psnr_8bit_db"] = db_value(amp_psnr_8bit_db);
    j["phase_psnr_8bit_db"] = db_value(phase_psnr_8bit_db);
    j["eta"] = eta;
    j["energy"] = energy;
    j["mask_density"] = mask_density ? json(*mask_density) : json(nullptr);
    j["config"] = config;
    j["files"] = files;
    return j;
}

const ScenarioReport& ScenarioResult::report(std::string_view method) const {
    for (const auto& r : reports) {
        if (r.method == method) {
            return r;
        }
    }
    throw Error(fmt::format("scenario {} has no '{}' report", to_string(name), method));
}

nlohmann::ordered_json ScenarioResult::to_json() const {
    json j;
    j["scenario"] = to_string(name);
    j["config"] = config;
    json reps = json::array();
    for (const auto& r : reports) {
        reps.push_back(r.to_json());
    }
    j["reports"] = std::move(reps);
    return j;
}

ScenarioResult run_scenario(ScenarioName name, const Config& config) {
    return run_pipeline(name, config, load_inputs(name, config));
}

SweepAxis parse_sweep_axis(std::string_view name) {
    if (name == "size") {
        return SweepAxis::size;
    }
    if (name == "distance") {
        return SweepAxis::distance;
    }
    throw Error(fmt::format("unknown sweep axis '{}' (expected size or distance)", name));
}

std::string to_string(SweepAxis axis) {
    return axis == SweepAxis::size ? "size" : "distance";
}

std::vector<SweepRow> run_sweep(SweepAxis axis, const std::vector<double>& values, const Config& base) {
    if (values.empty()) {
        throw Error("sweep needs at least one value");
    }
    for (double v : values) {
        if (axis == SweepAxis::size) {
            if (!(v >= 128) || v != std::floor(v) || static_cast<long long>(v) % 2 != 0 || v > 1 << 16) {
                throw Error(fmt::format("sweep size {} must be an even integer >= 128", v));
            }
        } else if (!(v > 0.0) || !std::isfinite(v)) {
            throw Error(fmt::format("sweep distance {} must be positive", v));
        }
    }

    Config first = base;
    if (axis == SweepAxis::size) {
        first.grid.width = first.grid.height = static_cast<int>(values.front());
    }
    // synthetic inputs are generated at the grid size; files are loaded once and resampled per point
    const RawInputs raw_once = base.synthetic ? RawInputs{} : load_inputs(ScenarioName::fig3, first);

    std::vector<SweepRow> rows;
    for (double v : values) {
        Config cfg = base;
        cfg.out_dir.clear();
        if (axis == SweepAxis::size) {
            cfg.grid.width = cfg.grid.height = static_cast<int>(v);
        } else {
            cfg.distance = v;
        }
        const RawInputs raw = base.synthetic ? load_inputs(ScenarioName::fig3, cfg) : raw_once;
        const auto result = run_pipeline(ScenarioName::fig3, cfg, raw);
        for (const auto& r : result.reports) {
            rows.push_back({axis, v, r.method, cfg.grid.width, cfg.grid.height,
                            cfg.effective_distance(ScenarioName::fig3), r.amp_psnr_db, r.phase_psnr_db, r.eta});
        }
    }
    return rows;
}

std::string format_db(double db) {
    if (std::isinf(db)) {
        return db > 0 ? "inf" : "-inf";
    }
    return fmt::format("{}", db);
}

std::string sweep_csv_header() {
    return "axis,value,method,width,height,distance_m,amp_psnr_db,phase_psnr_db,eta";
}

std::string to_csv_row(const SweepRow& row) {
    return fmt::format("{},{},{},{},{},{},{},{},{}", to_string(row.axis), row.value, row.method, row.width,
                       row.height, row.distance, format_db(row.amp_psnr_db), format_db(row.phase_psnr_db), row.eta);
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(fmt::format("cannot write '{}'", path.string()));
    }
    out << sweep_csv_header() << '\n';
    for (const auto& row : rows) {
        out << to_csv_row(row) << '\n';
    }
}

} // namespace holo
