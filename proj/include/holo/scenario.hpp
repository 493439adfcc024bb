#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "holo/binarizer.hpp"
#include "holo/encoder.hpp"
#include "holo/propagation.hpp"

namespace holo {

enum class ScenarioName { fig1, fig3, fig4, fig7 };

ScenarioName parse_scenario_name(std::string_view name);
std::string to_string(ScenarioName name);

/// Full effective configuration of a run. Every field is echoed into reports.
struct Config {
    GridSpec grid;
    std::optional<double> distance; // meters; scenario default when unset (0.2 m, or 0.05 m for fig7)
    PropagationMethod propagation = PropagationMethod::angular_spectrum;
    bool band_limit = false;
    Padding padding = Padding::none;
    ApertureSpec aperture;
    KernelName kernel = KernelName::floyd_steinberg;
    CancelKind cancel = CancelKind::alternate;
    std::uint64_t seed = 1;
    BinarizeScale binarize_scale = BinarizeScale::unit;
    std::optional<double> waist; // fig7 beam waist, meters

    std::filesystem::path amp_path;   // empty: scenario default inside data_dir
    std::filesystem::path phase_path; // empty: scenario default inside data_dir
    std::filesystem::path data_dir = "data";
    bool synthetic = false; // use the built-in chirp/ramp inputs instead of files

    std::filesystem::path out_dir; // empty: no files written

    double effective_distance(ScenarioName scenario) const;
    PropagationSpec propagation_spec(ScenarioName scenario) const;
    CancelSpec cancel_spec(CancelKind kind) const;
    nlohmann::ordered_json to_json(ScenarioName scenario) const;
};

/// Quality and efficiency figures of one encoding method within a scenario.
struct ScenarioReport {
    std::string scenario;
    std::string method;
    std::optional<std::string> cancel;
    std::optional<std::uint64_t> seed;
    double amp_psnr_db = 0.0;
    double phase_psnr_db = 0.0;
    double amp_psnr_8bit_db = 0.0;
    double phase_psnr_8bit_db = 0.0;
    double eta = 0.0;    // object-plane energy relative to the DPH reconstruction
    double energy = 0.0; // total squared amplitude in the object plane
    std::optional<double> mask_density;
    std::vector<std::string> files;
    nlohmann::ordered_json config;

    nlohmann::ordered_json to_json() const;
};

struct ScenarioResult {
    ScenarioName name;
    nlohmann::ordered_json config;
    std::vector<ScenarioReport> reports;

    const ScenarioReport& report(std::string_view method) const;
    nlohmann::ordered_json to_json() const;
};

/// Runs a named experiment end to end and, when config.out_dir is set, writes
/// <scenario>_<method>_{amp,phase,hologram,mask}.png, per-method JSON and report.json.
ScenarioResult run_scenario(ScenarioName name, const Config& config);

enum class SweepAxis { size, distance };

SweepAxis parse_sweep_axis(std::string_view name);
std::string to_string(SweepAxis axis);

struct SweepRow {
    SweepAxis axis;
    double value;
    std::string method;
    int width;
    int height;
    double distance;
    double amp_psnr_db;
    double phase_psnr_db;
    double eta;
};

/// Repeats the fig3 pipeline (proposed + DPH) for each value; inputs are resampled
/// nearest-neighbour to each size. Values are validated before any computation.
std::vector<SweepRow> run_sweep(SweepAxis axis, const std::vector<double>& values, const Config& base);

std::string sweep_csv_header();
std::string to_csv_row(const SweepRow& row);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows);

/// Formats a PSNR for text output; the identical-image sentinel prints as "inf".
std::string format_db(double db);

} // namespace holo
