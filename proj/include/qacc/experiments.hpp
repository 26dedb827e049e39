#pragma once

#include "qacc/channels.hpp"
#include "qacc/measures.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qacc {

enum class Measure { Concurrence, Coherence, Entropy };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One sweep description. Grids must be strictly increasing and inside each
// parameter's domain; the gamma grid is present exactly when a channel is.
struct ScenarioConfig {
    std::vector<double> alpha_grid;
    std::vector<double> r_grid;
    std::vector<double> gamma_grid;
    std::optional<ChannelKind> channel;
    Locality locality = Locality::None;
    GlobalMode global_mode = GlobalMode::LiteralRenormalized;
    MeasureConventions conventions;
    std::vector<Measure> measures;
};

struct SweepRow {
    double alpha = 0.0;
    double r = 0.0;
    std::optional<double> gamma;
    std::string channel;   // "dephasing" | "amplitude" | "none"
    std::string locality;  // "none" | "multi-local" | "global"
    std::optional<double> concurrence;
    std::optional<double> coherence;
    std::optional<double> entropy;
    double pre_norm_trace = 1.0;
    double min_eigenvalue = 0.0;
};

struct SweepTable {
    std::vector<SweepRow> rows;
    ScenarioConfig config;
    std::string tool_version;
};

inline constexpr const char* kCsvHeader =
    "alpha,r,gamma,channel,locality,concurrence,rel_entropy_coherence,"
    "nonlocal_information,pre_norm_trace,min_eigenvalue";

// Fixed pipeline per grid point: build the state at alpha, accelerate both
// parties at r, apply the channel at gamma per the locality, evaluate the
// requested measures. Rows follow grid order: alpha, then r, then gamma.
SweepTable run_scenario(const ScenarioConfig& cfg);

// Named presets fig1..fig8 covering the standard sweep set.
ScenarioConfig figure_preset(const std::string& name);

// Default grids: alpha step 0.1 on [2,5]; 16 evenly spaced r on [0,pi/4];
// gamma step 0.1 on [0,1].
std::vector<double> default_alpha_grid();
std::vector<double> default_r_grid();
std::vector<double> default_gamma_grid();

// Header then one line per row; floats with 12 significant digits; absent
// values left empty.
void emit_csv(const SweepTable& table, const std::string& path);

// Gnuplot script that reads the sibling CSV (same basename, .csv extension,
// resolved relative to the working directory) and renders each measure:
// a surface when two grid axes have at least five points each, line plots
// otherwise. Data-driven; no computed values are embedded.
void emit_plot_script(const SweepTable& table, const std::string& path);

// Parses "x" or "start:stop:step" into a grid.
std::vector<double> parse_range(const std::string& text);

}  // namespace qacc
