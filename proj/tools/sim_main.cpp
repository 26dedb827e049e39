// Command line front end: parameter sweeps, figure presets, the self-check
// suite, and the closed-form cross check.

#include "qacc/experiments.hpp"
#include "qacc/rindler.hpp"
#include "qacc/validation.hpp"
#include "qacc/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

namespace {

std::string self_path() {
    char buf[4096];
    const ssize_t n = ::readlink("/proc/self/exe", buf, sizeof buf - 1);
    if (n <= 0) return "";
    buf[n] = '\0';
    return buf;
}

std::vector<qacc::Measure> parse_measures(const std::string& list) {
    std::vector<qacc::Measure> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "concurrence")
            out.push_back(qacc::Measure::Concurrence);
        else if (item == "coherence" || item == "rel_entropy_coherence")
            out.push_back(qacc::Measure::Coherence);
        else if (item == "entropy" || item == "nonlocal_information")
            out.push_back(qacc::Measure::Entropy);
        else
            throw std::invalid_argument("unknown measure '" + item + "'");
    }
    if (out.empty()) throw std::invalid_argument("empty measure list");
    return out;
}

struct RunOptions {
    std::string alpha, r, gamma;
    std::string channel = "none";
    std::string locality = "none";
    std::string global_mode = "literal";
    std::string measures = "concurrence,coherence,entropy";
    int m_override = 0;
    std::string out = "sweep.csv";
    std::string config;
};

std::string trim(const std::string& s) {
    const std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// Flat key=value file mirroring the run flags. Values given on the command
// line win over the file.
void apply_config_file(const CLI::App& run, RunOptions& opt) {
    std::ifstream in(opt.config);
    if (!in) throw qacc::IoError("cannot open config file " + opt.config);

    const std::map<std::string, std::string*> string_keys = {
        {"alpha", &opt.alpha},         {"r", &opt.r},
        {"gamma", &opt.gamma},         {"channel", &opt.channel},
        {"locality", &opt.locality},   {"global-mode", &opt.global_mode},
        {"measures", &opt.measures},   {"out", &opt.out},
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(opt.config + ":" + std::to_string(line_no) +
                                        ": expected key=value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        const auto it = string_keys.find(key);
        if (it == string_keys.end() && key != "m-override")
            throw std::invalid_argument(opt.config + ":" + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        if (run.get_option("--" + key)->count() > 0) continue;
        if (key == "m-override")
            opt.m_override = std::stoi(value);
        else
            *it->second = value;
    }
}

int do_run(const RunOptions& opt) {
    if (opt.channel != "none" && opt.channel != "dephasing" && opt.channel != "amplitude")
        throw std::invalid_argument("unknown channel '" + opt.channel + "'");
    if (opt.locality != "none" && opt.locality != "multi-local" && opt.locality != "global")
        throw std::invalid_argument("unknown locality '" + opt.locality + "'");
    if (opt.global_mode != "literal" && opt.global_mode != "composed")
        throw std::invalid_argument("unknown global mode '" + opt.global_mode + "'");
    if (opt.m_override < 0) throw std::invalid_argument("m-override must not be negative");
    qacc::ScenarioConfig cfg;
    cfg.alpha_grid =
        opt.alpha.empty() ? qacc::default_alpha_grid() : qacc::parse_range(opt.alpha);
    cfg.r_grid = opt.r.empty() ? qacc::default_r_grid() : qacc::parse_range(opt.r);

    if (opt.channel == "none") {
        if (opt.locality != "none")
            throw std::invalid_argument("--locality needs a --channel");
        if (!opt.gamma.empty())
            throw std::invalid_argument("--gamma needs a --channel");
    } else {
        cfg.channel = opt.channel == "dephasing" ? qacc::ChannelKind::Dephasing
                                                 : qacc::ChannelKind::AmplitudeDamping;
        if (opt.locality == "none")
            throw std::invalid_argument(
                "--channel needs --locality multi-local or global");
        cfg.locality = opt.locality == "global" ? qacc::Locality::Global
                                                : qacc::Locality::MultiLocal;
        cfg.gamma_grid =
            opt.gamma.empty() ? qacc::default_gamma_grid() : qacc::parse_range(opt.gamma);
    }
    cfg.global_mode = opt.global_mode == "composed" ? qacc::GlobalMode::Composed
                                                    : qacc::GlobalMode::LiteralRenormalized;
    if (opt.m_override > 0) cfg.conventions.m_override = opt.m_override;
    cfg.measures = parse_measures(opt.measures);

    const qacc::SweepTable table = qacc::run_scenario(cfg);
    qacc::emit_csv(table, opt.out);
    std::cout << "wrote " << opt.out << " (" << table.rows.size() << " rows)\n";
    return 0;
}

int do_figure(const std::string& name, const std::string& out_dir) {
    const qacc::SweepTable table = qacc::run_scenario(qacc::figure_preset(name));
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw qacc::IoError("cannot create directory " + out_dir + ": " + ec.message());
    const std::filesystem::path dir(out_dir);
    const std::string csv = (dir / (name + ".csv")).string();
    const std::string script = (dir / (name + ".gp")).string();
    qacc::emit_csv(table, csv);
    qacc::emit_plot_script(table, script);
    std::cout << "wrote " << csv << " (" << table.rows.size() << " rows) and " << script
              << "\n";
    return 0;
}

int do_validate() {
    const std::vector<qacc::CheckResult> results = qacc::run_validation_suite(self_path());
    std::size_t passed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const qacc::CheckResult& r = results[i];
        std::printf("[%s] %2zu. %s (%s)\n", r.passed ? "PASS" : "FAIL", i + 1,
                    r.name.c_str(), r.detail.c_str());
        if (r.passed) ++passed;
    }
    std::printf("%zu/%zu checks passed\n", passed, results.size());
    return passed == results.size() ? 0 : 1;
}

int do_crosscheck(double alpha, double r, const std::string& out) {
    const qacc::DiscrepancyReport report =
        qacc::cross_check(qacc::AlphaParameter(alpha), qacc::AccelerationParameter(r));
    if (out.empty()) {
        qacc::emit_csv(report, std::cout);
    } else {
        std::ofstream file(out);
        if (!file) throw qacc::IoError("cannot open " + out);
        qacc::emit_csv(report, file);
        std::cout << "wrote " << out << " (" << report.rows.size() << " discrepancies)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qutrit states under uniform acceleration and noise"};
    app.set_version_flag("--version", qacc::kToolVersion);
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "sweep a parameter grid into a CSV table");
    run->add_option("--config", run_opt.config, "read options from a key=value file");
    run->add_option("--alpha", run_opt.alpha, "alpha value or start:stop:step range");
    run->add_option("--r", run_opt.r, "acceleration value or start:stop:step range");
    run->add_option("--gamma", run_opt.gamma, "noise strength value or start:stop:step range");
    run->add_option("--channel", run_opt.channel, "noise channel")
        ->check(CLI::IsMember({"none", "dephasing", "amplitude"}));
    run->add_option("--locality", run_opt.locality, "how the channel acts")
        ->check(CLI::IsMember({"none", "multi-local", "global"}));
    run->add_option("--global-mode", run_opt.global_mode, "global channel composition rule")
        ->check(CLI::IsMember({"literal", "composed"}));
    run->add_option("--m-override", run_opt.m_override,
                    "override the concurrence dimension factor")
        ->check(CLI::PositiveNumber);
    run->add_option("--measures", run_opt.measures,
                    "comma list from concurrence,coherence,entropy");
    run->add_option("--out", run_opt.out, "output CSV path");

    std::string figure_name;
    std::string figure_dir = ".";
    CLI::App* figure =
        app.add_subcommand("figure", "run a named preset and write its CSV and plot script");
    figure->add_option("name", figure_name, "preset name")
        ->required()
        ->check(CLI::IsMember(
            {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"}));
    figure->add_option("--out", figure_dir, "output directory");

    CLI::App* validate = app.add_subcommand("validate", "run the built-in self checks");

    double cross_alpha = 3.5;
    double cross_r = 0.5;
    std::string cross_out;
    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "compare the closed-form matrix elements with the generic construction");
    crosscheck->add_option("--alpha", cross_alpha, "state parameter")->required();
    crosscheck->add_option("--r", cross_r, "acceleration parameter")->required();
    crosscheck->add_option("--out", cross_out, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            if (!run_opt.config.empty()) apply_config_file(*run, run_opt);
            return do_run(run_opt);
        }
        if (figure->parsed()) return do_figure(figure_name, figure_dir);
        if (validate->parsed()) return do_validate();
        if (crosscheck->parsed()) return do_crosscheck(cross_alpha, cross_r, cross_out);
    } catch (const qacc::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
