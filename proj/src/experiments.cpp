#include "qacc/experiments.hpp"

#include "qacc/rindler.hpp"
#include "qacc/version.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qacc {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

void require_increasing(const std::vector<double>& grid, const char* name) {
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::invalid_argument(std::string(name) + " grid must be strictly increasing");
}

void validate_config(const ScenarioConfig& cfg) {
    require_increasing(cfg.alpha_grid, "alpha");
    require_increasing(cfg.r_grid, "r");
    require_increasing(cfg.gamma_grid, "gamma");
    for (double a : cfg.alpha_grid) AlphaParameter{a};
    for (double r : cfg.r_grid) AccelerationParameter{r};
    for (double g : cfg.gamma_grid) NoiseStrength{g};
    if (cfg.channel.has_value()) {
        if (cfg.locality == Locality::None)
            throw std::invalid_argument("a channel requires a locality of multi-local or global");
        if (cfg.gamma_grid.empty())
            throw std::invalid_argument("a channel requires a gamma grid");
    } else {
        if (cfg.locality != Locality::None)
            throw std::invalid_argument("a locality requires a channel");
        if (!cfg.gamma_grid.empty())
            throw std::invalid_argument("a gamma grid requires a channel");
    }
    if (cfg.measures.empty()) throw std::invalid_argument("at least one measure is required");
}

bool wants(const ScenarioConfig& cfg, Measure m) {
    return std::find(cfg.measures.begin(), cfg.measures.end(), m) != cfg.measures.end();
}

KrausChannel make_kraus(ChannelKind kind, double gamma) {
    return kind == ChannelKind::Dephasing ? dephasing_kraus(NoiseStrength(gamma))
                                          : amplitude_damping_kraus(NoiseStrength(gamma));
}

[[noreturn]] void rethrow_at(double alpha, double r, const std::optional<double>& gamma,
                             const std::exception& e) {
    std::string where = "at alpha=" + fmt(alpha) + ", r=" + fmt(r);
    if (gamma) where += ", gamma=" + fmt(*gamma);
    throw std::runtime_error(where + ": " + e.what());
}

const char* column_of(Measure m) {
    switch (m) {
        case Measure::Concurrence: return "concurrence";
        case Measure::Coherence: return "rel_entropy_coherence";
        case Measure::Entropy: return "nonlocal_information";
    }
    return "unknown";
}

}  // namespace

std::vector<double> default_alpha_grid() {
    std::vector<double> grid(31);
    for (int i = 0; i <= 30; ++i) grid[i] = (20.0 + i) / 10.0;
    return grid;
}

std::vector<double> default_r_grid() {
    std::vector<double> grid(16);
    for (int i = 0; i <= 15; ++i) grid[i] = (M_PI / 4.0) * (i / 15.0);
    return grid;
}

std::vector<double> default_gamma_grid() {
    std::vector<double> grid(11);
    for (int i = 0; i <= 10; ++i) grid[i] = i / 10.0;
    return grid;
}

SweepTable run_scenario(const ScenarioConfig& cfg) {
    validate_config(cfg);
    SweepTable table;
    table.config = cfg;
    table.tool_version = kToolVersion;

    std::vector<std::optional<double>> gammas;
    if (cfg.channel.has_value())
        for (double g : cfg.gamma_grid) gammas.emplace_back(g);
    else
        gammas.emplace_back(std::nullopt);

    const std::string channel_name = cfg.channel ? to_string(*cfg.channel) : "none";
    const std::string locality_name = to_string(cfg.locality);

    for (double a : cfg.alpha_grid) {
        for (double r : cfg.r_grid) {
            std::optional<DensityMatrix> acc;
            try {
                acc = accelerate(horodecki_state(AlphaParameter(a)), AccelerationParameter(r),
                                 AccelerationParameter(r));
            } catch (const std::exception& e) {
                rethrow_at(a, r, std::nullopt, e);
            }
            for (const auto& g : gammas) {
                try {
                    double pre_norm = 1.0;
                    std::optional<DensityMatrix> final_state;
                    if (!g) {
                        final_state = *acc;
                        pre_norm = acc->matrix().trace().real();
                    } else if (cfg.locality == Locality::MultiLocal) {
                        const KrausChannel ch = extend_to_acc_space(make_kraus(*cfg.channel, *g));
                        final_state = apply_multilocal(*acc, ch, ch);
                        pre_norm = final_state->matrix().trace().real();
                    } else {
                        const KrausChannel ch = extend_to_acc_space(make_kraus(*cfg.channel, *g));
                        GlobalResult res = apply_global(*acc, ch, cfg.global_mode);
                        pre_norm = res.pre_norm_trace;
                        final_state = std::move(res.state);
                    }

                    SweepRow row;
                    row.alpha = a;
                    row.r = r;
                    row.gamma = g;
                    row.channel = channel_name;
                    row.locality = locality_name;
                    row.pre_norm_trace = pre_norm;
                    row.min_eigenvalue = final_state->min_eigenvalue();
                    if (wants(cfg, Measure::Concurrence))
                        row.concurrence = concurrence(*final_state, cfg.conventions);
                    const bool want_coh = wants(cfg, Measure::Coherence);
                    const bool want_ent = wants(cfg, Measure::Entropy);
                    if (want_coh || want_ent) {
                        const double s = nonlocal_information(*final_state);
                        if (want_ent) row.entropy = s;
                        if (want_coh) row.coherence = diagonal_entropy_bits(*final_state) - s;
                    }
                    table.rows.push_back(std::move(row));
                } catch (const std::exception& e) {
                    rethrow_at(a, r, g, e);
                }
            }
        }
    }
    return table;
}

ScenarioConfig figure_preset(const std::string& name) {
    ScenarioConfig cfg;
    cfg.alpha_grid = default_alpha_grid();
    cfg.r_grid = default_r_grid();
    if (name == "fig1") {
        cfg.measures = {Measure::Concurrence};
        return cfg;
    }
    if (name == "fig2") {
        cfg.measures = {Measure::Coherence, Measure::Entropy};
        return cfg;
    }
    if (name == "fig3") {
        cfg.measures = {Measure::Entropy};
        return cfg;
    }
    if (name == "fig5") {
        cfg.channel = ChannelKind::AmplitudeDamping;
        cfg.locality = Locality::MultiLocal;
        cfg.r_grid = {0.0, 0.15, 0.3};
        cfg.gamma_grid = {0.1};
        cfg.measures = {Measure::Concurrence, Measure::Coherence, Measure::Entropy};
        return cfg;
    }
    if (name == "fig4" || name == "fig6" || name == "fig7" || name == "fig8") {
        cfg.alpha_grid = {3.5, 4.5};
        cfg.gamma_grid = default_gamma_grid();
        cfg.channel = (name == "fig4" || name == "fig6") ? ChannelKind::Dephasing
                                                         : ChannelKind::AmplitudeDamping;
        cfg.locality = (name == "fig4" || name == "fig7") ? Locality::MultiLocal : Locality::Global;
        cfg.measures = {Measure::Coherence, Measure::Entropy};
        return cfg;
    }
    throw std::invalid_argument("unknown figure preset: " + name);
}

void emit_csv(const SweepTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << kCsvHeader << '\n';
    for (const SweepRow& row : table.rows) {
        out << fmt(row.alpha) << ',' << fmt(row.r) << ',' << fmt_opt(row.gamma) << ','
            << row.channel << ',' << row.locality << ',' << fmt_opt(row.concurrence) << ','
            << fmt_opt(row.coherence) << ',' << fmt_opt(row.entropy) << ','
            << fmt(row.pre_norm_trace) << ',' << fmt(row.min_eigenvalue) << '\n';
    }
    if (!out.good()) throw IoError("write failed: " + path);
}

namespace {

struct PlotAxis {
    std::string column;
    std::vector<double> values;
    std::size_t stride = 1;  // row-index stride of this axis
};

std::string basename_of(const std::string& path) {
    const std::size_t slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    return base;
}

}  // namespace

void emit_plot_script(const SweepTable& table, const std::string& path) {
    if (table.rows.empty())
        throw std::invalid_argument("emit_plot_script: table has no rows");

    const ScenarioConfig& cfg = table.config;
    const std::string base = basename_of(path);
    const std::string csv = base + ".csv";

    // Axis strides mirror the row emission order: alpha, then r, then gamma.
    const std::size_t ng = cfg.channel ? cfg.gamma_grid.size() : 1;
    std::vector<PlotAxis> axes;
    axes.push_back({"alpha", cfg.alpha_grid, cfg.r_grid.size() * ng});
    axes.push_back({"r", cfg.r_grid, ng});
    if (cfg.channel) axes.push_back({"gamma", cfg.gamma_grid, 1});

    std::vector<std::size_t> varying;
    for (std::size_t i = 0; i < axes.size(); ++i)
        if (axes[i].values.size() >= 2) varying.push_back(i);
    std::stable_sort(varying.begin(), varying.end(), [&](std::size_t a, std::size_t b) {
        return axes[a].values.size() > axes[b].values.size();
    });
    const bool surface = varying.size() >= 2 && axes[varying[1]].values.size() >= 5;

    std::ostringstream out;
    out << "# Plot script for " << csv << " (gnuplot). Run from the directory\n"
           "# holding the CSV: gnuplot "
        << base << ".gp\n";
    out << "set datafile separator comma\n"
           "set key autotitle columnhead\n"
           "set style data lines\n"
           "set term pngcairo size 960,720\n";

    if (surface) {
        // The two best-resolved axes span the surface, in canonical order;
        // every other varying axis contributes one panel per value.
        std::size_t xi = varying[0], yi = varying[1];
        if (xi > yi) std::swap(xi, yi);
        std::vector<std::size_t> panel_axes;
        for (std::size_t k = 2; k < varying.size(); ++k) panel_axes.push_back(varying[k]);

        std::vector<std::vector<double>> panels{{}};
        for (std::size_t ai : panel_axes) {
            std::vector<std::vector<double>> next;
            for (const auto& prefix : panels)
                for (double v : axes[ai].values) {
                    auto row = prefix;
                    row.push_back(v);
                    next.push_back(std::move(row));
                }
            panels = std::move(next);
        }

        out << "set dgrid3d " << axes[yi].values.size() << "," << axes[xi].values.size() << "\n";
        out << "set xlabel '" << axes[xi].column << "'\n";
        out << "set ylabel '" << axes[yi].column << "'\n";
        for (Measure m : cfg.measures) {
            const std::string col = column_of(m);
            for (const auto& panel : panels) {
                std::string suffix, filter, title = col;
                for (std::size_t k = 0; k < panel.size(); ++k) {
                    const std::string& pcol = axes[panel_axes[k]].column;
                    suffix += "_" + pcol + fmt(panel[k]);
                    title += " at " + pcol + "=" + fmt(panel[k]);
                    if (!filter.empty()) filter += " && ";
                    filter += "abs(column(\"" + pcol + "\")-" + fmt(panel[k]) + ")<1e-9";
                }
                out << "set output '" << base << "_" << col << suffix << ".png'\n";
                out << "set zlabel '" << col << "'\n";
                out << "set title '" << title << "'\n";
                out << "splot '" << csv << "' using (column(\"" << axes[xi].column
                    << "\")):(column(\"" << axes[yi].column << "\")):(";
                if (filter.empty())
                    out << "column(\"" << col << "\")";
                else
                    out << filter << " ? column(\"" << col << "\") : 1/0";
                out << ") notitle\n";
            }
        }
    } else {
        // Line plot over the best-resolved axis, one curve per combination
        // of the remaining varying axes, selected by row stride.
        const std::size_t xi = varying.empty() ? 0 : varying[0];
        std::vector<std::size_t> curve_axes;
        for (std::size_t k = 1; k < varying.size(); ++k) curve_axes.push_back(varying[k]);

        struct Curve {
            std::size_t offset = 0;
            std::string title;
        };
        std::vector<Curve> curves{{0, ""}};
        for (std::size_t ai : curve_axes) {
            std::vector<Curve> next;
            for (const Curve& c : curves)
                for (std::size_t vi = 0; vi < axes[ai].values.size(); ++vi) {
                    Curve n = c;
                    n.offset += vi * axes[ai].stride;
                    if (!n.title.empty()) n.title += ", ";
                    n.title += axes[ai].column + "=" + fmt(axes[ai].values[vi]);
                    next.push_back(std::move(n));
                }
            curves = std::move(next);
        }

        const std::size_t stride = axes[xi].stride;
        const std::size_t span = (axes[xi].values.size() - 1) * stride;
        out << "set xlabel '" << axes[xi].column << "'\n";
        for (Measure m : cfg.measures) {
            const std::string col = column_of(m);
            out << "set output '" << base << "_" << col << ".png'\n";
            out << "set ylabel '" << col << "'\n";
            out << "plot ";
            for (std::size_t ci = 0; ci < curves.size(); ++ci) {
                if (ci) out << ", \\\n     ";
                out << "'" << csv << "' every " << stride << "::" << curves[ci].offset << "::"
                    << curves[ci].offset + span << " using (column(\"" << axes[xi].column
                    << "\")):(column(\"" << col << "\"))";
                if (!curves[ci].title.empty()) out << " title '" << curves[ci].title << "'";
            }
            out << "\n";
        }
    }

    std::ofstream file(path);
    if (!file) throw IoError("cannot open for writing: " + path);
    file << out.str();
    if (!file.good()) throw IoError("write failed: " + path);
}

std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    auto to_double = [](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number in range: '" + s + "'");
        }
        if (used != s.size()) throw std::invalid_argument("bad number in range: '" + s + "'");
        return v;
    };

    if (parts.size() == 1) return {to_double(parts[0])};
    if (parts.size() != 3)
        throw std::invalid_argument("range must be a single value or start:stop:step");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
    if (stop < start) throw std::invalid_argument("range stop must not precede start");

    std::vector<double> grid;
    for (int i = 0;; ++i) {
        double v = start + i * step;
        if (v > stop + step * 1e-9) break;
        if (std::abs(v - stop) <= step * 1e-9) v = stop;
        grid.push_back(v);
        if (v == stop) break;
    }
    return grid;
}

}  // namespace qacc
