#include "qacc/validation.hpp"

#include "qacc/channels.hpp"
#include "qacc/eig.hpp"
#include "qacc/experiments.hpp"
#include "qacc/measures.hpp"
#include "qacc/rindler.hpp"
#include "qacc/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

namespace qacc {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const char* const kFigureNames[8] = {"fig1", "fig2", "fig3", "fig4",
                                     "fig5", "fig6", "fig7", "fig8"};

std::size_t expected_rows(const std::string& name) {
    static const std::map<std::string, std::size_t> counts = {
        {"fig1", 496}, {"fig2", 496}, {"fig3", 496}, {"fig4", 352},
        {"fig5", 93},  {"fig6", 352}, {"fig7", 352}, {"fig8", 352}};
    return counts.at(name);
}

CheckResult check_closed_forms() {
    CheckResult res{"closed-form table matches the generic accelerated construction", true, ""};
    std::size_t flagged = 0;
    for (double a : default_alpha_grid()) {
        for (double r : default_r_grid()) {
            const DiscrepancyReport report =
                cross_check(AlphaParameter(a), AccelerationParameter(r));
            for (const Discrepancy& d : report.rows) {
                if (!d.ambiguous_flag) {
                    res.passed = false;
                    res.detail = "unflagged mismatch at (" + std::to_string(d.row_index) + "," +
                                 std::to_string(d.col_index) + ") alpha=" + fmt(a) +
                                 " r=" + fmt(r) + " diff=" + fmt(d.abs_diff);
                    return res;
                }
                ++flagged;
            }
        }
    }
    res.detail = "496 grid points, every unambiguous position within 1e-12; " +
                 std::to_string(flagged) + " mismatches, all inside the flagged ambiguous set";
    return res;
}

CheckResult check_preset_validity(const std::map<std::string, SweepTable>& tables) {
    CheckResult res{"all figure-preset states are valid density matrices", true, ""};
    std::size_t rows = 0;
    double worst_eig = 0.0, worst_drift = 0.0;
    for (const auto& [name, table] : tables) {
        for (const SweepRow& row : table.rows) {
            ++rows;
            worst_eig = std::min(worst_eig, row.min_eigenvalue);
            if (row.locality != "global")
                worst_drift = std::max(worst_drift, std::abs(row.pre_norm_trace - 1.0));
            if (row.min_eigenvalue < -1e-10) {
                res.passed = false;
                res.detail = name + " row alpha=" + fmt(row.alpha) + " r=" + fmt(row.r) +
                             " has eigenvalue " + fmt(row.min_eigenvalue);
                return res;
            }
            if (row.locality != "global" && std::abs(row.pre_norm_trace - 1.0) > 1e-12) {
                res.passed = false;
                res.detail = name + " row alpha=" + fmt(row.alpha) + " r=" + fmt(row.r) +
                             " trace drift " + fmt(row.pre_norm_trace - 1.0);
                return res;
            }
        }
    }
    res.detail = std::to_string(rows) +
                 " rows; Hermiticity and unit trace enforced at construction; min eigenvalue " +
                 fmt(worst_eig) + "; worst non-global trace drift " + fmt(worst_drift);
    return res;
}

CheckResult check_channel_completeness() {
    CheckResult res{"channel completeness and exact identity at gamma=0", true, ""};
    double worst = 0.0;
    for (int kind = 0; kind < 2; ++kind) {
        for (int i = 0; i <= 10; ++i) {
            const NoiseStrength g(i / 10.0);
            const KrausChannel ch3 = kind == 0 ? dephasing_kraus(g) : amplitude_damping_kraus(g);
            const KrausChannel ch4 = extend_to_acc_space(ch3);
            worst = std::max({worst, ch3.completeness_drift(), ch4.completeness_drift()});
        }
    }
    if (worst > 1e-12) {
        res.passed = false;
        res.detail = "completeness drift " + fmt(worst);
        return res;
    }

    const DensityMatrix probe =
        accelerate(horodecki_state(AlphaParameter(3.7)), AccelerationParameter(0.2),
                   AccelerationParameter(0.2));
    double worst_id = 0.0;
    for (int kind = 0; kind < 2; ++kind) {
        const KrausChannel ch = extend_to_acc_space(
            kind == 0 ? dephasing_kraus(NoiseStrength(0.0))
                      : amplitude_damping_kraus(NoiseStrength(0.0)));
        const DensityMatrix local = apply_multilocal(probe, ch, ch);
        worst_id = std::max(worst_id, max_abs_diff(local.matrix(), probe.matrix()));
        const GlobalResult global = apply_global(probe, ch);
        worst_id = std::max(worst_id, max_abs_diff(global.state.matrix(), probe.matrix()));
        worst_id = std::max(worst_id, std::abs(global.pre_norm_trace - 1.0));
    }
    if (worst_id > 1e-14) {
        res.passed = false;
        res.detail = "gamma=0 identity drift " + fmt(worst_id);
        return res;
    }
    res.detail = "worst completeness drift " + fmt(worst) + " over both kinds, dims 3 and 4, 11 gammas; gamma=0 drift " + fmt(worst_id);
    return res;
}

CheckResult check_concurrence_anchors() {
    CheckResult res{"concurrence anchors and the alpha=3 separability boundary", true, ""};
    const double bell = concurrence(max_entangled(2));
    if (std::abs(bell - 1.0) > 1e-9) {
        res.passed = false;
        res.detail = "Bell state gave " + fmt(bell);
        return res;
    }
    const double psi3 = concurrence(max_entangled(3));
    if (std::abs(psi3 - 2.0 / std::sqrt(3.0)) > 1e-9) {
        res.passed = false;
        res.detail = "two-qutrit maximally entangled state gave " + fmt(psi3);
        return res;
    }
    double c35 = 0.0, c40 = 0.0;
    for (double a : default_alpha_grid()) {
        const double c = concurrence(horodecki_state(AlphaParameter(a)));
        if (std::abs(a - 3.5) < 1e-9) c35 = c;
        if (std::abs(a - 4.0) < 1e-9) c40 = c;
        if (a <= 3.0 + 1e-9 && c > 1e-6) {
            res.passed = false;
            res.detail = "separable alpha=" + fmt(a) + " gave " + fmt(c);
            return res;
        }
        if (a >= 3.1 - 1e-9 && c <= 1e-6) {
            res.passed = false;
            res.detail = "entangled alpha=" + fmt(a) + " gave " + fmt(c);
            return res;
        }
    }
    res.detail = "Bell 1, qutrit pair 2/sqrt(3); zero through alpha=3.0, positive from 3.1 on -"
                 " the realignment norm crosses 1 at alpha=3, e.g. C(3.5)=" +
                 fmt(c35) + ", C(4.0)=" + fmt(c40);
    return res;
}

CheckResult check_coherence_anchor() {
    CheckResult res{"coherence anchor (2/7)log2(3), alpha-flat at r=0", true, ""};
    const double expected = (2.0 / 7.0) * std::log2(3.0);
    double worst = 0.0;
    for (double a : default_alpha_grid()) {
        const DensityMatrix rho = horodecki_state(AlphaParameter(a));
        const DensityMatrix acc =
            accelerate(rho, AccelerationParameter(0.0), AccelerationParameter(0.0));
        worst = std::max(worst, std::abs(rel_entropy_coherence(rho) - expected));
        worst = std::max(worst, std::abs(rel_entropy_coherence(acc) - expected));
    }
    res.passed = worst <= 1e-9;
    res.detail = "target " + fmt(expected) + ", worst deviation " + fmt(worst) +
                 " across 31 alphas, raw and embedded";
    return res;
}

CheckResult check_entropy_anchors() {
    CheckResult res{"entropy anchors (pure, maximally mixed, alpha=5 endpoint)", true, ""};
    const double pure = nonlocal_information(max_entangled(3));
    ComplexMatrix mixed = ComplexMatrix::identity(9);
    mixed *= cplx(1.0 / 9.0);
    const double mixed_s = nonlocal_information(DensityMatrix(mixed, {3, 3}));
    const double endpoint = nonlocal_information(horodecki_state(AlphaParameter(5.0)));
    const double expected = -(2.0 / 7.0) * std::log2(2.0 / 7.0) -
                            3.0 * (5.0 / 21.0) * std::log2(5.0 / 21.0);
    if (std::abs(pure) > 1e-10) {
        res.passed = false;
        res.detail = "pure state entropy " + fmt(pure);
    } else if (std::abs(mixed_s - std::log2(9.0)) > 1e-10) {
        res.passed = false;
        res.detail = "maximally mixed entropy " + fmt(mixed_s);
    } else if (std::abs(endpoint - expected) > 1e-6) {
        res.passed = false;
        res.detail = "alpha=5 entropy " + fmt(endpoint) + " vs closed form " + fmt(expected);
    } else {
        res.detail = "alpha=5 entropy matches -(2/7)log2(2/7) - 3(5/21)log2(5/21) = " +
                     fmt(expected) + " within 1e-6";
    }
    return res;
}

CheckResult check_ppt_boundary() {
    CheckResult res{"positive-partial-transpose boundary at alpha=4", true, ""};
    for (double a : default_alpha_grid()) {
        const auto values =
            hermitian_eigenvalues(partial_transpose(horodecki_state(AlphaParameter(a))));
        const double min_eig = values.back();
        if (a <= 4.0 + 1e-9 && min_eig < -1e-10) {
            res.passed = false;
            res.detail = "alpha=" + fmt(a) + " has negative transpose eigenvalue " + fmt(min_eig);
            return res;
        }
        if (a >= 4.1 - 1e-9 && min_eig >= -1e-6) {
            res.passed = false;
            res.detail = "alpha=" + fmt(a) + " transpose eigenvalue only " + fmt(min_eig);
            return res;
        }
    }
    res.detail = "positive partial transpose through alpha=4.0, negative from 4.1 on";
    return res;
}

CheckResult check_coherence_monotone(const std::map<std::string, SweepTable>& tables) {
    CheckResult res{"coherence non-increasing in acceleration", true, ""};
    const SweepTable& table = tables.at("fig2");
    const std::size_t nr = table.config.r_grid.size();
    for (std::size_t base = 0; base < table.rows.size(); base += nr) {
        for (std::size_t i = 0; i + 1 < nr; ++i) {
            const double cur = *table.rows[base + i].coherence;
            const double next = *table.rows[base + i + 1].coherence;
            if (next > cur + 1e-9) {
                res.passed = false;
                res.detail = "alpha=" + fmt(table.rows[base].alpha) + ": coherence rises from " +
                             fmt(cur) + " to " + fmt(next);
                return res;
            }
        }
    }
    res.detail = "non-increasing along every alpha row of the channel-free sweep (tol 1e-9)";
    return res;
}

CheckResult check_extreme_noise() {
    CheckResult res{"extreme-noise limits of both channels", true, ""};
    const DensityMatrix acc =
        accelerate(horodecki_state(AlphaParameter(4.5)), AccelerationParameter(0.3),
                   AccelerationParameter(0.3));

    const KrausChannel deph = extend_to_acc_space(dephasing_kraus(NoiseStrength(1.0)));
    const DensityMatrix after_deph = apply_multilocal(acc, deph, deph);
    auto allowed_pair = [](std::size_t x, std::size_t y) {
        return x == y || ((x == 0 || x == 3) && (y == 0 || y == 3));
    };
    double worst_coh = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t c = 0; c < 4; ++c)
                for (std::size_t d = 0; d < 4; ++d) {
                    if (allowed_pair(a, c) && allowed_pair(b, d)) continue;
                    worst_coh = std::max(
                        worst_coh, std::abs(after_deph.matrix()(a * 4 + b, c * 4 + d)));
                }
    if (worst_coh > 1e-12) {
        res.passed = false;
        res.detail = "full dephasing left coherence " + fmt(worst_coh) +
                     " outside the {0,P} pairs";
        return res;
    }

    const KrausChannel damp = extend_to_acc_space(amplitude_damping_kraus(NoiseStrength(1.0)));
    const DensityMatrix after_damp = apply_multilocal(acc, damp, damp);
    double worst_pop = 0.0, worst_pair_shift = 0.0;
    for (Subsystem traced : {Subsystem::B, Subsystem::A}) {
        const ComplexMatrix before = partial_trace(acc, traced);
        const ComplexMatrix after = partial_trace(after_damp, traced);
        worst_pop = std::max({worst_pop, std::abs(after(1, 1)), std::abs(after(2, 2))});
        worst_pair_shift = std::max(worst_pair_shift, std::abs(after(3, 3) - before(3, 3)));
    }
    if (worst_pop > 1e-12 || worst_pair_shift > 1e-12) {
        res.passed = false;
        res.detail = "full damping left excited population " + fmt(worst_pop) +
                     ", pair-level shift " + fmt(worst_pair_shift);
        return res;
    }
    res.detail = "full dephasing kills every coherence outside the {0,P} pairs; full damping "
                 "empties levels 1 and 2 and leaves the pair level untouched";
    return res;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CheckResult check_figure_outputs(const std::string& sim_path) {
    CheckResult res{"figure CSVs: schema, row counts, determinism", true, ""};
    if (sim_path.empty()) {
        res.passed = false;
        res.detail = "no command line binary supplied to the suite";
        return res;
    }
    const fs::path tmp =
        fs::temp_directory_path() / ("qacc_validate_" + std::to_string(::getpid()));
    std::error_code ec;
    fs::remove_all(tmp, ec);
    const fs::path dir_a = tmp / "a", dir_b = tmp / "b";
    fs::create_directories(dir_a);
    fs::create_directories(dir_b);

    auto fail = [&](const std::string& why) {
        res.passed = false;
        res.detail = why;
        fs::remove_all(tmp, ec);
        return res;
    };

    for (const char* name : kFigureNames) {
        for (const fs::path& dir : {dir_a, dir_b}) {
            const std::string cmd = "\"" + sim_path + "\" figure " + name + " --out \"" +
                                    dir.string() + "\" >/dev/null 2>&1";
            if (std::system(cmd.c_str()) != 0)
                return fail(std::string(name) + ": figure command failed");
        }
        const std::string csv_a = read_file(dir_a / (std::string(name) + ".csv"));
        const std::string csv_b = read_file(dir_b / (std::string(name) + ".csv"));
        if (csv_a.empty()) return fail(std::string(name) + ": empty or missing CSV");
        if (csv_a != csv_b) return fail(std::string(name) + ": consecutive runs differ");
        if (!fs::exists(dir_a / (std::string(name) + ".gp")))
            return fail(std::string(name) + ": plot script missing");

        const std::size_t first_newline = csv_a.find('\n');
        if (first_newline == std::string::npos ||
            csv_a.substr(0, first_newline) != kCsvHeader)
            return fail(std::string(name) + ": header does not match the schema");
        const std::size_t lines =
            static_cast<std::size_t>(std::count(csv_a.begin(), csv_a.end(), '\n'));
        if (lines != expected_rows(name) + 1)
            return fail(std::string(name) + ": expected " +
                        std::to_string(expected_rows(name)) + " rows, found " +
                        std::to_string(lines - 1));
    }
    fs::remove_all(tmp, ec);
    res.detail = "all eight figures: exact header, expected row counts, bit-identical reruns";
    return res;
}

CheckResult check_global_bookkeeping() {
    CheckResult res{"global-channel trace bookkeeping in both modes", true, ""};
    double min_trace = 1.0, max_trace = 0.0;
    for (ChannelKind kind : {ChannelKind::Dephasing, ChannelKind::AmplitudeDamping}) {
        for (double a : {3.5, 4.5}) {
            for (double r : default_r_grid()) {
                const DensityMatrix acc =
                    accelerate(horodecki_state(AlphaParameter(a)), AccelerationParameter(r),
                               AccelerationParameter(r));
                for (double g : default_gamma_grid()) {
                    const KrausChannel ch = extend_to_acc_space(
                        kind == ChannelKind::Dephasing
                            ? dephasing_kraus(NoiseStrength(g))
                            : amplitude_damping_kraus(NoiseStrength(g)));
                    for (GlobalMode mode :
                         {GlobalMode::LiteralRenormalized, GlobalMode::Composed}) {
                        const GlobalResult out = apply_global(acc, ch, mode);
                        min_trace = std::min(min_trace, out.pre_norm_trace);
                        max_trace = std::max(max_trace, out.pre_norm_trace);
                        if (g == 0.0 && std::abs(out.pre_norm_trace - 1.0) > 1e-12) {
                            res.passed = false;
                            res.detail = "gamma=0 trace " + fmt(out.pre_norm_trace);
                            return res;
                        }
                        if (out.pre_norm_trace > 1.0 + 1e-12) {
                            res.passed = false;
                            res.detail = "pre-normalization trace " + fmt(out.pre_norm_trace) +
                                         " above 1 at gamma=" + fmt(g);
                            return res;
                        }
                    }
                }
            }
        }
    }
    res.detail = "both kinds, both modes, full grids: pre-normalization trace in [" +
                 fmt(min_trace) + ", " + fmt(max_trace) + "], unit at gamma=0, states valid";
    return res;
}

}  // namespace

std::vector<CheckResult> run_validation_suite(const std::string& sim_path) {
    std::map<std::string, SweepTable> tables;
    std::vector<CheckResult> results;
    try {
        for (const char* name : kFigureNames) tables[name] = run_scenario(figure_preset(name));
    } catch (const std::exception& e) {
        results.push_back({"all figure-preset states are valid density matrices", false,
                           std::string("preset sweep failed: ") + e.what()});
        return results;
    }

    results.push_back(check_closed_forms());
    results.push_back(check_preset_validity(tables));
    results.push_back(check_channel_completeness());
    results.push_back(check_concurrence_anchors());
    results.push_back(check_coherence_anchor());
    results.push_back(check_entropy_anchors());
    results.push_back(check_ppt_boundary());
    results.push_back(check_coherence_monotone(tables));
    results.push_back(check_extreme_noise());
    results.push_back(check_figure_outputs(sim_path));
    results.push_back(check_global_bookkeeping());
    return results;
}

}  // namespace qacc
