#include "cvqt/experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "cvqt/closed_forms.hpp"
#include "cvqt/fock_rep.hpp"
#include "cvqt/measures.hpp"
#include "cvqt/optimize.hpp"

namespace cvqt {

namespace {

// ---------------------------------------------------------------------------
// Formatting and table plumbing.
// ---------------------------------------------------------------------------

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = (n == 1) ? a : a + (b - a) * i / (n - 1);
    }
    return v;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string iso_utc_now() {
    const std::time_t t =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string render_csv(const Table& t, const std::string& label,
                       const std::string& hash, bool reproducible) {
    std::string out;
    out += "# cvqt-csv v1\n";
    out += "# experiment: " + label + "\n";
    out += "# config-hash: fnv1a64:" + hash + "\n";
    if (!reproducible) out += "# generated: " + iso_utc_now() + "\n";
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_plot_script(const Table& t, const std::string& csv_name) {
    std::string out;
    out += "# gnuplot companion for " + csv_name + "\n";
    out += "set datafile separator ','\n";
    out += "set key autotitle columnhead\n";
    out += "set grid\n";
    out += "set xlabel '" + t.columns.front() + "'\n";
    out += "plot for [i=2:" + std::to_string(t.columns.size()) + "] '" +
           csv_name + "' using 1:i with lines\n";
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + path.string());
    out << body;
    out.flush();
    if (!out) throw IoError("failed writing output file: " + path.string());
}

RunSummary write_output(const Table& t, const std::string& label,
                        const std::string& hash, const std::string& base,
                        const RunOptions& opts) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(opts.out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory: " + opts.out_dir);
    }
    RunSummary summary;
    const fs::path csv = fs::path(opts.out_dir) / (base + ".csv");
    write_file(csv, render_csv(t, label, hash, opts.reproducible));
    summary.csv_path = csv.string();
    summary.rows = static_cast<int>(t.rows.size());
    if (opts.emit_plot_script) {
        const fs::path gp = fs::path(opts.out_dir) / (base + ".gp");
        write_file(gp, render_plot_script(t, base + ".csv"));
        summary.plot_path = gp.string();
    }
    return summary;
}

// ---------------------------------------------------------------------------
// Worker pool: rows are computed in any order but stored by index, so the
// output is identical for every --jobs value.
// ---------------------------------------------------------------------------

void parallel_rows(int n, int jobs, const std::function<void(int)>& compute,
                   const std::function<std::string(int)>& point_label) {
    jobs = std::clamp(jobs, 1, 64);
    std::atomic<int> next{0};
    std::mutex mtx;
    int err_class = 0;  // 1 spec, 2 numeric, 3 io
    std::string err_msg;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (err_class != 0) return;
            }
            int cls = 0;
            std::string msg;
            try {
                compute(i);
            } catch (const SpecError& e) {
                cls = 1;
                msg = e.what();
            } catch (const NumericError& e) {
                cls = 2;
                msg = e.what();
            } catch (const IoError& e) {
                cls = 3;
                msg = e.what();
            } catch (const std::exception& e) {
                cls = 2;
                msg = e.what();
            }
            if (cls != 0) {
                std::lock_guard<std::mutex> lock(mtx);
                if (err_class == 0) {
                    err_class = cls;
                    err_msg = std::string(msg) + " (at grid point " +
                              std::to_string(i) + ": " + point_label(i) + ")";
                }
                return;
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (err_class == 1) throw SpecError(err_msg);
    if (err_class == 2) throw NumericError(err_msg);
    if (err_class == 3) throw IoError(err_msg);
}

// ---------------------------------------------------------------------------
// Sweep parameter application.
// ---------------------------------------------------------------------------

void apply_sweep_value(ExperimentConfig& c, double v) {
    const std::string& p = c.sweep_param;
    auto input_is = [&](InputStateSpec::Kind k) { return c.input.kind == k; };
    if (p == "resource.r") {
        c.resource.r = v;
    } else if (p == "resource.delta") {
        c.resource.delta = v;
    } else if (p == "resource.theta") {
        c.resource.theta = v;
    } else if (p == "resource.gamma_abs") {
        c.resource.gamma = cplx(v, 0.0);
    } else if (p == "resource.nth") {
        c.resource.nth_a = v;
        c.resource.nth_b = v;
    } else if (p == "resource.nth_a") {
        c.resource.nth_a = v;
    } else if (p == "resource.nth_b") {
        c.resource.nth_b = v;
    } else if (p == "input.s") {
        if (!input_is(InputStateSpec::Kind::SqueezedVacuum) &&
            !input_is(InputStateSpec::Kind::SqueezedFock1)) {
            throw SpecError("sweep over input.s requires a squeezed input");
        }
        c.input.s = v;
    } else if (p == "input.beta_re" || p == "input.beta_im") {
        if (!input_is(InputStateSpec::Kind::Coherent) &&
            !input_is(InputStateSpec::Kind::PhotonAddedCoherent)) {
            throw SpecError(
                "sweep over input.beta_* requires a coherent-type input");
        }
        if (p == "input.beta_re") {
            c.input.beta = cplx(v, c.input.beta.imag());
        } else {
            c.input.beta = cplx(c.input.beta.real(), v);
        }
    } else if (p == "channel.g") {
        c.channel.gx = v;
        c.channel.gp = v;
    } else if (p == "channel.gx") {
        c.channel.gx = v;
    } else if (p == "channel.gp") {
        c.channel.gp = v;
    } else if (p == "channel.theta") {
        c.channel.theta = v;
    } else if (p == "channel.r_m") {
        c.channel.r_m = v;
    } else if (p == "channel.s_m") {
        c.channel.s_m = v;
    } else if (p == "channel.phi_x") {
        c.channel.phi_x = v;
    } else if (p == "channel.phi_p") {
        c.channel.phi_p = v;
    } else {
        throw SpecError("sweep.param '" + p +
                        "' does not reference a known parameter");
    }
}

std::function<std::string(int)> label_for(const ExperimentConfig& c,
                                          const std::vector<double>& grid) {
    return [param = c.sweep_param, grid](int i) {
        return param + " = " + format_double(grid[i]);
    };
}

// ---------------------------------------------------------------------------
// Experiment kinds.
// ---------------------------------------------------------------------------

Table run_fidelity_sweep(const ExperimentConfig& c, const RunOptions& opts) {
    const std::vector<double> grid =
        linspace(c.sweep_start, c.sweep_stop, c.sweep_steps);
    Table t;
    t.columns = {c.sweep_param, "F"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            ExperimentConfig pt = c;
            apply_sweep_value(pt, grid[i]);
            const double f = fidelity(pt.channel, pt.input, pt.resource, pt.quad);
            t.rows[i] = {grid[i], f};
        },
        label_for(c, grid));
    return t;
}

Table run_optimize_sweep(const ExperimentConfig& c, const RunOptions& opts) {
    if (c.sweep_param != "resource.r" && c.sweep_param != "resource.nth") {
        throw SpecError(
            "optimize-sweep supports sweep.param resource.r or resource.nth");
    }
    if ((c.optimize_family == "sssf" || c.optimize_family == "sssf-curve") &&
        c.sweep_param == "resource.nth") {
        throw SpecError(
            "the pure-state superposition optimizer cannot sweep thermal "
            "occupation");
    }
    const std::vector<double> grid =
        linspace(c.sweep_start, c.sweep_stop, c.sweep_steps);
    Table t;
    t.columns = {c.sweep_param, "F_opt"};
    std::vector<std::string> argmax_keys;
    if (c.optimize_family == "bell") {
        argmax_keys = {"delta"};
    } else if (c.optimize_family == "sssf") {
        argmax_keys = {"delta1", "delta2", "c0", "c1", "c2"};
    } else if (c.optimize_family == "sssf-curve") {
        argmax_keys = {"x", "delta1", "delta2"};
    } else {
        argmax_keys = {"gamma_abs"};
    }
    for (const auto& k : argmax_keys) t.columns.push_back(k);
    t.columns.push_back("evaluations");
    t.columns.push_back("converged");
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            ExperimentConfig pt = c;
            apply_sweep_value(pt, grid[i]);
            const double r = pt.resource.r;
            const ThermalContext ctx{pt.resource.nth_a, pt.resource.nth_b};
            OptResult res;
            if (c.optimize_family == "bell") {
                res = optimize_bell(r, pt.input, ctx, pt.quad);
            } else if (c.optimize_family == "sssf") {
                res = optimize_sssf(r, pt.input, pt.quad);
            } else if (c.optimize_family == "sssf-curve") {
                res = sssf_curve_max(r, pt.input, pt.quad);
            } else {
                res = optimize_cat(r, ctx);
            }
            std::vector<double> row = {grid[i], res.f_opt};
            for (const auto& k : argmax_keys) row.push_back(res.argmax.at(k));
            row.push_back(static_cast<double>(res.evaluations));
            row.push_back(res.converged ? 1.0 : 0.0);
            t.rows[i] = std::move(row);
        },
        label_for(c, grid));
    return t;
}

Table run_measures_sweep(const ExperimentConfig& c, const RunOptions& opts) {
    if (c.sweep_param.rfind("resource.", 0) != 0) {
        throw SpecError("measures-sweep sweeps resource parameters only");
    }
    const bool thermal_swept = c.sweep_param.rfind("resource.nth", 0) == 0;
    const bool pure_columns = c.resource.pure() && !thermal_swept;
    const std::vector<double> grid =
        linspace(c.sweep_start, c.sweep_stop, c.sweep_steps);
    Table t;
    t.columns = {c.sweep_param, "n_a", "n_b", "delta_insep", "purity"};
    if (pure_columns) {
        t.columns.insert(t.columns.end(),
                         {"entropy", "d_ng", "affinity_g", "affinity_s"});
    }
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            ExperimentConfig pt = c;
            apply_sweep_value(pt, grid[i]);
            const SecondMoments m = second_moments(pt.resource);
            const double delta = m.n_a * m.n_b - std::norm(m.cross);
            std::vector<double> row = {grid[i], m.n_a, m.n_b, delta,
                                       purity(pt.resource, pt.quad)};
            if (pure_columns) {
                row.push_back(von_neumann_entropy(pt.resource));
                row.push_back(non_gaussianity(pt.resource, pt.quad));
                const AffinityResult aff = vacuum_affinity(pt.resource);
                row.push_back(aff.g);
                row.push_back(aff.s_star);
            }
            t.rows[i] = std::move(row);
        },
        label_for(c, grid));
    return t;
}

ResourceSpec::Family threshold_family(const std::string& name) {
    if (name == "tmsv") return ResourceSpec::Family::TMSV;
    if (name == "bell") return ResourceSpec::Family::SqueezedBell;
    return ResourceSpec::Family::SqueezedCat;
}

Table run_threshold_sweep(const ExperimentConfig& c, const RunOptions& opts) {
    if (c.sweep_param != "resource.r") {
        throw SpecError("threshold-sweep requires sweep.param = resource.r");
    }
    const std::vector<double> grid =
        linspace(c.sweep_start, c.sweep_stop, c.sweep_steps);
    Table t;
    t.columns = {c.sweep_param, "n_th_cls"};
    t.rows.assign(grid.size(), {});
    const ResourceSpec::Family fam = threshold_family(c.threshold_family);
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            t.rows[i] = {grid[i], classical_threshold(fam, grid[i])};
        },
        label_for(c, grid));
    return t;
}

// ---------------------------------------------------------------------------
// Figure recipes.
// ---------------------------------------------------------------------------

Table figure_fidelity_families(const RunOptions& opts) {
    const std::vector<double> grid = linspace(0.0, 1.5, 31);
    const InputStateSpec input = InputStateSpec::coherent({1.0, 0.0});
    const ChannelSpec ch = ChannelSpec::ideal();
    const QuadratureConfig quad;
    Table t;
    t.columns = {"r", "F_tmsv", "F_sqfock11", "F_pss", "F_pas"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            const double r = grid[i];
            t.rows[i] = {
                r,
                fidelity(ch, input, ResourceSpec::tmsv(r), quad),
                fidelity(ch, input, ResourceSpec::squeezed_fock11(r), quad),
                fidelity(ch, input, ResourceSpec::photon_subtracted(r), quad),
                fidelity(ch, input, ResourceSpec::photon_added(r), quad)};
        },
        [&](int i) { return "r = " + format_double(grid[i]); });
    return t;
}

Table figure_bell_angle_scan(const RunOptions& opts) {
    const std::vector<double> grid = linspace(0.0, kPi / 2.0, 33);
    const std::vector<double> rs = {0.2, 0.5, 1.0};
    const InputStateSpec input = InputStateSpec::coherent({1.0, 0.0});
    const ChannelSpec ch = ChannelSpec::ideal();
    const QuadratureConfig quad;
    Table t;
    t.columns = {"delta", "F_r0.2", "F_r0.5", "F_r1.0"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            std::vector<double> row = {grid[i]};
            for (double r : rs) {
                row.push_back(fidelity(
                    ch, input, ResourceSpec::bell(r, grid[i], 0.0), quad));
            }
            t.rows[i] = std::move(row);
        },
        [&](int i) { return "delta = " + format_double(grid[i]); });
    return t;
}

Table figure_bell_optimum(const RunOptions& opts) {
    const std::vector<double> grid = linspace(0.0, 1.2, 25);
    const InputStateSpec input = InputStateSpec::coherent({1.0, 0.0});
    const QuadratureConfig quad;
    Table t;
    t.columns = {"r", "F_opt", "delta_opt", "delta_opt_analytic", "F_tmsv"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            const double r = grid[i];
            const OptResult res = optimize_bell(r, input, {}, quad);
            t.rows[i] = {r, res.f_opt, res.argmax.at("delta"),
                         delta_opt_coherent(r),
                         fidelity_tmsv_thermal(r, {})};
        },
        [&](int i) { return "r = " + format_double(grid[i]); });
    return t;
}

Table figure_entropy(const RunOptions& opts) {
    const std::vector<double> grid = linspace(0.0, 1.2, 25);
    Table t;
    t.columns = {"r", "E_tmsv", "E_pss", "E_pas", "E_sqfock11"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            const double r = grid[i];
            t.rows[i] = {
                r, von_neumann_entropy(ResourceSpec::tmsv(r)),
                von_neumann_entropy(ResourceSpec::photon_subtracted(r)),
                von_neumann_entropy(ResourceSpec::photon_added(r)),
                von_neumann_entropy(ResourceSpec::squeezed_fock11(r))};
        },
        [&](int i) { return "r = " + format_double(grid[i]); });
    return t;
}

Table figure_non_gaussianity(const RunOptions& opts) {
    const std::vector<double> grid = linspace(0.0, kPi / 2.0, 17);
    Table t;
    t.columns = {"delta", "d_ng"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            t.rows[i] = {grid[i], non_gaussianity(ResourceSpec::bell(
                                      0.5, grid[i], 0.0))};
        },
        [&](int i) { return "delta = " + format_double(grid[i]); });
    return t;
}

Table figure_sssf_optimum(const RunOptions& opts) {
    const std::vector<double> grid = linspace(0.1, 1.2, 23);
    const InputStateSpec input = InputStateSpec::coherent({1.0, 0.0});
    const ChannelSpec ch = ChannelSpec::ideal();
    const QuadratureConfig quad;
    Table t;
    t.columns = {"r", "F_sssf", "F_bell", "F_pss", "F_tmsv"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            const double r = grid[i];
            t.rows[i] = {
                r, optimize_sssf(r, input, quad).f_opt,
                optimize_bell(r, input, {}, quad).f_opt,
                fidelity(ch, input, ResourceSpec::photon_subtracted(r), quad),
                fidelity(ch, input, ResourceSpec::tmsv(r), quad)};
        },
        [&](int i) { return "r = " + format_double(grid[i]); });
    return t;
}

Table figure_cat_optimum(const RunOptions& opts) {
    const std::vector<double> grid = linspace(0.0, 1.2, 25);
    Table t;
    t.columns = {"r", "F_cat", "gamma_opt", "F_tmsv"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            const double r = grid[i];
            const OptResult res = optimize_cat(r, {});
            t.rows[i] = {r, res.f_opt, res.argmax.at("gamma_abs"),
                         fidelity_tmsv_thermal(r, {})};
        },
        [&](int i) { return "r = " + format_double(grid[i]); });
    return t;
}

Table figure_thermal_fidelity(const RunOptions& opts) {
    const std::vector<double> grid = linspace(0.0, 0.5, 26);
    const InputStateSpec input = InputStateSpec::coherent({1.0, 0.0});
    const ChannelSpec ch = ChannelSpec::ideal();
    const QuadratureConfig quad;
    Table t;
    t.columns = {"n_th", "F", "F_analytic"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            const double nth = grid[i];
            const ResourceSpec res =
                ResourceSpec::tmsv(0.5).with_thermal(nth, nth);
            t.rows[i] = {nth, fidelity(ch, input, res, quad),
                         fidelity_tmsv_thermal(0.5, ThermalContext{nth, nth})};
        },
        [&](int i) { return "n_th = " + format_double(grid[i]); });
    return t;
}

Table figure_thresholds(const RunOptions& opts) {
    const std::vector<double> grid = linspace(0.0, 1.2, 25);
    Table t;
    t.columns = {"r", "n_tmsv", "n_bell", "n_cat"};
    t.rows.assign(grid.size(), {});
    parallel_rows(
        static_cast<int>(grid.size()), opts.jobs,
        [&](int i) {
            const double r = grid[i];
            t.rows[i] = {
                r, classical_threshold(ResourceSpec::Family::TMSV, r),
                classical_threshold(ResourceSpec::Family::SqueezedBell, r),
                classical_threshold(ResourceSpec::Family::SqueezedCat, r)};
        },
        [&](int i) { return "r = " + format_double(grid[i]); });
    return t;
}

struct FigureDef {
    const char* id;
    Table (*build)(const RunOptions&);
};

constexpr FigureDef kFigures[] = {
    {"3.1-I", figure_fidelity_families},
    {"3.3", figure_bell_angle_scan},
    {"3.6", figure_bell_optimum},
    {"3.7", figure_entropy},
    {"3.10", figure_non_gaussianity},
    {"4.4", figure_sssf_optimum},
    {"4.6", figure_cat_optimum},
    {"5.1", figure_thermal_fidelity},
    {"5.4", figure_thresholds},
};

std::string kind_label(ExperimentConfig::Kind kind) {
    switch (kind) {
        case ExperimentConfig::Kind::FidelitySweep: return "fidelity-sweep";
        case ExperimentConfig::Kind::OptimizeSweep: return "optimize-sweep";
        case ExperimentConfig::Kind::MeasuresSweep: return "measures-sweep";
        case ExperimentConfig::Kind::ThresholdSweep: return "threshold-sweep";
        case ExperimentConfig::Kind::Figure: return "figure";
    }
    return "unknown";
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points.
// ---------------------------------------------------------------------------

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, res.ptr);
    if (s == "-0") s = "0";
    return s;
}

std::vector<std::string> figure_catalog() {
    std::vector<std::string> ids;
    for (const auto& f : kFigures) ids.emplace_back(f.id);
    return ids;
}

RunSummary run_figure(const std::string& figure_id, const RunOptions& opts) {
    for (const auto& f : kFigures) {
        if (figure_id == f.id) {
            const Table t = f.build(opts);
            return write_output(t, "figure " + figure_id,
                                fnv1a_hex("figure:" + figure_id + ":v1"),
                                "figure-" + figure_id, opts);
        }
    }
    std::string known;
    for (const auto& f : kFigures) {
        if (!known.empty()) known += ", ";
        known += f.id;
    }
    throw SpecError("unknown figure id '" + figure_id + "' (available: " +
                    known + ")");
}

RunSummary run_experiment(const ExperimentConfig& config,
                          const RunOptions& opts) {
    if (config.kind == ExperimentConfig::Kind::Figure) {
        return run_figure(config.figure_id, opts);
    }
    Table t;
    switch (config.kind) {
        case ExperimentConfig::Kind::FidelitySweep:
            t = run_fidelity_sweep(config, opts);
            break;
        case ExperimentConfig::Kind::OptimizeSweep:
            t = run_optimize_sweep(config, opts);
            break;
        case ExperimentConfig::Kind::MeasuresSweep:
            t = run_measures_sweep(config, opts);
            break;
        case ExperimentConfig::Kind::ThresholdSweep:
            t = run_threshold_sweep(config, opts);
            break;
        case ExperimentConfig::Kind::Figure:
            break;
    }
    const std::string base = config.output_name.empty()
                                 ? kind_label(config.kind)
                                 : config.output_name;
    return write_output(t, kind_label(config.kind), config.config_hash, base,
                        opts);
}

// ---------------------------------------------------------------------------
// Self-test: frozen reference checks, each printed as one line.
// ---------------------------------------------------------------------------

namespace {

bool report_check(const char* name, double got, double want, double tol) {
    const bool ok = std::abs(got - want) <= tol;
    std::printf("[%s] %-44s got %.12g  want %.12g\n", ok ? "ok" : "FAIL", name,
                got, want);
    return ok;
}

}  // namespace

int selftest() {
    bool all = true;
    {
        const double f =
            fidelity(ChannelSpec::ideal(),
                     InputStateSpec::coherent({0.4, 0.3}),
                     ResourceSpec::tmsv(0.5));
        all &= report_check("fidelity coherent/tmsv r=0.5", f,
                            0.73105857863000545, 1e-9);
    }
    {
        const ThermalContext ctx{0.1, 0.1};
        const double num =
            fidelity(ChannelSpec::ideal(),
                     InputStateSpec::coherent({0.4, 0.3}),
                     ResourceSpec::bell(0.5, 0.3, 0.0).with_thermal(0.1, 0.1));
        const double ana = fidelity_bell_thermal(0.5, ctx, 0.3);
        all &= report_check("thermal Bell vs closed form", num, ana, 1e-8);
    }
    {
        const ResourceSpec spec = ResourceSpec::bell(0.7, 0.6, 0.4);
        const FockTensor t = synthesize_resource_fock(spec);
        const cplx xa(0.31, 0.42);
        const cplx xb(-0.55, 0.23);
        const cplx direct = chi_resource(spec, xa, xb);
        const cplx fock = chi_from_fock(t, xa, xb);
        all &= report_check("chi dual route (Bell)", std::abs(direct - fock),
                            0.0, 1e-8);
    }
    {
        const ResourceSpec spec =
            ResourceSpec::squeezed_cat(0.5, 0.6, {1.0, 0.4}, 0.3);
        const FockTensor t = synthesize_resource_fock(spec);
        const cplx xa(0.31, 0.42);
        const cplx xb(-0.55, 0.23);
        const cplx direct = chi_resource(spec, xa, xb);
        const cplx fock = chi_from_fock(t, xa, xb);
        all &= report_check("chi dual route (cat)", std::abs(direct - fock),
                            0.0, 1e-8);
    }
    {
        const double thr =
            classical_threshold(ResourceSpec::Family::TMSV, 0.5);
        all &= report_check("classical threshold tmsv r=0.5", thr,
                            0.31606027941427872, 1e-6);
    }
    {
        const double p = purity(InputStateSpec::coherent({0.0, 0.0}));
        all &= report_check("vacuum purity", p, 1.0, 1e-9);
    }
    {
        const double ov =
            state_overlap(make_chi(InputStateSpec::coherent({0.0, 0.0})),
                          make_chi(InputStateSpec::coherent({1.0, 0.0})));
        all &= report_check("vacuum/coherent overlap", ov, std::exp(-1.0),
                            1e-9);
    }
    return all ? 0 : 3;
}

}  // namespace cvqt
