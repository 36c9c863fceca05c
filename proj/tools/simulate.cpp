// simulate — command-line front end for the cvqt library.
//
// Subcommands:
//   simulate run <config> [--out DIR] [--jobs N] [--reproducible]
//                         [--emit-plot-script]
//   simulate figure <id>  [--out DIR] [--jobs N] [--reproducible]
//                         [--emit-plot-script]
//   simulate selftest
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 I/O error.  The CFT_QUAD_ORDER environment variable (8..256)
// overrides the default quadrature order for all integrals.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "cvqt/experiment.hpp"

namespace {

void report(const cvqt::RunSummary& summary) {
    std::printf("wrote %s (%d rows)\n", summary.csv_path.c_str(),
                summary.rows);
    if (!summary.plot_path.empty()) {
        std::printf("wrote %s\n", summary.plot_path.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-variable teleportation simulator"};
    app.require_subcommand(1);

    cvqt::RunOptions opts;
    std::string config_path;
    std::string figure_id;

    auto add_run_options = [&opts](CLI::App* cmd) {
        cmd->add_option("--out", opts.out_dir, "output directory")
            ->capture_default_str();
        cmd->add_option("--jobs", opts.jobs, "worker threads (1..64)")
            ->check(CLI::Range(1, 64))
            ->capture_default_str();
        cmd->add_flag("--reproducible", opts.reproducible,
                      "omit timestamps so outputs are byte-identical");
        cmd->add_flag("--emit-plot-script", opts.emit_plot_script,
                      "also write a gnuplot script next to the CSV");
    };

    CLI::App* run = app.add_subcommand("run", "execute an experiment config");
    run->add_option("config", config_path, "experiment config file")
        ->required();
    add_run_options(run);

    std::string catalog;
    for (const auto& id : cvqt::figure_catalog()) {
        if (!catalog.empty()) catalog += ", ";
        catalog += id;
    }
    CLI::App* figure =
        app.add_subcommand("figure", "produce a built-in figure dataset");
    figure->add_option("id", figure_id, "figure identifier (" + catalog + ")")
        ->required();
    add_run_options(figure);

    CLI::App* selftest =
        app.add_subcommand("selftest", "run quick frozen-value checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version exit 0; real usage errors map onto the
        // configuration-error code.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            report(cvqt::run_experiment(cvqt::load_experiment_config(config_path),
                                        opts));
        } else if (figure->parsed()) {
            report(cvqt::run_figure(figure_id, opts));
        } else if (selftest->parsed()) {
            return cvqt::selftest();
        }
    } catch (const cvqt::SpecError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const cvqt::NumericError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const cvqt::IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
    return 0;
}
