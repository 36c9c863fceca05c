#pragma once
// Experiment runner: sweeps and built-in figure recipes producing
// deterministic CSV files (optionally with a matching gnuplot script).

#include <string>
#include <vector>

#include "cvqt/config.hpp"

namespace cvqt {

struct RunOptions {
    std::string out_dir = ".";
    int jobs = 1;
    bool reproducible = false;
    bool emit_plot_script = false;
};

struct RunSummary {
    std::string csv_path;
    std::string plot_path;  // empty unless a plot script was emitted
    int rows = 0;
};

/// Execute a parsed experiment; writes <name>.csv (and <name>.gp when
/// requested) under opts.out_dir and returns the paths.
RunSummary run_experiment(const ExperimentConfig& config,
                          const RunOptions& opts);

/// Built-in figure recipes by identifier (see figure_catalog()).
RunSummary run_figure(const std::string& figure_id, const RunOptions& opts);
std::vector<std::string> figure_catalog();

/// Fast self-checks against frozen reference values; prints one line per
/// check and returns 0 (all passed) or 3.
int selftest();

/// Shortest round-trip decimal rendering of a double; "-0" normalizes to
/// "0". Used for every numeric CSV cell.
std::string format_double(double v);

}  // namespace cvqt
