#pragma once
// Flat key-value experiment configuration: `key = value` lines with dotted
// keys at most two segments deep (e.g. resource.family, mix1.weight), `#`
// comments, strict unknown-key detection with line diagnostics.

#include <map>
#include <string>

#include "cvqt/overlap.hpp"

namespace cvqt {

/// Parsed raw config text. Keys are consumed by the typed getters; any key
/// left unconsumed at finish() is an error (strictness guards against
/// silently ignored typos).
class ConfigFile {
  public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_text(const std::string& text,
                                 const std::string& origin = "<string>");

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key);
    std::string get_string_or(const std::string& key, const std::string& dflt);
    double get_number(const std::string& key);
    double get_number_or(const std::string& key, double dflt);
    int get_int_or(const std::string& key, int dflt);
    bool get_bool_or(const std::string& key, bool dflt);

    /// Throws SpecError naming every key that was never consumed.
    void finish() const;

    const std::string& raw_text() const { return raw_; }

  private:
    struct Entry {
        std::string value;
        int line = 0;
        mutable bool used = false;
    };
    std::map<std::string, Entry> kv_;
    std::string raw_;
    std::string origin_;

    const Entry& require(const std::string& key);
};

struct ExperimentConfig {
    enum class Kind {
        FidelitySweep,
        OptimizeSweep,
        MeasuresSweep,
        ThresholdSweep,
        Figure,
    };

    Kind kind = Kind::FidelitySweep;
    std::string figure_id;

    std::string sweep_param;
    double sweep_start = 0.0;
    double sweep_stop = 0.0;
    int sweep_steps = 0;

    InputStateSpec input = InputStateSpec::coherent({0.0, 0.0});
    ResourceSpec resource = ResourceSpec::tmsv(0.0);
    ChannelSpec channel = ChannelSpec::ideal();
    QuadratureConfig quad;

    std::string optimize_family;    // bell | sssf | sssf-curve | cat
    std::string threshold_family;   // tmsv | bell | cat

    std::string output_name;        // optional CSV basename override
    std::string config_hash;        // fnv1a-64 of the raw config text
};

/// 64-bit FNV-1a of a byte string, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig experiment_config_from_text(const std::string& text);

}  // namespace cvqt
