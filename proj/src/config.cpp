#include "cvqt/config.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace cvqt {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_key(const std::string& key) {
    if (key.empty()) return false;
    int dots = 0;
    for (char c : key) {
        if (c == '.') {
            ++dots;
        } else if (!(std::islower(static_cast<unsigned char>(c)) ||
                     std::isdigit(static_cast<unsigned char>(c)) || c == '_' ||
                     c == '-')) {
            return false;
        }
    }
    if (dots > 1) return false;  // at most two levels
    return key.front() != '.' && key.back() != '.';
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

ConfigFile ConfigFile::parse_text(const std::string& text,
                                  const std::string& origin) {
    ConfigFile cfg;
    cfg.raw_ = text;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw SpecError(origin + ":" + std::to_string(lineno) +
                            ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!valid_key(key)) {
            throw SpecError(origin + ":" + std::to_string(lineno) +
                            ": malformed key '" + key + "'");
        }
        if (value.empty()) {
            throw SpecError(origin + ":" + std::to_string(lineno) +
                            ": empty value for key '" + key + "'");
        }
        if (!cfg.kv_.emplace(key, Entry{value, lineno, false}).second) {
            throw SpecError(origin + ":" + std::to_string(lineno) +
                            ": duplicate key '" + key + "'");
        }
    }
    return cfg;
}

bool ConfigFile::has(const std::string& key) const {
    return kv_.count(key) != 0;
}

const ConfigFile::Entry& ConfigFile::require(const std::string& key) {
    auto it = kv_.find(key);
    if (it == kv_.end()) {
        throw SpecError(origin_ + ": missing required key '" + key + "'");
    }
    it->second.used = true;
    return it->second;
}

std::string ConfigFile::get_string(const std::string& key) {
    return require(key).value;
}

std::string ConfigFile::get_string_or(const std::string& key,
                                      const std::string& dflt) {
    return has(key) ? get_string(key) : dflt;
}

double ConfigFile::get_number(const std::string& key) {
    const Entry& e = require(key);
    char* end = nullptr;
    const double v = std::strtod(e.value.c_str(), &end);
    if (end == e.value.c_str() || *end != '\0') {
        throw SpecError(origin_ + ":" + std::to_string(e.line) + ": key '" +
                        key + "' is not a number: '" + e.value + "'");
    }
    return v;
}

double ConfigFile::get_number_or(const std::string& key, double dflt) {
    return has(key) ? get_number(key) : dflt;
}

int ConfigFile::get_int_or(const std::string& key, int dflt) {
    if (!has(key)) return dflt;
    const double v = get_number(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw SpecError(origin_ + ": key '" + key + "' must be an integer");
    }
    return i;
}

bool ConfigFile::get_bool_or(const std::string& key, bool dflt) {
    if (!has(key)) return dflt;
    const Entry& e = require(key);
    if (e.value == "true") return true;
    if (e.value == "false") return false;
    throw SpecError(origin_ + ":" + std::to_string(e.line) + ": key '" + key +
                    "' must be true or false");
}

void ConfigFile::finish() const {
    std::string stray;
    for (const auto& [key, entry] : kv_) {
        if (!entry.used) {
            if (!stray.empty()) stray += ", ";
            stray += "'" + key + "' (line " + std::to_string(entry.line) + ")";
        }
    }
    if (!stray.empty()) {
        throw SpecError(origin_ + ": unknown or unused keys: " + stray);
    }
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Spec builders.
// ---------------------------------------------------------------------------

namespace {

InputStateSpec build_input_group(ConfigFile& cfg, const std::string& prefix,
                                 bool allow_mixture);

InputStateSpec build_input_kind(ConfigFile& cfg, const std::string& prefix,
                                const std::string& kind, bool allow_mixture) {
    auto num = [&](const char* leaf, double dflt) {
        return cfg.get_number_or(prefix + leaf, dflt);
    };
    if (kind == "coherent") {
        return InputStateSpec::coherent(
            {num("beta_re", 0.0), num("beta_im", 0.0)});
    }
    if (kind == "squeezed-vacuum") {
        return InputStateSpec::squeezed_vacuum(cfg.get_number(prefix + "s"),
                                               num("phi_s", 0.0));
    }
    if (kind == "fock1") {
        return InputStateSpec::fock1();
    }
    if (kind == "squeezed-fock1") {
        return InputStateSpec::squeezed_fock1(cfg.get_number(prefix + "s"),
                                              num("phi_s", 0.0));
    }
    if (kind == "photon-added-coherent") {
        return InputStateSpec::photon_added(
            {num("beta_re", 0.0), num("beta_im", 0.0)});
    }
    if (kind == "mixture" && allow_mixture) {
        std::vector<std::pair<double, InputStateSpec>> parts;
        for (int i = 1;; ++i) {
            const std::string mp = "mix" + std::to_string(i) + ".";
            if (!cfg.has(mp + "kind")) break;
            const double weight = cfg.get_number(mp + "weight");
            parts.emplace_back(weight, build_input_group(cfg, mp, false));
        }
        if (parts.empty()) {
            throw SpecError(
                "input.kind = mixture requires component groups mix1.*, "
                "mix2.*, ...");
        }
        return InputStateSpec::mixture(std::move(parts));
    }
    throw SpecError("unknown input kind '" + kind + "'");
}

InputStateSpec build_input_group(ConfigFile& cfg, const std::string& prefix,
                                 bool allow_mixture) {
    const std::string kind = cfg.get_string(prefix + "kind");
    return build_input_kind(cfg, prefix, kind, allow_mixture);
}

ResourceSpec build_resource(ConfigFile& cfg) {
    const std::string family = cfg.get_string_or("resource.family", "tmsv");
    auto num = [&](const char* leaf, double dflt) {
        return cfg.get_number_or(std::string("resource.") + leaf, dflt);
    };
    const double r = num("r", 0.0);
    const double phi = num("phi", kPi);
    ResourceSpec spec = ResourceSpec::tmsv(r, phi);
    if (family == "tmsv") {
        // as constructed
    } else if (family == "squeezed-fock11") {
        spec = ResourceSpec::squeezed_fock11(r, phi);
    } else if (family == "photon-subtracted") {
        spec = ResourceSpec::photon_subtracted(r, phi);
    } else if (family == "photon-added") {
        spec = ResourceSpec::photon_added(r, phi);
    } else if (family == "bell") {
        spec = ResourceSpec::bell(r, num("delta", 0.0), num("theta", 0.0), phi);
    } else if (family == "sssf") {
        spec = ResourceSpec::sssf(r, num("c0", 1.0), num("c1", 0.0),
                                  num("c2", 0.0), num("theta1", 0.0),
                                  num("theta2", 0.0), phi);
    } else if (family == "cat") {
        spec = ResourceSpec::squeezed_cat(
            r, num("delta", kPi / 4.0),
            {num("gamma_re", 1.0), num("gamma_im", 0.0)}, num("theta", 0.0),
            phi);
    } else {
        throw SpecError("unknown resource family '" + family + "'");
    }
    return spec.with_thermal(num("nth_a", 0.0), num("nth_b", 0.0));
}

ChannelSpec build_channel(ConfigFile& cfg) {
    const std::string kind = cfg.get_string_or("channel.kind", "ideal");
    auto num = [&](const char* leaf, double dflt) {
        return cfg.get_number_or(std::string("channel.") + leaf, dflt);
    };
    if (kind == "ideal") {
        return ChannelSpec::ideal(num("gx", 1.0), num("gp", 1.0));
    }
    if (kind == "asymmetric-bs") {
        return ChannelSpec::asymmetric_bs(cfg.get_number("channel.theta"),
                                          num("gx", 1.0), num("gp", 1.0));
    }
    if (kind == "imprecise") {
        return ChannelSpec::imprecise(cfg.get_number("channel.r_m"),
                                      cfg.get_number("channel.s_m"),
                                      num("gx", 1.0), num("gp", 1.0));
    }
    if (kind == "lossy-homodyne") {
        return ChannelSpec::lossy_homodyne(
            cfg.get_number("channel.phi_x"), cfg.get_number("channel.phi_p"),
            ExtMode{num("nbar_u", 0.0), num("s_u", 0.0)},
            ExtMode{num("nbar_v", 0.0), num("s_v", 0.0)});
    }
    throw SpecError("unknown channel kind '" + kind + "'");
}

QuadratureConfig build_quad(ConfigFile& cfg) {
    QuadratureConfig q;
    q.order = cfg.get_int_or("quad.order", q.order);
    q.order4 = cfg.get_int_or("quad.order4", q.order4);
    q.convergence = cfg.get_number_or("quad.convergence", q.convergence);
    q.envelope_scale =
        cfg.get_number_or("quad.envelope_scale", q.envelope_scale);
    return q;
}

ExperimentConfig build_experiment(ConfigFile& cfg) {
    ExperimentConfig out;
    out.config_hash = fnv1a_hex(cfg.raw_text());
    const std::string kind = cfg.get_string("experiment");
    if (kind == "fidelity-sweep") {
        out.kind = ExperimentConfig::Kind::FidelitySweep;
    } else if (kind == "optimize-sweep") {
        out.kind = ExperimentConfig::Kind::OptimizeSweep;
    } else if (kind == "measures-sweep") {
        out.kind = ExperimentConfig::Kind::MeasuresSweep;
    } else if (kind == "threshold-sweep") {
        out.kind = ExperimentConfig::Kind::ThresholdSweep;
    } else if (kind == "figure") {
        out.kind = ExperimentConfig::Kind::Figure;
    } else {
        throw SpecError("unknown experiment kind '" + kind + "'");
    }
    out.output_name = cfg.get_string_or("output.name", "");
    if (out.kind == ExperimentConfig::Kind::Figure) {
        out.figure_id = cfg.get_string("figure.id");
        cfg.finish();
        return out;
    }
    out.sweep_param = cfg.get_string("sweep.param");
    out.sweep_start = cfg.get_number("sweep.start");
    out.sweep_stop = cfg.get_number("sweep.stop");
    out.sweep_steps = cfg.get_int_or("sweep.steps", 0);
    if (out.sweep_steps < 2) {
        throw SpecError("sweep.steps must be at least 2");
    }
    require_finite(out.sweep_start, "sweep.start");
    require_finite(out.sweep_stop, "sweep.stop");
    out.quad = build_quad(cfg);
    switch (out.kind) {
        case ExperimentConfig::Kind::FidelitySweep:
            out.input = build_input_group(cfg, "input.", true);
            out.resource = build_resource(cfg);
            out.channel = build_channel(cfg);
            break;
        case ExperimentConfig::Kind::OptimizeSweep:
            out.optimize_family = cfg.get_string("optimize.family");
            if (out.optimize_family != "bell" &&
                out.optimize_family != "sssf" &&
                out.optimize_family != "sssf-curve" &&
                out.optimize_family != "cat") {
                throw SpecError("optimize.family must be bell, sssf, "
                                "sssf-curve or cat");
            }
            out.input = cfg.has("input.kind")
                            ? build_input_group(cfg, "input.", true)
                            : InputStateSpec::coherent({1.0, 0.0});
            if (out.optimize_family == "cat" &&
                out.input.kind != InputStateSpec::Kind::Coherent) {
                throw SpecError(
                    "cat optimization is defined for coherent inputs only");
            }
            out.resource = build_resource(cfg);
            break;
        case ExperimentConfig::Kind::MeasuresSweep:
            out.resource = build_resource(cfg);
            break;
        case ExperimentConfig::Kind::ThresholdSweep:
            out.threshold_family = cfg.get_string("threshold.family");
            if (out.threshold_family != "tmsv" &&
                out.threshold_family != "bell" &&
                out.threshold_family != "cat") {
                throw SpecError(
                    "threshold.family must be tmsv, bell or cat");
            }
            out.resource = build_resource(cfg);
            break;
        case ExperimentConfig::Kind::Figure:
            break;
    }
    cfg.finish();
    return out;
}

}  // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
    ConfigFile cfg = ConfigFile::parse_file(path);
    return build_experiment(cfg);
}

ExperimentConfig experiment_config_from_text(const std::string& text) {
    ConfigFile cfg = ConfigFile::parse_text(text);
    return build_experiment(cfg);
}

}  // namespace cvqt
