#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noma/config.hpp"
#include "noma/curve.hpp"
#include "noma/monte_carlo.hpp"
#include "noma/outage.hpp"
#include "noma/rng.hpp"

namespace noma {

/// Invalid experiment input (unknown key, malformed value, violated
/// constraint). The message names the offending field.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Quantity { weak_outage, strong_outage, oma_outage, throughput };
enum class Method { exact, asymptotic, monte_carlo };

inline std::string method_tag(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::asymptotic: return "asymptotic";
        default: return "mc";
    }
}

/// One requested curve: what to compute, how, and under which configuration
/// (an index into ExperimentSpec::configs so Monte Carlo runs are shared
/// between curves of the same configuration).
struct CurvePlan {
    Quantity quantity;
    Method method;
    std::size_t config_index;
    std::string label_quantity;
};

/// A fully parsed experiment: configurations, curve plans, SNR grid and
/// run controls.
struct ExperimentSpec {
    SystemConfig base;
    std::vector<SystemConfig> configs;
    std::vector<CurvePlan> curves;
    double snr_start_db = 0.0;
    double snr_stop_db = 45.0;
    double snr_step_db = 5.0;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 42;
    std::string out_dir = ".";
    std::string name = "run";
    std::string preset;  // empty when not a preset run
    bool svg = false;
    RatePairing pairing = RatePairing::as_written;
    std::vector<std::string> notes;  // metadata lines for the output header

    std::vector<double> snr_grid_db() const {
        std::vector<double> grid;
        const auto points =
            static_cast<std::size_t>((snr_stop_db - snr_start_db) / snr_step_db + 1e-9) + 1;
        grid.reserve(points);
        for (std::size_t i = 0; i < points; ++i) grid.push_back(snr_start_db + double(i) * snr_step_db);
        return grid;
    }

    bool wants_monte_carlo() const {
        for (const auto& c : curves)
            if (c.method == Method::monte_carlo) return true;
        return false;
    }

    void validate() const {
        base.validate();
        for (const auto& cfg : configs) cfg.validate();
        if (!(snr_step_db > 0.0)) throw ConfigError("snr_step_db must be > 0");
        if (!(snr_stop_db >= snr_start_db)) throw ConfigError("snr_stop_db must be >= snr_start_db");
        if (wants_monte_carlo() && trials < 1000)
            throw ConfigError("trials must be >= 1000 when Monte Carlo curves are requested");
        for (const auto& c : curves)
            if (c.config_index >= configs.size())
                throw ConfigError("curve references a missing configuration");
    }
};

namespace detail {

inline double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        while (used < value.size() && std::isspace(static_cast<unsigned char>(value[used]))) ++used;
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("malformed numeric value for '" + key + "': '" + value + "'");
    }
}

inline std::uint64_t parse_count(const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1.8e19)
        throw ConfigError("'" + key + "' must be a nonnegative integer, got '" + value + "'");
    return static_cast<std::uint64_t>(v);
}

inline bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("'" + key + "' must be a boolean, got '" + value + "'");
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace detail

/// Adds the standard curve set for one configuration: exact m/n, asymptotes
/// and optionally the Monte Carlo counterparts.
inline void add_pair_curves(ExperimentSpec& spec, const SystemConfig& cfg,
                            const std::string& weak_label, const std::string& strong_label,
                            bool with_asymptotes, bool with_mc) {
    const std::size_t idx = spec.configs.size();
    spec.configs.push_back(cfg);
    spec.curves.push_back({Quantity::weak_outage, Method::exact, idx, weak_label});
    spec.curves.push_back({Quantity::strong_outage, Method::exact, idx, strong_label});
    if (with_asymptotes) {
        spec.curves.push_back({Quantity::weak_outage, Method::asymptotic, idx, weak_label});
        spec.curves.push_back({Quantity::strong_outage, Method::asymptotic, idx, strong_label});
    }
    if (with_mc) {
        spec.curves.push_back({Quantity::weak_outage, Method::monte_carlo, idx, weak_label});
        spec.curves.push_back({Quantity::strong_outage, Method::monte_carlo, idx, strong_label});
    }
}

/// Builds the preset curve families that reproduce the reference figures.
inline void apply_preset(ExperimentSpec& spec, const std::string& preset) {
    spec.configs.clear();
    spec.curves.clear();
    spec.preset = preset;
    spec.name = preset;
    SystemConfig base = spec.base;
    if (preset == "fig1") {
        // Outage of the user pair, K = 2, pSIC vs ipSIC at -30/-20 dB RI.
        base.scheme = Scheme::cd;
        base.num_subcarriers = 2;
        SystemConfig perfect = base;
        perfect.sic = SicMode::perfect;
        add_pair_curves(spec, perfect, "m", "n_psic", true, true);
        for (double om_db : {-30.0, -20.0}) {
            SystemConfig imperfect = base;
            imperfect.sic = SicMode::imperfect;
            imperfect.ri_mean_power = db_to_linear(om_db);
            const std::string tag = "n_ipsic_ri" + std::to_string(int(om_db)) + "dB";
            const std::size_t idx = spec.configs.size();
            spec.configs.push_back(imperfect);
            spec.curves.push_back({Quantity::strong_outage, Method::exact, idx, tag});
            spec.curves.push_back({Quantity::strong_outage, Method::asymptotic, idx, tag});
            spec.curves.push_back({Quantity::strong_outage, Method::monte_carlo, idx, tag});
        }
        spec.curves.push_back({Quantity::oma_outage, Method::monte_carlo, 0, "oma"});
    } else if (preset == "fig2") {
        // Subcarrier-count comparison: power-domain (K=1) against K=3.
        for (int k : {1, 3}) {
            SystemConfig cfg = base;
            cfg.num_subcarriers = k;
            cfg.scheme = (k == 1) ? Scheme::pd : Scheme::cd;
            const std::string prefix = (k == 1) ? "pd" : "k3";
            SystemConfig perfect = cfg;
            perfect.sic = SicMode::perfect;
            add_pair_curves(spec, perfect, prefix + "_m", prefix + "_n_psic", true, true);
            SystemConfig imperfect = cfg;
            imperfect.sic = SicMode::imperfect;
            imperfect.ri_mean_power = db_to_linear(-30.0);
            const std::size_t idx = spec.configs.size();
            spec.configs.push_back(imperfect);
            spec.curves.push_back(
                {Quantity::strong_outage, Method::exact, idx, prefix + "_n_ipsic_ri-30dB"});
            spec.curves.push_back(
                {Quantity::strong_outage, Method::asymptotic, idx, prefix + "_n_ipsic_ri-30dB"});
            spec.curves.push_back(
                {Quantity::strong_outage, Method::monte_carlo, idx, prefix + "_n_ipsic_ri-30dB"});
            spec.curves.push_back({Quantity::oma_outage, Method::monte_carlo, idx - 1,
                                   prefix + "_oma"});
        }
    } else if (preset == "fig3") {
        // Target-rate families at K = 2. The rate set is illustrative only.
        base.scheme = Scheme::cd;
        base.num_subcarriers = 2;
        spec.notes.push_back(
            "rate set {0.01, 0.5, 1} BPCU is illustrative, not a reference value");
        for (double rate : {0.01, 0.5, 1.0}) {
            SystemConfig cfg = base;
            cfg.weak_rate = cfg.strong_rate = rate;
            std::ostringstream prefix;
            prefix << "r" << rate;
            SystemConfig perfect = cfg;
            perfect.sic = SicMode::perfect;
            add_pair_curves(spec, perfect, prefix.str() + "_m", prefix.str() + "_n_psic",
                            false, true);
            SystemConfig imperfect = cfg;
            imperfect.sic = SicMode::imperfect;
            imperfect.ri_mean_power = db_to_linear(-30.0);
            const std::size_t idx = spec.configs.size();
            spec.configs.push_back(imperfect);
            spec.curves.push_back({Quantity::strong_outage, Method::exact, idx,
                                   prefix.str() + "_n_ipsic_ri-30dB"});
            spec.curves.push_back({Quantity::strong_outage, Method::monte_carlo, idx,
                                   prefix.str() + "_n_ipsic_ri-30dB"});
        }
    } else if (preset == "fig4") {
        // Delay-limited throughput, code-domain (K=2) vs power-domain (K=1).
        for (int k : {2, 1}) {
            SystemConfig cfg = base;
            cfg.num_subcarriers = k;
            cfg.scheme = (k == 1) ? Scheme::pd : Scheme::cd;
            const std::string prefix = (k == 1) ? "pd" : "cd";
            SystemConfig perfect = cfg;
            perfect.sic = SicMode::perfect;
            std::size_t idx = spec.configs.size();
            spec.configs.push_back(perfect);
            spec.curves.push_back(
                {Quantity::throughput, Method::exact, idx, prefix + "_psic_throughput"});
            spec.curves.push_back(
                {Quantity::throughput, Method::monte_carlo, idx, prefix + "_psic_throughput"});
            for (double om_db : {-30.0, -20.0}) {
                SystemConfig imperfect = cfg;
                imperfect.sic = SicMode::imperfect;
                imperfect.ri_mean_power = db_to_linear(om_db);
                const std::string tag =
                    prefix + "_ipsic_ri" + std::to_string(int(om_db)) + "dB_throughput";
                idx = spec.configs.size();
                spec.configs.push_back(imperfect);
                spec.curves.push_back({Quantity::throughput, Method::exact, idx, tag});
                spec.curves.push_back({Quantity::throughput, Method::monte_carlo, idx, tag});
            }
        }
    } else {
        throw ConfigError("unknown preset '" + preset + "' (expected fig1|fig2|fig3|fig4)");
    }
}

/// Resolves the `curves` selection tokens of a plain (non-preset) run.
inline void apply_curve_tokens(ExperimentSpec& spec, const std::vector<std::string>& tokens) {
    spec.configs.clear();
    spec.curves.clear();
    spec.configs.push_back(spec.base);
    const std::string strong_tag =
        spec.base.sic == SicMode::imperfect ? "n_ipsic" : "n_psic";
    for (const auto& tok : tokens) {
        if (tok == "m_exact")
            spec.curves.push_back({Quantity::weak_outage, Method::exact, 0, "m"});
        else if (tok == "m_asym")
            spec.curves.push_back({Quantity::weak_outage, Method::asymptotic, 0, "m"});
        else if (tok == "m_mc")
            spec.curves.push_back({Quantity::weak_outage, Method::monte_carlo, 0, "m"});
        else if (tok == "n_exact")
            spec.curves.push_back({Quantity::strong_outage, Method::exact, 0, strong_tag});
        else if (tok == "n_asym")
            spec.curves.push_back({Quantity::strong_outage, Method::asymptotic, 0, strong_tag});
        else if (tok == "n_mc")
            spec.curves.push_back({Quantity::strong_outage, Method::monte_carlo, 0, strong_tag});
        else if (tok == "oma_mc")
            spec.curves.push_back({Quantity::oma_outage, Method::monte_carlo, 0, "oma"});
        else if (tok == "throughput")
            spec.curves.push_back({Quantity::throughput, Method::exact, 0, "throughput"});
        else if (tok == "throughput_mc")
            spec.curves.push_back({Quantity::throughput, Method::monte_carlo, 0, "throughput"});
        else
            throw ConfigError("unknown curve token '" + tok +
                              "' (expected m_exact|m_asym|m_mc|n_exact|n_asym|n_mc|"
                              "oma_mc|throughput|throughput_mc)");
    }
}

/// Optional command-line overrides applied after the file is parsed.
struct ExperimentOverrides {
    std::optional<std::string> preset;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<bool> svg;
};

/// Parses the flat `key = value` experiment format (# starts a comment).
/// Unknown keys are rejected by name; defaults reproduce the reference
/// configuration (a_m = 0.8, a_n = 0.2, R = 0.01 BPCU, alpha = 2, R_D = 2,
/// U = 15, 1 GHz carrier, M = 3, m = 1, n = 2, K = 2).
inline ExperimentSpec parse_experiment(std::istream& in,
                                       const ExperimentOverrides& overrides = {}) {
    ExperimentSpec spec;
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        if (!kv.emplace(key, value).second)
            throw ConfigError("duplicate key '" + key + "'");
    }

    static const std::set<std::string> known = {
        "M", "K", "m", "n", "scheme", "a_m", "a_n", "R_m", "R_n", "R_D", "alpha",
        "carrier_hz", "eta", "omega_I", "omega_I_db", "sic", "U", "L",
        "snr_start_db", "snr_stop_db", "snr_step_db", "curves", "trials", "seed",
        "out_dir", "name", "svg", "throughput_pairing", "preset"};
    for (const auto& [key, value] : kv)
        if (!known.count(key)) throw ConfigError("unknown key '" + key + "'");
    if (kv.count("eta") && kv.count("carrier_hz"))
        throw ConfigError("'eta' and 'carrier_hz' are mutually exclusive");
    if (kv.count("omega_I") && kv.count("omega_I_db"))
        throw ConfigError("'omega_I' and 'omega_I_db' are mutually exclusive");

    auto get = [&](const char* key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };

    SystemConfig& cfg = spec.base;
    if (auto v = get("M")) cfg.num_users = int(detail::parse_count("M", *v));
    if (auto v = get("K")) cfg.num_subcarriers = int(detail::parse_count("K", *v));
    if (auto v = get("m")) cfg.weak_order = int(detail::parse_count("m", *v));
    if (auto v = get("n")) cfg.strong_order = int(detail::parse_count("n", *v));
    if (auto v = get("scheme")) {
        if (*v == "CD" || *v == "cd") cfg.scheme = Scheme::cd;
        else if (*v == "PD" || *v == "pd") cfg.scheme = Scheme::pd;
        else throw ConfigError("'scheme' must be CD or PD, got '" + *v + "'");
        if (cfg.scheme == Scheme::pd && !kv.count("K")) cfg.num_subcarriers = 1;
    }
    if (auto v = get("a_m")) cfg.weak_power = detail::parse_number("a_m", *v);
    if (auto v = get("a_n")) cfg.strong_power = detail::parse_number("a_n", *v);
    if (auto v = get("R_m")) cfg.weak_rate = detail::parse_number("R_m", *v);
    if (auto v = get("R_n")) cfg.strong_rate = detail::parse_number("R_n", *v);
    if (auto v = get("R_D")) cfg.disk_radius = detail::parse_number("R_D", *v);
    if (auto v = get("alpha")) cfg.path_loss_exp = detail::parse_number("alpha", *v);
    if (auto v = get("carrier_hz")) {
        const double fc = detail::parse_number("carrier_hz", *v);
        if (!(fc > 0.0)) throw ConfigError("'carrier_hz' must be positive");
        cfg.freq_factor = eta_from_carrier(fc);
    }
    if (auto v = get("eta")) cfg.freq_factor = detail::parse_number("eta", *v);
    if (auto v = get("omega_I")) cfg.ri_mean_power = detail::parse_number("omega_I", *v);
    if (auto v = get("omega_I_db"))
        cfg.ri_mean_power = db_to_linear(detail::parse_number("omega_I_db", *v));
    if (auto v = get("sic")) {
        if (*v == "perfect") cfg.sic = SicMode::perfect;
        else if (*v == "imperfect") cfg.sic = SicMode::imperfect;
        else throw ConfigError("'sic' must be perfect or imperfect, got '" + *v + "'");
    }
    if (auto v = get("U")) cfg.chebyshev_order = int(detail::parse_count("U", *v));
    if (auto v = get("L")) cfg.laguerre_order = int(detail::parse_count("L", *v));

    if (auto v = get("snr_start_db")) spec.snr_start_db = detail::parse_number("snr_start_db", *v);
    if (auto v = get("snr_stop_db")) spec.snr_stop_db = detail::parse_number("snr_stop_db", *v);
    if (auto v = get("snr_step_db")) spec.snr_step_db = detail::parse_number("snr_step_db", *v);
    if (auto v = get("trials")) spec.trials = detail::parse_count("trials", *v);
    if (auto v = get("seed")) spec.seed = detail::parse_count("seed", *v);
    if (auto v = get("out_dir")) spec.out_dir = *v;
    if (auto v = get("name")) spec.name = *v;
    if (auto v = get("svg")) spec.svg = detail::parse_bool("svg", *v);
    if (auto v = get("throughput_pairing")) {
        if (*v == "as_written") spec.pairing = RatePairing::as_written;
        else if (*v == "swapped") spec.pairing = RatePairing::swapped;
        else throw ConfigError("'throughput_pairing' must be as_written or swapped");
    }

    if (overrides.trials) spec.trials = *overrides.trials;
    if (overrides.seed) spec.seed = *overrides.seed;
    if (overrides.out_dir) spec.out_dir = *overrides.out_dir;
    if (overrides.svg) spec.svg = *overrides.svg;

    std::optional<std::string> preset;
    if (auto v = get("preset")) preset = *v;
    if (overrides.preset) preset = *overrides.preset;

    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    if (preset) {
        apply_preset(spec, *preset);
        if (auto v = get("name")) spec.name = *v;  // explicit name wins over the preset stem
    } else {
        std::vector<std::string> tokens = {"m_exact", "n_exact", "m_asym", "n_asym"};
        if (auto v = get("curves")) tokens = detail::split_list(*v);
        apply_curve_tokens(spec, tokens);
    }
    spec.validate();
    return spec;
}

inline ExperimentSpec parse_experiment_file(const std::string& path,
                                            const ExperimentOverrides& overrides = {}) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    ExperimentSpec spec = parse_experiment(in, overrides);
    if (spec.name == "run" && spec.preset.empty()) {
        // derive a stem from the file name
        auto slash = path.find_last_of("/\\");
        std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
        const auto dot = stem.find_last_of('.');
        if (dot != std::string::npos && dot > 0) stem.erase(dot);
        if (!stem.empty()) spec.name = stem;
    }
    return spec;
}

/// Evaluates every requested curve over the SNR grid. Monte Carlo estimates
/// are computed once per (configuration, grid point) and shared between the
/// curves that need them; each point uses an independent stream derived from
/// the experiment seed, so reruns are bit-identical for any worker count.
inline std::vector<OutageCurve> run_sweep(ExperimentSpec& spec) {
    spec.validate();
    const std::vector<double> grid = spec.snr_grid_db();
    std::vector<QuadratureRules> rules;
    rules.reserve(spec.configs.size());
    for (const auto& cfg : spec.configs) rules.push_back(make_rules(cfg));

    // Per-config Monte Carlo caches, filled lazily.
    std::vector<std::vector<PairedEstimate>> pair_cache(spec.configs.size());
    std::vector<std::vector<OutageEstimate>> oma_cache(spec.configs.size());
    auto paired = [&](std::size_t ci, std::size_t gi) -> const PairedEstimate& {
        auto& cache = pair_cache[ci];
        if (cache.empty()) {
            cache.resize(grid.size());
            for (std::size_t g = 0; g < grid.size(); ++g)
                cache[g] = estimate_outage(spec.configs[ci], db_to_linear(grid[g]), spec.trials,
                                           mix_seed(spec.seed, ci * 65537 + g));
        }
        return cache[gi];
    };
    auto oma = [&](std::size_t ci, std::size_t gi) -> const OutageEstimate& {
        auto& cache = oma_cache[ci];
        if (cache.empty()) {
            cache.resize(grid.size());
            for (std::size_t g = 0; g < grid.size(); ++g)
                cache[g] = estimate_oma_outage(spec.configs[ci], db_to_linear(grid[g]),
                                               spec.trials,
                                               mix_seed(spec.seed, 0xA0000000ULL + ci * 65537 + g));
        }
        return cache[gi];
    };

    std::set<std::string> warned;
    std::vector<OutageCurve> curves;
    curves.reserve(spec.curves.size());
    for (const auto& plan : spec.curves) {
        const SystemConfig& cfg = spec.configs[plan.config_index];
        const QuadratureRules& rule = rules[plan.config_index];
        OutageCurve curve;
        curve.snr_grid_db = grid;
        curve.quantity = plan.label_quantity;
        curve.method = method_tag(plan.method);
        curve.values.reserve(grid.size());
        try {
        for (std::size_t g = 0; g < grid.size(); ++g) {
            const double rho = db_to_linear(grid[g]);
            double value = 0.0;
            switch (plan.quantity) {
                case Quantity::weak_outage:
                    value = plan.method == Method::exact ? weak_user_outage(cfg, rho, rule)
                            : plan.method == Method::asymptotic
                                ? weak_user_outage_asymptote(cfg, rho, rule).value
                                : paired(plan.config_index, g).weak.p_hat;
                    break;
                case Quantity::strong_outage: {
                    if (plan.method == Method::exact) {
                        const ThresholdSet t = derive_thresholds(cfg, rho);
                        if (t.power_split_feasible && t.weak_gain_min &&
                            t.strong_gain_min < *t.weak_gain_min &&
                            warned.insert(plan.label_quantity).second)
                            spec.notes.push_back(
                                "curve " + plan.label_quantity +
                                ": beta < tau, closed form assumes the SIC threshold "
                                "dominates; Monte Carlo is authoritative here");
                        value = strong_user_outage(cfg, rho, rule);
                    } else if (plan.method == Method::asymptotic) {
                        value = strong_user_outage_asymptote(cfg, rho, rule).value;
                    } else {
                        value = paired(plan.config_index, g).strong.p_hat;
                    }
                    break;
                }
                case Quantity::oma_outage:
                    value = oma(plan.config_index, g).p_hat;
                    break;
                case Quantity::throughput:
                    if (plan.method == Method::exact) {
                        value = delay_limited_throughput(cfg, rho, rule, spec.pairing);
                    } else {
                        const PairedEstimate& est = paired(plan.config_index, g);
                        value = spec.pairing == RatePairing::as_written
                                    ? (1.0 - est.weak.p_hat) * cfg.strong_rate +
                                          (1.0 - est.strong.p_hat) * cfg.weak_rate
                                    : (1.0 - est.weak.p_hat) * cfg.weak_rate +
                                          (1.0 - est.strong.p_hat) * cfg.strong_rate;
                    }
                    break;
            }
            curve.values.push_back(value);
        }
        } catch (const std::domain_error& e) {
            throw std::domain_error("curve " + curve.label() + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("curve " + curve.label() + ": " + e.what());
        } catch (const std::runtime_error& e) {
            throw std::runtime_error("curve " + curve.label() + ": " + e.what());
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

}  // namespace noma
