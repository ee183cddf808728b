#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "noma/config.hpp"

namespace noma {

/// Decision thresholds at one transmit SNR, in linear units.
///
/// Gain-domain equivalences used by both the analytic formulas and the
/// trial logic:
///   sinr_weak(Z) >= weak_sinr_min     <=>  Z >= weak_gain_min
///   sinr_strong(Z, Y) <= strong_sinr_min  <=>  Z <= ri_gain_slope * Y + strong_gain_min
struct ThresholdSet {
    double snr = 0.0;               // rho
    double weak_sinr_min = 0.0;     // eps_m = 2^R_m - 1
    double strong_sinr_min = 0.0;   // eps_n = 2^R_n - 1
    std::optional<double> weak_gain_min;  // tau; absent when the power split is infeasible
    double strong_gain_min = 0.0;   // beta = eps_n / (rho a_n)
    double ri_gain_slope = 0.0;     // theta = varpi eps_n / a_n; 0 under perfect SIC
    bool power_split_feasible = true;  // a_m > eps_m a_n
};

/// SINR at the strong user while decoding the weak user's signal.
/// Bounded above by weak_power / strong_power.
inline double sinr_strong_decoding_weak(double gain, double snr,
                                        double weak_power, double strong_power) {
    return snr * gain * weak_power / (snr * gain * strong_power + 1.0);
}

/// SINR at the strong user decoding its own signal after SIC. Residual
/// interference enters only in imperfect mode.
inline double sinr_strong(double gain, double ri_power, double snr,
                          double strong_power, SicMode sic) {
    const double ri = (sic == SicMode::imperfect) ? snr * ri_power : 0.0;
    return snr * strong_power * gain / (ri + 1.0);
}

/// SINR at the weak user decoding its own signal (strong user's superposed
/// signal acts as interference). Same algebra as sinr_strong_decoding_weak.
inline double sinr_weak(double gain, double snr, double weak_power, double strong_power) {
    return snr * gain * weak_power / (snr * gain * strong_power + 1.0);
}

/// 2^rate - 1 without the cancellation of exp2(rate) - 1 at small rates.
inline double sinr_threshold_from_rate(double rate_bpcu) {
    return std::expm1(rate_bpcu * M_LN2);
}

inline ThresholdSet derive_thresholds(const SystemConfig& cfg, double snr) {
    if (!(snr > 0.0)) throw std::invalid_argument("derive_thresholds: snr must be positive");
    ThresholdSet t;
    t.snr = snr;
    t.weak_sinr_min = sinr_threshold_from_rate(cfg.weak_rate);
    t.strong_sinr_min = sinr_threshold_from_rate(cfg.strong_rate);
    t.power_split_feasible = cfg.weak_power > t.weak_sinr_min * cfg.strong_power;
    if (t.power_split_feasible)
        t.weak_gain_min = t.weak_sinr_min /
                          (snr * (cfg.weak_power - t.weak_sinr_min * cfg.strong_power));
    t.strong_gain_min = t.strong_sinr_min / (snr * cfg.strong_power);
    t.ri_gain_slope = (cfg.sic == SicMode::imperfect)
                          ? t.strong_sinr_min / cfg.strong_power
                          : 0.0;
    return t;
}

}  // namespace noma
