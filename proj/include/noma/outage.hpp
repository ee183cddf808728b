#pragma once

#include <cmath>
#include <stdexcept>

#include "noma/cdf.hpp"
#include "noma/config.hpp"
#include "noma/quadrature.hpp"
#include "noma/sinr.hpp"
#include "noma/special.hpp"

namespace noma {

/// Precomputed quadrature rules for one configuration; immutable and shared
/// across a sweep.
struct QuadratureRules {
    ChebyshevRule chebyshev;
    LaguerreRule laguerre;
};

inline QuadratureRules make_rules(const SystemConfig& cfg) {
    return {chebyshev_rule(cfg.chebyshev_order, cfg.disk_radius, cfg.path_loss_exp),
            laguerre_rule(cfg.laguerre_order)};
}

/// Outage probability of the weak (far) user: the ordered-gain CDF at the
/// gain threshold implied by its own target SINR. Exactly 1 when the power
/// split cannot support the weak user's rate at any gain.
inline double weak_user_outage(const SystemConfig& cfg, double snr,
                               const QuadratureRules& rules) {
    const ThresholdSet t = derive_thresholds(cfg, snr);
    if (!t.power_split_feasible) return 1.0;
    return ordered_gain_cdf(*t.weak_gain_min, cfg.weak_order, cfg, rules.chebyshev);
}

/// Ordered-gain CDF of the strong user averaged over the residual-interference
/// power Y ~ Gamma(K, omega):  E_Y[ F_(n)(ri_slope * Y + gain_offset) ],
/// evaluated with the Laguerre rule after substituting t = y / omega.
/// Exposed separately so the perfect-SIC reduction can be checked against the
/// closed form.
inline double ri_averaged_strong_outage(const SystemConfig& cfg, double gain_offset,
                                        double ri_slope, const QuadratureRules& rules) {
    const int shape = cfg.num_subcarriers;
    double fact = 1.0;  // (K-1)!
    for (int v = 2; v < shape; ++v) fact *= v;
    double acc = 0.0;
    for (int l = 0; l < rules.laguerre.order; ++l) {
        const double t = rules.laguerre.nodes[l];
        const double z = ri_slope * cfg.ri_mean_power * t + gain_offset;
        acc += rules.laguerre.weights[l] * ipow(t, shape - 1) / fact *
               ordered_gain_cdf(z, cfg.strong_order, cfg, rules.chebyshev);
    }
    return std::clamp(acc, 0.0, 1.0);
}

/// Outage probability of the strong (near) user. Perfect SIC uses the
/// closed-form ordered CDF at beta; imperfect SIC averages over the residual
/// interference. Exactly 1 when the power split is infeasible (the strong
/// user can then never decode the weak user's signal, the first outage case).
inline double strong_user_outage(const SystemConfig& cfg, double snr,
                                 const QuadratureRules& rules) {
    const ThresholdSet t = derive_thresholds(cfg, snr);
    if (!t.power_split_feasible) return 1.0;
    if (cfg.sic == SicMode::perfect || cfg.ri_mean_power == 0.0)
        return ordered_gain_cdf(t.strong_gain_min, cfg.strong_order, cfg, rules.chebyshev);
    return ri_averaged_strong_outage(cfg, t.strong_gain_min, t.ri_gain_slope, rules);
}

/// High-SNR behaviour of an outage curve: the leading-order value, the slope
/// it decays with (diversity order) and whether it is SNR-independent.
struct AsymptoteResult {
    double value = 0.0;
    double diversity = 0.0;
    bool floor = false;
};

namespace detail {

// Leading-order ordered CDF: (M! / ((M-k)! k!)) [sum_u (b_u/K!) (z c_u/eta)^K]^k.
inline double leading_order_outage(double z, int order, const SystemConfig& cfg,
                                   const ChebyshevRule& rule) {
    double fact = 1.0;  // K!
    for (int v = 2; v <= cfg.num_subcarriers; ++v) fact *= v;
    double inner = 0.0;
    for (int u = 0; u < rule.order; ++u)
        inner += rule.weights[u] / fact *
                 ipow(z * rule.loss[u] / cfg.freq_factor, cfg.num_subcarriers);
    double comb = 1.0;  // M! / ((M-k)! k!)
    for (int v = 1; v <= order; ++v) comb *= double(cfg.num_users - order + v) / v;
    return comb * ipow(inner, order);
}

}  // namespace detail

/// Leading-order weak-user outage; decays with diversity m K. Undefined for an
/// infeasible power split.
inline AsymptoteResult weak_user_outage_asymptote(const SystemConfig& cfg, double snr,
                                                  const QuadratureRules& rules) {
    const ThresholdSet t = derive_thresholds(cfg, snr);
    if (!t.power_split_feasible)
        throw std::domain_error("weak_user_outage_asymptote: power split infeasible, "
                                "asymptote undefined");
    return {detail::leading_order_outage(*t.weak_gain_min, cfg.weak_order, cfg, rules.chebyshev),
            double(cfg.weak_order) * cfg.num_subcarriers, false};
}

/// Strong-user asymptote. Perfect SIC decays with diversity n K; imperfect SIC
/// saturates at the SNR-independent error floor obtained by dropping the beta
/// term from the residual-interference average.
inline AsymptoteResult strong_user_outage_asymptote(const SystemConfig& cfg, double snr,
                                                    const QuadratureRules& rules) {
    const ThresholdSet t = derive_thresholds(cfg, snr);
    if (cfg.sic == SicMode::imperfect && cfg.ri_mean_power > 0.0)
        return {ri_averaged_strong_outage(cfg, 0.0, t.ri_gain_slope, rules), 0.0, true};
    return {detail::leading_order_outage(t.strong_gain_min, cfg.strong_order, cfg,
                                         rules.chebyshev),
            double(cfg.strong_order) * cfg.num_subcarriers, false};
}

/// Which rate multiplies which user's success probability in the
/// delay-limited throughput. `as_written` pairs the weak user's success with
/// the strong user's rate (and vice versa); `swapped` uses the conventional
/// own-rate pairing. Both coincide when the target rates are equal.
enum class RatePairing { as_written, swapped };

inline double delay_limited_throughput(const SystemConfig& cfg, double snr,
                                       const QuadratureRules& rules,
                                       RatePairing pairing = RatePairing::as_written) {
    const double pm = weak_user_outage(cfg, snr, rules);
    const double pn = strong_user_outage(cfg, snr, rules);
    if (pairing == RatePairing::as_written)
        return (1.0 - pm) * cfg.strong_rate + (1.0 - pn) * cfg.weak_rate;
    return (1.0 - pm) * cfg.weak_rate + (1.0 - pn) * cfg.strong_rate;
}

// Convenience overloads that build the rules on the fly.
inline double weak_user_outage(const SystemConfig& cfg, double snr) {
    const QuadratureRules rules = make_rules(cfg);
    return weak_user_outage(cfg, snr, rules);
}

inline double strong_user_outage(const SystemConfig& cfg, double snr) {
    const QuadratureRules rules = make_rules(cfg);
    return strong_user_outage(cfg, snr, rules);
}

inline double delay_limited_throughput(const SystemConfig& cfg, double snr,
                                       RatePairing pairing = RatePairing::as_written) {
    const QuadratureRules rules = make_rules(cfg);
    return delay_limited_throughput(cfg, snr, rules, pairing);
}

}  // namespace noma
