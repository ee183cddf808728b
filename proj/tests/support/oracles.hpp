#pragma once

// Independent reference implementations used only by tests. Every routine
// here goes through the adaptive integrator instead of the fixed quadrature
// rules under test, so the production path and the oracle path share no
// algorithm beyond the Gamma CDF series.

#include <cmath>
#include <limits>

#include "noma/cdf.hpp"
#include "noma/config.hpp"
#include "noma/integrate.hpp"
#include "noma/outage.hpp"
#include "noma/sinr.hpp"
#include "noma/special.hpp"

namespace oracle {

/// Unordered effective-gain CDF by adaptive integration over the disk radius.
inline double exact_unordered_cdf(double z, const noma::SystemConfig& cfg,
                                  double tol = 1e-10) {
    if (z <= 0.0) return 0.0;
    const double r2 = cfg.disk_radius * cfg.disk_radius;
    const double value = noma::adaptive_integrate(
        [&](double r) {
            return noma::gamma_cdf_unit(z * (1.0 + std::pow(r, cfg.path_loss_exp)) / cfg.freq_factor,
                                        cfg.num_subcarriers) *
                   r;
        },
        0.0, cfg.disk_radius, tol);
    return 2.0 / r2 * value;
}

inline double exact_ordered_cdf(double z, int order, const noma::SystemConfig& cfg,
                                double tol = 1e-10) {
    return noma::order_statistic_mix(exact_unordered_cdf(z, cfg, tol), order, cfg.num_users);
}

/// Strong-user outage under imperfect SIC with the exact CDF inside and
/// adaptive integration over the residual-interference power.
inline double exact_strong_ipsic_outage(const noma::SystemConfig& cfg, double snr,
                                        double tol = 1e-8) {
    const noma::ThresholdSet t = noma::derive_thresholds(cfg, snr);
    const int shape = cfg.num_subcarriers;
    const double omega = cfg.ri_mean_power;
    double fact = 1.0;
    for (int v = 2; v < shape; ++v) fact *= v;
    const double norm = fact * noma::ipow(omega, shape);
    return noma::adaptive_integrate(
        [&](double y) {
            return noma::ipow(y, shape - 1) * std::exp(-y / omega) / norm *
                   exact_ordered_cdf(t.ri_gain_slope * y + t.strong_gain_min, cfg.strong_order,
                                     cfg, 1e-10);
        },
        0.0, std::numeric_limits<double>::infinity(), tol, omega);
}

/// Same integrand as the production Laguerre evaluation (Chebyshev CDF
/// inside), integrated adaptively over the residual power: isolates the
/// Laguerre substitution itself.
inline double adaptive_ri_average(const noma::SystemConfig& cfg, double gain_offset,
                                  double ri_slope, const noma::QuadratureRules& rules,
                                  double tol = 1e-9) {
    const int shape = cfg.num_subcarriers;
    const double omega = cfg.ri_mean_power;
    double fact = 1.0;
    for (int v = 2; v < shape; ++v) fact *= v;
    const double norm = fact * noma::ipow(omega, shape);
    return noma::adaptive_integrate(
        [&](double y) {
            return noma::ipow(y, shape - 1) * std::exp(-y / omega) / norm *
                   noma::ordered_gain_cdf(ri_slope * y + gain_offset, cfg.strong_order, cfg,
                                          rules.chebyshev);
        },
        0.0, std::numeric_limits<double>::infinity(), tol, omega);
}

}  // namespace oracle
