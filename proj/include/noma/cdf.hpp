#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "noma/config.hpp"
#include "noma/quadrature.hpp"
#include "noma/special.hpp"

namespace noma {

/// Maps the CDF value F of one unordered gain to the CDF of the k-th smallest
/// of `num_users` i.i.d. gains:
///   phi_k sum_{p=0}^{M-k} C(M-k, p) (-1)^p / (k+p) F^{k+p},
///   phi_k = M! / ((M-k)! (k-1)!).
/// The alternating sum is accumulated largest-magnitude-first with
/// compensation; benign for the M <= 10 cluster sizes used here.
inline double order_statistic_mix(double cdf_value, int order, int num_users) {
    if (order < 1 || order > num_users)
        throw std::invalid_argument("order_statistic_mix: order must be in [1, num_users]");
    double phi = 1.0;  // M! / ((M-k)! (k-1)!)
    for (int v = num_users - order + 1; v <= num_users; ++v) phi *= v;
    for (int v = 2; v <= order - 1; ++v) phi /= v;
    const int span = num_users - order;
    std::vector<double> terms(span + 1);
    double binom = 1.0;
    double fpow = ipow(cdf_value, order);
    for (int p = 0; p <= span; ++p) {
        terms[p] = (p % 2 == 0 ? 1.0 : -1.0) * binom * fpow / (order + p);
        binom *= double(span - p) / double(p + 1);
        fpow *= cdf_value;
    }
    const double mixed = phi * compensated_descending_sum(terms);
    return std::clamp(mixed, 0.0, 1.0);
}

/// CDF of one user's effective gain, averaged over the user's random position
/// on the disk with the Gauss-Chebyshev rule:
///   F~(z) ~= sum_u b_u GammaCDF_K(z c_u / eta).
inline double unordered_gain_cdf(double z, const SystemConfig& cfg, const ChebyshevRule& rule) {
    if (z <= 0.0) return 0.0;
    double acc = 0.0;
    for (int u = 0; u < rule.order; ++u)
        acc += rule.weights[u] *
               gamma_cdf_unit(z * rule.loss[u] / cfg.freq_factor, cfg.num_subcarriers);
    return std::clamp(acc, 0.0, 1.0);
}

/// CDF of the `order`-th smallest effective gain among the cluster's users.
inline double ordered_gain_cdf(double z, int order, const SystemConfig& cfg,
                               const ChebyshevRule& rule) {
    return order_statistic_mix(unordered_gain_cdf(z, cfg, rule), order, cfg.num_users);
}

}  // namespace noma
