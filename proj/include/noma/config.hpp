#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace noma {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Code-domain (spread over K subcarriers) vs power-domain (K = 1) operation.
enum class Scheme { cd, pd };

/// Perfect vs imperfect successive interference cancellation at the strong user.
enum class SicMode { perfect, imperfect };

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }

/// Free-space frequency factor at reference distance 1 m: (c / 4 pi f_c)^2.
inline double eta_from_carrier(double carrier_hz) {
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("eta_from_carrier: carrier_hz must be positive");
    const double v = kSpeedOfLight / (4.0 * M_PI * carrier_hz);
    return v * v;
}

/// All physical and protocol parameters of one downlink cluster.
///
/// A base station at the centre of a disk of radius `disk_radius` serves
/// `num_users` users; the pair selected for non-orthogonal transmission are
/// the `weak_order`-th and `strong_order`-th users in ascending order of
/// effective channel gain. Superposition power splits are `weak_power` /
/// `strong_power`; gains combine `num_subcarriers` subcarriers.
struct SystemConfig {
    int num_users = 3;        // M
    int num_subcarriers = 2;  // K (pd scheme forces 1)
    int weak_order = 1;       // order-statistic index of the far user
    int strong_order = 2;     // order-statistic index of the near user
    double disk_radius = 2.0;     // metres
    double path_loss_exp = 2.0;   // alpha
    double freq_factor = eta_from_carrier(1e9);  // eta, linear
    double weak_power = 0.8;      // fraction of transmit power for the weak user
    double strong_power = 0.2;    // fraction for the strong user
    double weak_rate = 0.01;      // target rate, bits per channel use
    double strong_rate = 0.01;    // target rate, bits per channel use
    double ri_mean_power = 1e-3;  // residual-interference mean power per subcarrier, linear
    SicMode sic = SicMode::perfect;
    Scheme scheme = Scheme::cd;
    int chebyshev_order = 15;  // disk-integral quadrature points
    int laguerre_order = 64;   // residual-interference quadrature points

    /// Throws std::invalid_argument naming the offending field.
    void validate() const {
        if (num_users < 1) throw std::invalid_argument("num_users (M) must be >= 1");
        if (num_subcarriers < 1) throw std::invalid_argument("num_subcarriers (K) must be >= 1");
        if (scheme == Scheme::pd && num_subcarriers != 1)
            throw std::invalid_argument("scheme pd requires num_subcarriers (K) == 1");
        if (!(weak_order >= 1 && weak_order < strong_order && strong_order <= num_users))
            throw std::invalid_argument("user orders must satisfy 1 <= m < n <= M "
                                        "(weak_order, strong_order, num_users)");
        if (!(weak_power > strong_power && strong_power > 0.0))
            throw std::invalid_argument("power split must satisfy a_m > a_n > 0 "
                                        "(weak_power, strong_power)");
        if (std::abs(weak_power + strong_power - 1.0) > 1e-9)
            throw std::invalid_argument("power split must satisfy a_m + a_n = 1 "
                                        "(weak_power, strong_power)");
        if (!(weak_rate >= 0.0)) throw std::invalid_argument("weak_rate (R_m) must be >= 0");
        if (!(strong_rate >= 0.0)) throw std::invalid_argument("strong_rate (R_n) must be >= 0");
        if (!(disk_radius > 0.0)) throw std::invalid_argument("disk_radius (R_D) must be > 0");
        if (!(path_loss_exp > 0.0)) throw std::invalid_argument("path_loss_exp (alpha) must be > 0");
        if (!(freq_factor > 0.0)) throw std::invalid_argument("freq_factor (eta) must be > 0");
        if (!(ri_mean_power >= 0.0)) throw std::invalid_argument("ri_mean_power (Omega_I) must be >= 0");
        if (chebyshev_order < 1) throw std::invalid_argument("chebyshev_order (U) must be >= 1");
        if (laguerre_order < 1) throw std::invalid_argument("laguerre_order (L) must be >= 1");
    }
};

}  // namespace noma
