#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "noma/config.hpp"
#include "noma/rng.hpp"
#include "noma/sinr.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace noma;

namespace {

SystemConfig reference_config() {
    SystemConfig cfg;  // defaults are the reference setup
    return cfg;
}

}  // namespace

TEST_CASE("eta from carrier frequency") {
    REQUIRE_THAT(eta_from_carrier(1e9), WithinRel(5.6914336571434505e-4, 1e-12));
    REQUIRE_THAT(eta_from_carrier(2e9), WithinRel(1.4228584142858626e-4, 1e-12));
    // identity point of the formula
    REQUIRE_THAT(eta_from_carrier(kSpeedOfLight / (4.0 * M_PI)), WithinRel(1.0, 1e-12));
    REQUIRE_THROWS_AS(eta_from_carrier(0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(eta_from_carrier(-1e9), std::invalid_argument);
}

TEST_CASE("threshold derivation at the reference rates") {
    const SystemConfig cfg = reference_config();
    const ThresholdSet t = derive_thresholds(cfg, 10.0);
    REQUIRE_THAT(t.weak_sinr_min, WithinRel(0.0069555500567188088, 1e-14));
    REQUIRE_THAT(t.strong_sinr_min, WithinRel(0.0069555500567188088, 1e-14));
    REQUIRE(t.power_split_feasible);
    REQUIRE(t.weak_gain_min.has_value());
    REQUIRE_THAT(*t.weak_gain_min, WithinRel(8.7095825552575658e-4, 1e-13));
    REQUIRE(t.ri_gain_slope == 0.0);  // perfect SIC
}

TEST_CASE("zero target rate collapses the thresholds") {
    SystemConfig cfg = reference_config();
    cfg.weak_rate = 0.0;
    const ThresholdSet t = derive_thresholds(cfg, 5.0);
    REQUIRE(t.weak_sinr_min == 0.0);
    REQUIRE(t.power_split_feasible);
    REQUIRE(*t.weak_gain_min == 0.0);
}

TEST_CASE("infeasible power split is a state, not an error") {
    SystemConfig cfg = reference_config();
    cfg.weak_power = 0.6;
    cfg.strong_power = 0.4;
    cfg.weak_rate = 2.0;  // eps_m = 3 > a_m / a_n = 1.5
    const ThresholdSet t = derive_thresholds(cfg, 10.0);
    REQUIRE_FALSE(t.power_split_feasible);
    REQUIRE_FALSE(t.weak_gain_min.has_value());
}

TEST_CASE("imperfect SIC sets the residual slope") {
    SystemConfig cfg = reference_config();
    cfg.sic = SicMode::imperfect;
    const ThresholdSet t = derive_thresholds(cfg, 10.0);
    REQUIRE_THAT(t.ri_gain_slope, WithinRel(t.strong_sinr_min / cfg.strong_power, 1e-15));
}

TEST_CASE("thresholds scale consistently in SNR") {
    SystemConfig cfg = reference_config();
    cfg.sic = SicMode::imperfect;
    for (double rho : {0.5, 10.0, 4096.0}) {
        const ThresholdSet a = derive_thresholds(cfg, rho);
        const ThresholdSet b = derive_thresholds(cfg, 2.0 * rho);
        REQUIRE(b.strong_gain_min == a.strong_gain_min / 2.0);
        REQUIRE(*b.weak_gain_min == *a.weak_gain_min / 2.0);
        REQUIRE(b.ri_gain_slope == a.ri_gain_slope);
    }
}

TEST_CASE("derive_thresholds rejects non-positive SNR") {
    REQUIRE_THROWS_AS(derive_thresholds(reference_config(), 0.0), std::invalid_argument);
}

TEST_CASE("sinr algebra spot values") {
    REQUIRE(sinr_strong_decoding_weak(0.0, 7.0, 0.8, 0.2) == 0.0);
    REQUIRE_THAT(sinr_strong_decoding_weak(1.0, 1.0, 0.8, 0.2), WithinRel(2.0 / 3.0, 1e-15));
    REQUIRE(sinr_weak(0.0, 7.0, 0.8, 0.2) == 0.0);
    // interference-limited ceiling a_m / a_n
    REQUIRE(sinr_weak(1e14, 100.0, 0.8, 0.2) < 4.0);
    REQUIRE_THAT(sinr_weak(1e14, 100.0, 0.8, 0.2), WithinRel(4.0, 1e-9));

    REQUIRE_THAT(sinr_strong(1.0, 0.0, 10.0, 0.2, SicMode::perfect), WithinRel(2.0, 1e-15));
    REQUIRE(sinr_strong(1.0, 0.0, 10.0, 0.2, SicMode::imperfect) ==
            sinr_strong(1.0, 0.0, 10.0, 0.2, SicMode::perfect));
    // residual interference caps the strong user's SINR at high SNR
    REQUIRE_THAT(sinr_strong(1.0, 1.0, 1e12, 0.2, SicMode::imperfect), WithinRel(0.2, 1e-9));
}

TEST_CASE("sinr thresholds and gain thresholds are the same events") {
    SystemConfig cfg = reference_config();
    cfg.sic = SicMode::imperfect;
    Xoshiro256pp rng(2024);
    const double rho = 251.18864315095801;  // 24 dB
    const ThresholdSet t = derive_thresholds(cfg, rho);
    int checked = 0;
    for (int i = 0; i < 20000; ++i) {
        const double gain = std::exp(rng.uniform01() * 20.0 - 14.0);
        const double ri = rng.exponential() * 1e-3;
        const double weak_line = *t.weak_gain_min;
        const double strong_line = t.ri_gain_slope * ri + t.strong_gain_min;
        // skip draws within rounding distance of either boundary
        if (std::abs(gain - weak_line) < 1e-9 * weak_line) continue;
        if (std::abs(gain - strong_line) < 1e-9 * strong_line) continue;
        ++checked;
        const bool weak_ok =
            sinr_weak(gain, rho, cfg.weak_power, cfg.strong_power) >= t.weak_sinr_min;
        REQUIRE(weak_ok == (gain >= weak_line));
        const bool strong_fail =
            sinr_strong(gain, ri, rho, cfg.strong_power, cfg.sic) <= t.strong_sinr_min;
        REQUIRE(strong_fail == (gain <= strong_line));
    }
    REQUIRE(checked > 19000);
}
