#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "noma/config.hpp"
#include "noma/rng.hpp"
#include "noma/sinr.hpp"

namespace noma {

/// One realisation of the cluster: per-user distances and effective gains
/// (ascending after the ordering step, distances permuted alongside) plus the
/// residual-interference power.
struct ChannelDraw {
    std::vector<double> distances;  // metres, in (0, R_D]
    std::vector<double> gains;      // ascending
    double ri_power = 0.0;
};

/// Binomial point estimate with a normal-approximation 95% interval.
struct OutageEstimate {
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    double ci95_halfwidth = 0.0;
};

inline OutageEstimate make_estimate(std::uint64_t successes, std::uint64_t trials) {
    OutageEstimate e;
    e.trials = trials;
    e.p_hat = trials ? double(successes) / double(trials) : 0.0;
    e.ci95_halfwidth =
        trials ? 1.96 * std::sqrt(e.p_hat * (1.0 - e.p_hat) / double(trials)) : 0.0;
    return e;
}

/// Effective gain of one user at a fixed distance: Rayleigh fading on each of
/// the user's subcarriers combines to a Gamma(K, 1) power, scaled by the
/// bounded path loss eta / (1 + d^alpha).
inline double sample_effective_gain(Xoshiro256pp& rng, int subcarriers, double freq_factor,
                                    double distance, double path_loss_exp) {
    double fading = 0.0;
    for (int k = 0; k < subcarriers; ++k) fading += rng.exponential();
    return freq_factor * fading / (1.0 + std::pow(distance, path_loss_exp));
}

/// Draws one cluster realisation into `draw`, reusing its storage.
/// Distances are area-uniform on the disk (d = R sqrt(u)); gains are sorted
/// ascending with distances carried along; the residual power is a
/// Gamma(K, omega) draw, identically zero when omega is zero.
inline void sample_channel(Xoshiro256pp& rng, const SystemConfig& cfg, ChannelDraw& draw) {
    const int users = cfg.num_users;
    draw.distances.resize(users);
    draw.gains.resize(users);
    for (int i = 0; i < users; ++i) {
        const double d = cfg.disk_radius * std::sqrt(1.0 - rng.uniform01());
        draw.distances[i] = d;
        draw.gains[i] =
            sample_effective_gain(rng, cfg.num_subcarriers, cfg.freq_factor, d, cfg.path_loss_exp);
    }
    for (int i = 1; i < users; ++i) {  // insertion sort; clusters are small
        const double g = draw.gains[i], d = draw.distances[i];
        int j = i - 1;
        for (; j >= 0 && draw.gains[j] > g; --j) {
            draw.gains[j + 1] = draw.gains[j];
            draw.distances[j + 1] = draw.distances[j];
        }
        draw.gains[j + 1] = g;
        draw.distances[j + 1] = d;
    }
    draw.ri_power = 0.0;
    if (cfg.ri_mean_power > 0.0) {
        double sum = 0.0;
        for (int k = 0; k < cfg.num_subcarriers; ++k) sum += rng.exponential();
        draw.ri_power = cfg.ri_mean_power * sum;
    }
}

inline ChannelDraw sample_channel(Xoshiro256pp& rng, const SystemConfig& cfg) {
    ChannelDraw draw;
    sample_channel(rng, cfg, draw);
    return draw;
}

struct TrialFlags {
    bool weak_outage = false;
    bool strong_outage = false;
};

/// Outage flags of one draw, evaluated on the SINR inequalities directly.
/// The weak user fails when it cannot decode itself; the strong user fails
/// when it cannot decode the weak user's signal, or decodes it but then fails
/// on its own signal after (possibly imperfect) cancellation.
inline TrialFlags evaluate_trial(const ChannelDraw& draw, const ThresholdSet& t,
                                 const SystemConfig& cfg) {
    const double weak_gain = draw.gains[cfg.weak_order - 1];
    const double strong_gain = draw.gains[cfg.strong_order - 1];
    TrialFlags flags;
    flags.weak_outage =
        sinr_weak(weak_gain, t.snr, cfg.weak_power, cfg.strong_power) < t.weak_sinr_min;
    const double cross =
        sinr_strong_decoding_weak(strong_gain, t.snr, cfg.weak_power, cfg.strong_power);
    if (cross <= t.weak_sinr_min) {
        flags.strong_outage = true;
    } else {
        flags.strong_outage =
            sinr_strong(strong_gain, draw.ri_power, t.snr, cfg.strong_power, cfg.sic) <=
            t.strong_sinr_min;
    }
    return flags;
}

/// Worker count for Monte Carlo batches: NOMA_OUTAGE_WORKERS when set,
/// otherwise the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("NOMA_OUTAGE_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

namespace detail {

inline constexpr std::uint64_t kTrialsPerBatch = 1u << 16;

/// Runs `trials` trials in fixed-size batches, each on an independent stream
/// seeded by hash(seed, batch index). Workers pull batch indices from a
/// shared counter; the two success counters are plain integer sums, so the
/// result is identical for any worker count or schedule.
template <class TrialFn>
std::pair<std::uint64_t, std::uint64_t> run_trial_batches(std::uint64_t trials,
                                                          std::uint64_t seed, TrialFn trial) {
    const std::uint64_t batches = (trials + kTrialsPerBatch - 1) / kTrialsPerBatch;
    std::atomic<std::uint64_t> next{0}, first_count{0}, second_count{0};
    auto work = [&] {
        ChannelDraw draw;
        for (;;) {
            const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= batches) break;
            Xoshiro256pp rng = Xoshiro256pp::for_batch(seed, b);
            const std::uint64_t count =
                std::min(kTrialsPerBatch, trials - b * kTrialsPerBatch);
            std::uint64_t first = 0, second = 0;
            for (std::uint64_t i = 0; i < count; ++i) {
                const auto [f, s] = trial(rng, draw);
                first += f;
                second += s;
            }
            first_count.fetch_add(first, std::memory_order_relaxed);
            second_count.fetch_add(second, std::memory_order_relaxed);
        }
    };
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), batches));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return {first_count.load(), second_count.load()};
}

}  // namespace detail

struct PairedEstimate {
    OutageEstimate weak;
    OutageEstimate strong;
};

/// Monte Carlo outage of the configured user pair at one SNR. Deterministic
/// in (config, snr, trials, seed) regardless of the worker count.
inline PairedEstimate estimate_outage(const SystemConfig& cfg, double snr,
                                      std::uint64_t trials, std::uint64_t seed) {
    cfg.validate();
    if (trials < 1) throw std::invalid_argument("estimate_outage: trials must be >= 1");
    const ThresholdSet thresholds = derive_thresholds(cfg, snr);
    auto [weak, strong] = detail::run_trial_batches(
        trials, seed, [&](Xoshiro256pp& rng, ChannelDraw& draw) {
            sample_channel(rng, cfg, draw);
            const TrialFlags f = evaluate_trial(draw, thresholds, cfg);
            return std::pair<bool, bool>(f.weak_outage, f.strong_outage);
        });
    return {make_estimate(weak, trials), make_estimate(strong, trials)};
}

/// Orthogonal-access baseline for the strong-ordered user: half the channel
/// uses at full power, outage when (1/2) log2(1 + rho Z) falls short of the
/// target rate, i.e. Z below (2^{2R} - 1) / rho.
inline OutageEstimate estimate_oma_outage(const SystemConfig& cfg, double snr,
                                          std::uint64_t trials, std::uint64_t seed) {
    cfg.validate();
    if (trials < 1) throw std::invalid_argument("estimate_oma_outage: trials must be >= 1");
    if (!(snr > 0.0)) throw std::invalid_argument("estimate_oma_outage: snr must be positive");
    const double gain_min = sinr_threshold_from_rate(2.0 * cfg.strong_rate) / snr;
    auto [count, unused] = detail::run_trial_batches(
        trials, seed, [&](Xoshiro256pp& rng, ChannelDraw& draw) {
            sample_channel(rng, cfg, draw);
            return std::pair<bool, bool>(draw.gains[cfg.strong_order - 1] < gain_min, false);
        });
    (void)unused;
    return make_estimate(count, trials);
}

}  // namespace noma
