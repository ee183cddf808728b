#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace noma {

/// One curve of a sweep: values (outage probability or throughput) over a
/// strictly increasing SNR grid in dB. `quantity` identifies what is plotted
/// (user, scheme, SIC mode, ...); `method` tags how it was obtained
/// ("exact", "asymptotic", "mc"), so paired curves differ only in the tag.
struct OutageCurve {
    std::vector<double> snr_grid_db;
    std::vector<double> values;
    std::string quantity;
    std::string method;

    std::string label() const { return quantity + "_" + method; }
};

/// Least-squares diversity order over the top 10 dB of the grid:
/// the negated slope of log10 P against log10 rho. Points with
/// P <= 1e-12 (underflowed or exactly zero) are excluded; returns
/// nullopt when fewer than two usable points remain.
inline std::optional<double> diversity_order_estimate(const OutageCurve& curve) {
    if (curve.snr_grid_db.size() != curve.values.size() || curve.snr_grid_db.empty())
        return std::nullopt;
    const double top_db = curve.snr_grid_db.back();
    std::vector<double> x, y;
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        if (curve.snr_grid_db[i] < top_db - 10.0 - 1e-9) continue;
        if (!(curve.values[i] > 1e-12)) continue;
        x.push_back(curve.snr_grid_db[i] / 10.0);  // log10(rho)
        y.push_back(std::log10(curve.values[i]));
    }
    if (x.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double n = double(x.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::nullopt;
    return -(n * sxy - sx * sy) / denom;
}

}  // namespace noma
