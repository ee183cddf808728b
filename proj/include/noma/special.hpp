#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace noma {

/// x^n by repeated multiplication. Exact power-of-two scaling of x scales the
/// result exactly, which the asymptote tests rely on.
inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

/// CDF of a Gamma(shape, 1) variable: 1 - e^{-y} sum_{i<shape} y^i / i!.
/// Series terms carry the e^{-y} factor from the start, so neither the
/// partial sums nor the terms can overflow. Below the distribution's bulk the
/// head form cancels catastrophically, so the complementary tail series
/// e^{-y} sum_{i>=shape} y^i / i! is used there; it keeps full relative
/// precision for arbitrarily small arguments.
inline double gamma_cdf_unit(double y, int shape) {
    if (!(y >= 0.0)) throw std::invalid_argument("gamma_cdf_unit: y must be >= 0");
    if (shape < 1) throw std::invalid_argument("gamma_cdf_unit: shape must be >= 1");
    if (y == 0.0) return 0.0;
    if (y < shape + 2.0) {
        double term = std::exp(-y);
        for (int i = 1; i <= shape; ++i) term *= y / i;  // e^{-y} y^shape / shape!
        double sum = term;
        for (int i = shape + 1; i <= shape + 400 && term > sum * 1e-18; ++i) {
            term *= y / i;
            sum += term;
        }
        return std::clamp(sum, 0.0, 1.0);
    }
    double term = std::exp(-y);
    double sum = term;
    for (int i = 1; i < shape; ++i) {
        term *= y / i;
        sum += term;
    }
    return std::clamp(1.0 - sum, 0.0, 1.0);
}

/// Neumaier-compensated sum of `terms`, largest magnitudes first.
/// Sorts the vector in place.
inline double compensated_descending_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    double sum = 0.0, comp = 0.0;
    for (double t : terms) {
        const double next = sum + t;
        if (std::abs(sum) >= std::abs(t))
            comp += (sum - next) + t;
        else
            comp += (t - next) + sum;
        sum = next;
    }
    return sum + comp;
}

}  // namespace noma
