#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace noma {

/// Thrown when the adaptive integrator exhausts its subdivision budget
/// before reaching the requested tolerance.
struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Gauss-Kronrod 15(7) abscissae/weights on [-1, 1].
inline constexpr std::array<double, 8> kGk15Nodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr std::array<double, 8> kGk15Weights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> kGauss7Weights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
std::pair<double, double> gauss_kronrod_15(F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double fc = f(mid);
    double kronrod = kGk15Weights[7] * fc;
    double gauss = kGauss7Weights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kGk15Nodes[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        kronrod += kGk15Weights[j] * fsum;
        if (j % 2 == 1) gauss += kGauss7Weights[j / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
double adaptive_integrate_finite(F& f, double a, double b, double rel_tol) {
    constexpr int kMaxSegments = 4000;
    std::priority_queue<Segment> segments;
    auto [v0, e0] = gauss_kronrod_15(f, a, b);
    segments.push({a, b, v0, e0});
    double total = v0, total_err = e0;
    int used = 1;
    const double abs_floor = 1e-300;
    while (total_err > std::max(rel_tol * std::abs(total), abs_floor)) {
        if (used >= kMaxSegments)
            throw IntegrationError(
                "adaptive_integrate: tolerance not reached within " +
                std::to_string(kMaxSegments) + " subdivisions (estimate " +
                std::to_string(total) + ", error " + std::to_string(total_err) + ")");
        Segment worst = segments.top();
        segments.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto [vl, el] = gauss_kronrod_15(f, worst.a, mid);
        auto [vr, er] = gauss_kronrod_15(f, mid, worst.b);
        total += vl + vr - worst.value;
        total_err += el + er - worst.error;
        segments.push({worst.a, mid, vl, el});
        segments.push({mid, worst.b, vr, er});
        ++used;
    }
    return total;
}

}  // namespace detail

/// Integrates f over [a, b] to the requested relative tolerance
/// (tol in [1e-12, 1e-3]) by globally adaptive Gauss-Kronrod bisection.
///
/// An infinite upper bound is handled with the substitution
/// t = a - decay_scale * log(1 - s), s in [0, 1); pass the integrand's decay
/// scale when it is far from 1 to start from a well-conditioned map.
template <class F>
double adaptive_integrate(F&& f, double a, double b, double rel_tol,
                          double decay_scale = 1.0) {
    if (!(rel_tol >= 1e-12 && rel_tol <= 1e-3))
        throw std::invalid_argument("adaptive_integrate: rel_tol must be in [1e-12, 1e-3]");
    if (!(decay_scale > 0.0))
        throw std::invalid_argument("adaptive_integrate: decay_scale must be positive");
    if (std::isinf(b)) {
        auto g = [&f, a, decay_scale](double s) {
            const double t = a - decay_scale * std::log1p(-s);
            return f(t) * decay_scale / (1.0 - s);
        };
        return detail::adaptive_integrate_finite(g, 0.0, 1.0, rel_tol);
    }
    return detail::adaptive_integrate_finite(f, a, b, rel_tol);
}

}  // namespace noma
