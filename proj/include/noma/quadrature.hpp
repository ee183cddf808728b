#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace noma {

/// Gauss-Chebyshev (first kind) rule specialised for averaging over a disk of
/// users: node u carries the closed-form area weight b_u and the path-loss
/// factor c_u = 1 + r(theta_u)^alpha of the radius the node maps to.
///
/// Applying the rule to a per-radius function g:
///   (2 / R^2) Int_0^R g(1 + r^alpha) r dr  ~=  sum_u weights[u] * g(loss[u])
struct ChebyshevRule {
    int order = 0;                 // U
    std::vector<double> nodes;     // theta_u = cos((2u-1) pi / 2U), decreasing
    std::vector<double> weights;   // b_u = pi/(2U) sqrt(1-theta^2) (theta+1)
    std::vector<double> loss;      // c_u = 1 + ((R/2)(theta+1))^alpha
};

inline ChebyshevRule chebyshev_rule(int order, double disk_radius, double path_loss_exp) {
    if (order < 1) throw std::invalid_argument("chebyshev_rule: order must be >= 1");
    ChebyshevRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    rule.loss.resize(order);
    for (int u = 1; u <= order; ++u) {
        const double theta = std::cos((2.0 * u - 1.0) * M_PI / (2.0 * order));
        rule.nodes[u - 1] = theta;
        rule.weights[u - 1] =
            M_PI / (2.0 * order) * std::sqrt(1.0 - theta * theta) * (theta + 1.0);
        rule.loss[u - 1] = 1.0 + std::pow(disk_radius / 2.0 * (theta + 1.0), path_loss_exp);
    }
    return rule;
}

/// Gauss-Laguerre rule for the weight e^{-t} on [0, inf):
///   Int_0^inf f(t) e^{-t} dt  ~=  sum_l weights[l] f(nodes[l]),
/// exact for polynomials up to degree 2 order - 1.
struct LaguerreRule {
    int order = 0;
    std::vector<double> nodes;    // strictly increasing, > 0
    std::vector<double> weights;  // sum to 1
};

/// Newton iteration on the three-term recurrence. Polynomial values are
/// evaluated scaled by e^{-t/2} so intermediate magnitudes stay bounded for
/// large orders.
inline LaguerreRule laguerre_rule(int order) {
    if (order < 1 || order > 256)
        throw std::invalid_argument("laguerre_rule: order must be in [1, 256]");
    LaguerreRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int n = order;
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        // Stroud-Secrest style initial guesses.
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 1;
            z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - rule.nodes[i - 2]);
        }
        // Newton to the evaluation noise floor, keeping the iterate with the
        // smallest residual step.
        double best_z = z, best_dz = std::numeric_limits<double>::infinity();
        double best_deriv = 0.0, best_prev = 0.0;
        for (int it = 0; it < 50; ++it) {
            const double scale = std::exp(-0.5 * z);
            double p1 = scale;  // L~_0
            double prev = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p3 = prev;
                prev = p1;
                p1 = ((2.0 * k + 1.0 - z) * prev - k * p3) / (k + 1.0);
            }
            // p1 = scaled L_n, prev = scaled L_{n-1}
            const double deriv = n * (p1 - prev) / z;
            const double dz = p1 / deriv;
            if (std::abs(dz) < best_dz) {
                best_dz = std::abs(dz);
                best_z = z;
                best_deriv = deriv;
                best_prev = prev;
            }
            const double z_before = z;
            z -= dz;
            if (z == z_before || std::abs(dz) <= 1e-16 * std::abs(z)) break;
        }
        if (!(best_dz <= 1e-11 * std::max(best_z, 1.0)))
            throw std::runtime_error("laguerre_rule: Newton iteration failed to converge");
        z = best_z;
        rule.nodes[i] = z;
        rule.weights[i] = -std::exp(-z) / (n * best_deriv * best_prev);
    }
    return rule;
}

}  // namespace noma
