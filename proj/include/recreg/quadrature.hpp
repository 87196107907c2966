#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "recreg/errors.hpp"

namespace recreg {

struct QuadratureOptions {
    double panel_abs_tol = 1e-13; // accept a panel when the two-level
    double panel_rel_tol = 1e-12; // estimates differ by less than these
    int max_depth = 30;
};

namespace detail {

struct GaussLegendre15 {
    std::array<double, 15> node{};
    std::array<double, 15> weight{};
};

/// Nodes and weights on [-1, 1] by Newton iteration on P_15.
inline const GaussLegendre15& gauss_legendre_15() {
    static const GaussLegendre15 rule = [] {
        GaussLegendre15 r;
        constexpr int n = 15;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = z;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (z * p1 - p0) / (z * z - 1.0);
                const double dz = p1 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-15) break;
            }
            r.node[i] = -z;
            r.node[n - 1 - i] = z;
            r.weight[i] = 2.0 / ((1.0 - z * z) * pp * pp);
            r.weight[n - 1 - i] = r.weight[i];
        }
        return r;
    }();
    return rule;
}

template <typename F>
double gl15(const F& f, double a, double b) {
    const auto& rule = gauss_legendre_15();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 15; ++i) {
        s += rule.weight[i] * f(mid + half * rule.node[i]);
    }
    return s * half;
}

} // namespace detail

/**
 * Adaptive Gauss-Legendre integration of f over [a, b].
 *
 * Each panel is compared against the sum of 15-point rules on its halves and
 * accepted when the two estimates agree to the panel tolerances; otherwise
 * the halves are pushed. The panels touching a and b start pre-split once.
 * Exceeding max_depth raises QuadratureNonConvergence.
 */
inline double integrate_adaptive(const std::function<double(double)>& f, double a,
                                 double b, const QuadratureOptions& opts = {}) {
    if (!(b > a)) throw ParamError("integration bounds must satisfy a < b");

    struct Panel {
        double a, b;
        int depth;
    };
    const double w = b - a;
    std::vector<Panel> stack;
    stack.reserve(64);
    // endpoint-adjacent quarters, pre-split once
    stack.push_back({b - 0.25 * w, b, 2});
    stack.push_back({a + 0.5 * w, b - 0.25 * w, 2});
    stack.push_back({a + 0.25 * w, a + 0.5 * w, 2});
    stack.push_back({a, a + 0.25 * w, 2});

    double total = 0.0;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double coarse = detail::gl15(f, p.a, p.b);
        const double mid = 0.5 * (p.a + p.b);
        const double fine = detail::gl15(f, p.a, mid) + detail::gl15(f, mid, p.b);
        const double diff = std::abs(fine - coarse);
        if (diff <= std::max(opts.panel_abs_tol, opts.panel_rel_tol * std::abs(fine))) {
            total += fine;
            continue;
        }
        if (p.depth >= opts.max_depth) {
            throw QuadratureNonConvergence(
                "panel [" + std::to_string(p.a) + ", " + std::to_string(p.b) +
                "] not converged at depth " + std::to_string(p.depth));
        }
        stack.push_back({mid, p.b, p.depth + 1});
        stack.push_back({p.a, mid, p.depth + 1});
    }
    return total;
}

} // namespace recreg
