#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "recreg/errors.hpp"
#include "recreg/math_util.hpp"

namespace recreg {

/**
 * A real function h together with its derivative tower h, h', h'', ...
 *
 * deriv(0, x) always dispatches to the plain evaluator, so the order-0
 * invariant holds by construction. An optional extended-precision evaluator
 * (long double in, long double out) backs the finite-difference oracle;
 * when absent it falls back to the double evaluator.
 */
class DerivableFunction {
public:
    using Eval = std::function<double(double)>;
    using Deriv = std::function<double(int, double)>; // order >= 1 only
    using EvalExt = std::function<long double(long double)>;
    using DerivExt = std::function<long double(int, long double)>;

    DerivableFunction(std::string label, Interval domain, int max_order,
                      Eval eval, Deriv deriv, EvalExt eval_ext = nullptr,
                      DerivExt deriv_ext = nullptr)
        : label_(std::move(label)),
          domain_(domain),
          max_order_(max_order),
          eval_(std::move(eval)),
          deriv_(std::move(deriv)),
          eval_ext_(std::move(eval_ext)),
          deriv_ext_(std::move(deriv_ext)) {}

    double operator()(double x) const {
        require_in_domain(x);
        return eval_(x);
    }

    double deriv(int order, double x) const {
        if (order < 0 || order > max_order_) {
            throw OrderTooHigh("derivative order " + std::to_string(order) +
                               " exceeds max_order " + std::to_string(max_order_) +
                               " of " + label_);
        }
        require_in_domain(x);
        return order == 0 ? eval_(x) : deriv_(order, x);
    }

    long double eval_ext(long double x) const {
        if (eval_ext_) return eval_ext_(x);
        return static_cast<long double>(eval_(static_cast<double>(x)));
    }

    long double deriv_ext(int order, long double x) const {
        if (order == 0) return eval_ext(x);
        if (deriv_ext_) return deriv_ext_(order, x);
        return static_cast<long double>(deriv(order, static_cast<double>(x)));
    }

    int max_order() const { return max_order_; }
    const Interval& domain() const { return domain_; }
    const std::string& label() const { return label_; }

private:
    void require_in_domain(double x) const {
        if (!domain_.contains(x)) {
            throw DomainError(label_ + ": argument " + std::to_string(x) +
                              " outside open domain");
        }
    }

    std::string label_;
    Interval domain_;
    int max_order_;
    Eval eval_;
    Deriv deriv_;
    EvalExt eval_ext_;
    DerivExt deriv_ext_;
};

// ---------------------------------------------------------------------------
// Function catalog
// ---------------------------------------------------------------------------

/// h(x) = x^p / p!, so h^(p-1)(x) = x and h^(p) = 1.
inline DerivableFunction power_normalized(int p) {
    if (p < 0 || p > kMaxFactorialArg) {
        throw OrderTooHigh("power_normalized exponent " + std::to_string(p) +
                           " outside exact factorial range");
    }
    const double pfact = static_cast<double>(factorial_u64(p));
    return DerivableFunction(
        "power_normalized(" + std::to_string(p) + ")", real_line(), kMaxFactorialArg,
        [p, pfact](double x) { return std::pow(x, p) / pfact; },
        [p](int m, double x) {
            if (m > p) return 0.0;
            return std::pow(x, p - m) / static_cast<double>(factorial_u64(p - m));
        },
        [p, pfact](long double x) {
            return powl(x, static_cast<long double>(p)) / static_cast<long double>(pfact);
        },
        [p](int m, long double x) -> long double {
            if (m > p) return 0.0L;
            return powl(x, static_cast<long double>(p - m)) /
                   static_cast<long double>(factorial_u64(p - m));
        });
}

/// h(x) = (-1)^k / (k! x) on (0, inf), so h^(k)(x) = x^{-(k+1)}.
inline DerivableFunction neg_reciprocal(int k) {
    if (k < 0 || k > kMaxFactorialArg) {
        throw OrderTooHigh("neg_reciprocal order outside exact factorial range");
    }
    const double scale = ((k % 2 == 0) ? 1.0 : -1.0) / static_cast<double>(factorial_u64(k));
    return DerivableFunction(
        "neg_reciprocal(" + std::to_string(k) + ")", positive_halfline(), kMaxFactorialArg,
        [scale](double x) { return scale / x; },
        [scale](int m, double x) {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            return scale * sign * static_cast<double>(factorial_u64(m)) / std::pow(x, m + 1);
        },
        [scale](long double x) { return static_cast<long double>(scale) / x; },
        [scale](int m, long double x) {
            const long double sign = (m % 2 == 0) ? 1.0L : -1.0L;
            return static_cast<long double>(scale) * sign *
                   static_cast<long double>(factorial_u64(m)) /
                   powl(x, static_cast<long double>(m + 1));
        });
}

/// h(x) = -1/x on (0, inf).
inline DerivableFunction plain_reciprocal() {
    return DerivableFunction(
        "plain_reciprocal", positive_halfline(), kMaxFactorialArg,
        [](double x) { return -1.0 / x; },
        [](int m, double x) {
            const double sign = (m % 2 == 0) ? -1.0 : 1.0;
            return sign * static_cast<double>(factorial_u64(m)) / std::pow(x, m + 1);
        },
        [](long double x) { return -1.0L / x; },
        [](int m, long double x) {
            const long double sign = (m % 2 == 0) ? -1.0L : 1.0L;
            return sign * static_cast<long double>(factorial_u64(m)) /
                   powl(x, static_cast<long double>(m + 1));
        });
}

/// h(x) = 2 sqrt(x) on (0, inf), so h'(x) = x^{-1/2}.
inline DerivableFunction double_sqrt() {
    return DerivableFunction(
        "double_sqrt", positive_halfline(), kMaxFactorialArg,
        [](double x) { return 2.0 * std::sqrt(x); },
        [](int m, double x) {
            // d^m/dx^m 2 x^{1/2} = 2 (1/2)(1/2 - 1)...(1/2 - m + 1) x^{1/2 - m}
            double coeff = 2.0;
            for (int i = 0; i < m; ++i) coeff *= 0.5 - i;
            return coeff * std::pow(x, 0.5 - m);
        },
        [](long double x) { return 2.0L * sqrtl(x); },
        [](int m, long double x) {
            long double coeff = 2.0L;
            for (int i = 0; i < m; ++i) coeff *= 0.5L - i;
            return coeff * powl(x, 0.5L - m);
        });
}

/**
 * Wrap an arbitrary evaluator; derivatives come from order-m central
 * differences with step eps^{1/(m+2)} * max(1, |x|), the usual balance of
 * truncation against round-off.
 */
inline DerivableFunction user_function(std::function<double(double)> f, int max_order,
                                       Interval domain = real_line(),
                                       std::string label = "user") {
    auto deriv = [f, domain, label](int m, double x) {
        const double eps = std::numeric_limits<double>::epsilon();
        const double h = std::pow(eps, 1.0 / (m + 2)) * std::max(1.0, std::abs(x));
        double acc = 0.0;
        for (int p = 0; p <= m; ++p) {
            const double sign = (p % 2 == 0) ? 1.0 : -1.0;
            const double xp = x + (0.5 * m - p) * h;
            if (!domain.contains(xp)) {
                throw DomainError(label + ": derivative stencil point outside domain");
            }
            acc += sign * static_cast<double>(binomial_u64(m, p)) * f(xp);
        }
        return acc / std::pow(h, m);
    };
    return DerivableFunction(std::move(label), domain, max_order, std::move(f),
                             std::move(deriv));
}

// ---------------------------------------------------------------------------
// Divided differences and their mixed partial derivatives
// ---------------------------------------------------------------------------

/// Requests stay this far away from the diagonal u = v.
inline double diagonal_threshold(double u, double v) {
    return 1e-6 * std::max({1.0, std::abs(u), std::abs(v)});
}

/// A request for the mixed partial of order (order_u, order_v) of the
/// divided difference of f at (u, v).
struct MixedDiffRequest {
    int order_u = 0; // order in the first argument
    int order_v = 0; // order in the second argument
    double u = 0.0;
    double v = 0.0;
};

namespace detail {

inline void validate_points(const DerivableFunction& f, double u, double v) {
    if (!f.domain().contains(u) || !f.domain().contains(v)) {
        throw DomainError(f.label() + ": divided-difference point outside domain");
    }
    if (std::abs(v - u) < diagonal_threshold(u, v)) {
        throw DiagonalTooClose("points " + std::to_string(u) + ", " + std::to_string(v) +
                               " are within the diagonal threshold");
    }
}

inline void validate_request(const DerivableFunction& f, const MixedDiffRequest& req) {
    if (req.order_u < 0 || req.order_v < 0) {
        throw OrderTooHigh("negative derivative order");
    }
    if (req.order_u + req.order_v > f.max_order()) {
        throw OrderTooHigh("mixed order " + std::to_string(req.order_u + req.order_v) +
                           " exceeds max_order of " + f.label());
    }
    validate_points(f, req.u, req.v);
}

} // namespace detail

/// M(u, v) = (f(v) - f(u)) / (v - u), u != v.
inline double divided_diff(const DerivableFunction& f, double u, double v) {
    detail::validate_points(f, u, v);
    return (f(v) - f(u)) / (v - u);
}

/**
 * Mixed partial of the divided difference via the two-index recurrences.
 *
 * The table is filled bottom-up over the (i, j) rectangle:
 *
 *   T[0][0] = M(u, v)
 *   T[0][j] = (f^(j)(v) - j T[0][j-1]) / (v - u)
 *   T[i][0] = (i T[i-1][0] - f^(i)(u)) / (v - u)
 *   T[i][j] = (i T[i-1][j] - j T[i][j-1]) / (v - u)
 *
 * requiring O(i * j) table cells and derivatives of f up to max(i, j).
 */
inline double mixed_deriv(const DerivableFunction& f, const MixedDiffRequest& req) {
    detail::validate_request(f, req);
    const int I = req.order_u;
    const int J = req.order_v;
    const double u = req.u;
    const double v = req.v;
    // accumulate in extended precision: each table row divides by (v - u)
    // again, which amplifies the rounding of earlier cells
    const long double w = static_cast<long double>(v) - static_cast<long double>(u);

    std::vector<std::vector<long double>> t(I + 1, std::vector<long double>(J + 1));
    t[0][0] = (f.eval_ext(v) - f.eval_ext(u)) / w;
    for (int j = 1; j <= J; ++j) {
        t[0][j] = (f.deriv_ext(j, v) - j * t[0][j - 1]) / w;
    }
    for (int i = 1; i <= I; ++i) {
        t[i][0] = (i * t[i - 1][0] - f.deriv_ext(i, u)) / w;
        for (int j = 1; j <= J; ++j) {
            t[i][j] = (i * t[i - 1][j] - j * t[i][j - 1]) / w;
        }
    }
    return static_cast<double>(t[I][J]);
}

/**
 * Central-difference approximation of the same mixed partial, applied to the
 * divided difference itself -- never through the recurrences above. Tensor
 * stencil: order-i central difference in u composed with order-j in v, both
 * with the given step. Accumulation runs in extended precision.
 */
inline double mixed_deriv_fd(const DerivableFunction& f, const MixedDiffRequest& req,
                             double step) {
    detail::validate_request(f, req);
    if (step <= 0.0) throw ParamError("finite-difference step must be positive");
    const int I = req.order_u;
    const int J = req.order_v;
    if (I == 0 && J == 0) return divided_diff(f, req.u, req.v);

    const long double h = static_cast<long double>(step);
    const long double u0 = static_cast<long double>(req.u);
    const long double v0 = static_cast<long double>(req.v);
    long double acc = 0.0L;
    for (int p = 0; p <= I; ++p) {
        const long double cu = ((p % 2 == 0) ? 1.0L : -1.0L) *
                               static_cast<long double>(binomial_u64(I, p));
        const long double uu = u0 + (0.5L * I - p) * h;
        for (int q = 0; q <= J; ++q) {
            const long double cv = ((q % 2 == 0) ? 1.0L : -1.0L) *
                                   static_cast<long double>(binomial_u64(J, q));
            const long double vv = v0 + (0.5L * J - q) * h;
            if (!f.domain().contains(static_cast<double>(uu)) ||
                !f.domain().contains(static_cast<double>(vv))) {
                throw DomainError(f.label() + ": stencil point outside domain");
            }
            if (fabsl(vv - uu) <
                static_cast<long double>(
                    diagonal_threshold(static_cast<double>(uu), static_cast<double>(vv)))) {
                throw StencilCrossesDiagonal("stencil point pair too close to the diagonal");
            }
            acc += cu * cv * (f.eval_ext(vv) - f.eval_ext(uu)) / (vv - uu);
        }
    }
    return static_cast<double>(acc / powl(h, I + J));
}

/// Finite-difference estimate together with its internal error estimate.
struct FdEstimate {
    double value = 0.0;
    double error = 0.0;
};

/**
 * Richardson-extrapolated finite-difference oracle.
 *
 * Evaluates mixed_deriv_fd on a step ladder h0, h0/sqrt(2), ... and
 * extrapolates the h^2 error expansion with a Neville tableau, tracking the
 * entry with the smallest neighbour discrepancy (the dfridr strategy). The
 * initial step keeps every stencil point inside the domain and well clear of
 * the diagonal.
 */
inline FdEstimate mixed_deriv_fd_richardson(const DerivableFunction& f,
                                            const MixedDiffRequest& req) {
    detail::validate_request(f, req);
    const int I = req.order_u;
    const int J = req.order_v;
    if (I + J == 0) return {divided_diff(f, req.u, req.v), 0.0};

    const double gap = std::abs(req.v - req.u);
    const double ext_u = 0.5 * I;
    const double ext_v = 0.5 * J;
    double h0 = 0.25;
    const Interval& dom = f.domain();
    if (I > 0 && std::isfinite(dom.lo)) h0 = std::min(h0, 0.5 * (req.u - dom.lo) / ext_u);
    if (I > 0 && std::isfinite(dom.hi)) h0 = std::min(h0, 0.5 * (dom.hi - req.u) / ext_u);
    if (J > 0 && std::isfinite(dom.lo)) h0 = std::min(h0, 0.5 * (req.v - dom.lo) / ext_v);
    if (J > 0 && std::isfinite(dom.hi)) h0 = std::min(h0, 0.5 * (dom.hi - req.v) / ext_v);
    h0 = std::min(h0, 0.6 * gap / (ext_u + ext_v));

    constexpr int kLevels = 10;
    const double ratio = std::sqrt(2.0);
    double tableau[kLevels][kLevels];
    double h = h0;
    tableau[0][0] = mixed_deriv_fd(f, req, h);
    FdEstimate best{tableau[0][0], std::numeric_limits<double>::infinity()};
    for (int m = 1; m < kLevels; ++m) {
        h /= ratio;
        tableau[m][0] = mixed_deriv_fd(f, req, h);
        double fac = ratio * ratio;
        double fpow = fac;
        for (int n = 1; n <= m; ++n) {
            tableau[m][n] = (fpow * tableau[m][n - 1] - tableau[m - 1][n - 1]) / (fpow - 1.0);
            fpow *= fac;
            const double err = std::max(std::abs(tableau[m][n] - tableau[m][n - 1]),
                                        std::abs(tableau[m][n] - tableau[m - 1][n - 1]));
            if (err <= best.error) {
                best = {tableau[m][n], err};
            }
        }
        // once the diagonal starts diverging, smaller steps only add round-off
        if (m > 3 && std::abs(tableau[m][m] - tableau[m - 1][m - 1]) >= 8.0 * best.error) {
            break;
        }
    }
    return best;
}

/// The derivative tower of f shifted by s orders: g = f^(s), g^(m) = f^(m+s).
inline DerivableFunction derivative_shift(const DerivableFunction& f, int s) {
    if (s < 0 || s > f.max_order()) {
        throw OrderTooHigh("derivative shift outside the tower of " + f.label());
    }
    return DerivableFunction(
        f.label() + "^(" + std::to_string(s) + ")", f.domain(), f.max_order() - s,
        [f, s](double x) { return f.deriv(s, x); },
        [f, s](int m, double x) { return f.deriv(m + s, x); },
        [f, s](long double x) { return f.deriv_ext(s, x); },
        [f, s](int m, long double x) { return f.deriv_ext(m + s, x); });
}

} // namespace recreg
