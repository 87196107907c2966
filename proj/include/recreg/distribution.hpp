#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "recreg/errors.hpp"
#include "recreg/math_util.hpp"
#include "recreg/rng.hpp"

namespace recreg {

/**
 * An absolutely continuous distribution seen through five views: F, f, the
 * quantile, and the cumulative hazard R(x) = -ln(1 - F(x)) with its
 * derivative. Everything is immutable after construction.
 *
 * Conventions: cdf is exactly 0 at or below support_lo and exactly 1 at or
 * above support_hi; quantile takes p in (0, 1); survival_quantile(q) returns
 * the x with 1 - F(x) = q, evaluated stably for tiny q (it is what the
 * record-value samplers use, since records live far in the upper tail).
 */
class DistributionModel {
public:
    using Fn = std::function<double(double)>;

    DistributionModel(std::string label, double lo, double hi, Fn cdf, Fn pdf,
                      Fn quantile, Fn survival_quantile, Fn hazard, Fn hazard_prime)
        : label_(std::move(label)),
          lo_(lo),
          hi_(hi),
          cdf_(std::move(cdf)),
          pdf_(std::move(pdf)),
          quantile_(std::move(quantile)),
          survival_quantile_(std::move(survival_quantile)),
          hazard_(std::move(hazard)),
          hazard_prime_(std::move(hazard_prime)) {}

    double cdf(double x) const {
        if (x <= lo_) return 0.0;
        if (x >= hi_) return 1.0;
        return cdf_(x);
    }

    double pdf(double x) const {
        if (x <= lo_ || x >= hi_) return 0.0;
        return pdf_(x);
    }

    double quantile(double p) const {
        if (!(p > 0.0 && p < 1.0)) throw DomainError(label_ + ": quantile needs p in (0,1)");
        return quantile_(p);
    }

    double survival_quantile(double q) const {
        if (!(q > 0.0 && q < 1.0)) {
            throw DomainError(label_ + ": survival_quantile needs q in (0,1)");
        }
        return survival_quantile_(q);
    }

    /// R(x) = -ln(1 - F(x)); 0 at or below the left endpoint.
    double hazard_R(double x) const {
        if (x <= lo_) return 0.0;
        if (x >= hi_) return std::numeric_limits<double>::infinity();
        return hazard_(x);
    }

    double hazard_R_prime(double x) const {
        if (x <= lo_ || x >= hi_) return 0.0;
        return hazard_prime_(x);
    }

    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    const std::string& label() const { return label_; }

private:
    std::string label_;
    double lo_, hi_;
    Fn cdf_, pdf_, quantile_, survival_quantile_, hazard_, hazard_prime_;
};

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// F(x) = 1 - e^{-c (x - l0)} on (l0, inf); R(x) = c (x - l0).
inline DistributionModel shifted_exponential(double c, double l0) {
    if (!(c > 0.0)) throw ParamError("shifted_exponential: rate c must be positive");
    std::ostringstream name;
    name << "exp(c=" << c << ",l0=" << l0 << ")";
    return DistributionModel(
        name.str(), l0, std::numeric_limits<double>::infinity(),
        [c, l0](double x) { return -std::expm1(-c * (x - l0)); },
        [c, l0](double x) { return c * std::exp(-c * (x - l0)); },
        [c, l0](double p) { return l0 - std::log1p(-p) / c; },
        [c, l0](double q) { return l0 - std::log(q) / c; },
        [c, l0](double x) { return c * (x - l0); },
        [c](double) { return c; });
}

/// G(y) = 1 - e^{-c y^alpha} on (0, inf); R(y) = c y^alpha.
inline DistributionModel weibull(double c, double alpha) {
    if (!(c > 0.0) || !(alpha > 0.0)) throw ParamError("weibull: c and alpha must be positive");
    std::ostringstream name;
    name << "weibull(c=" << c << ",alpha=" << alpha << ")";
    return DistributionModel(
        name.str(), 0.0, std::numeric_limits<double>::infinity(),
        [c, alpha](double y) { return -std::expm1(-c * std::pow(y, alpha)); },
        [c, alpha](double y) {
            return c * alpha * std::pow(y, alpha - 1.0) * std::exp(-c * std::pow(y, alpha));
        },
        [c, alpha](double p) { return std::pow(-std::log1p(-p) / c, 1.0 / alpha); },
        [c, alpha](double q) { return std::pow(-std::log(q) / c, 1.0 / alpha); },
        [c, alpha](double y) { return c * std::pow(y, alpha); },
        [c, alpha](double y) { return c * alpha * std::pow(y, alpha - 1.0); });
}

/// G(y) = 1 - (a/y)^c on (a, inf); R(y) = c ln(y/a).
inline DistributionModel pareto(double a, double c) {
    if (!(a > 0.0) || !(c > 0.0)) throw ParamError("pareto: a and c must be positive");
    std::ostringstream name;
    name << "pareto(a=" << a << ",c=" << c << ")";
    return DistributionModel(
        name.str(), a, std::numeric_limits<double>::infinity(),
        [a, c](double y) { return -std::expm1(c * std::log(a / y)); },
        [a, c](double y) { return (c / y) * std::pow(a / y, c); },
        [a, c](double p) { return a * std::exp(-std::log1p(-p) / c); },
        [a, c](double q) { return a * std::pow(q, -1.0 / c); },
        [a, c](double y) { return c * std::log(y / a); },
        [c](double y) { return c / y; });
}

/// Uniform on (a, b); R(x) = -ln((b - x)/(b - a)).
inline DistributionModel uniform(double a, double b) {
    if (!(a < b)) throw ParamError("uniform: need a < b");
    std::ostringstream name;
    name << "uniform(a=" << a << ",b=" << b << ")";
    const double w = b - a;
    return DistributionModel(
        name.str(), a, b,
        [a, w](double x) { return (x - a) / w; },
        [w](double) { return 1.0 / w; },
        [a, w](double p) { return a + w * p; },
        [b, w](double q) { return b - w * q; },
        [b, w](double x) { return -std::log((b - x) / w); },
        [b](double x) { return 1.0 / (b - x); });
}

/**
 * Inverse Weibull, G(y) = exp(-c y^{-1/2}) on (0, inf).
 *
 * Note the exponent: exp(-c y^{+1/2}) would be decreasing in y and is not a
 * distribution function; the corrected form below is the valid CDF (it rises
 * from 0 at y -> 0+ to 1 at infinity), hence the label.
 */
inline DistributionModel inverse_weibull_corrected(double c) {
    if (!(c > 0.0)) throw ParamError("inverse_weibull_corrected: c must be positive");
    std::ostringstream name;
    name << "invweibull(c=" << c << ")";
    auto cdf = [c](double y) { return std::exp(-c / std::sqrt(y)); };
    auto pdf = [c, cdf](double y) { return cdf(y) * 0.5 * c * std::pow(y, -1.5); };
    return DistributionModel(
        name.str(), 0.0, std::numeric_limits<double>::infinity(), cdf, pdf,
        [c](double p) { return std::pow(c / std::log(1.0 / p), 2.0); },
        [c](double q) { return std::pow(c / -std::log1p(-q), 2.0); },
        [cdf](double y) { return -std::log1p(-cdf(y)); },
        [cdf, pdf](double y) { return pdf(y) / (1.0 - cdf(y)); });
}

// ---------------------------------------------------------------------------
// Monotone transforms: G(y) = 1 - e^{-c [T(y) - tau]}
// ---------------------------------------------------------------------------

struct TransformFamily {
    std::function<double(double)> T;             // strictly increasing on (lo, hi)
    double tau = 0.0;                            // T(lo+), must be finite
    double c = 1.0;
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    std::function<double(double)> T_prime;       // optional; FD fallback if absent
    std::function<double(double)> T_inverse;     // optional; bisection fallback
    std::string label = "transform";
};

namespace detail {

/// Probe T on a grid and reject any non-increase.
inline void validate_monotone(const TransformFamily& tf) {
    const int kProbes = 96;
    std::vector<double> xs;
    xs.reserve(kProbes);
    if (std::isfinite(tf.hi)) {
        const double w = tf.hi - tf.lo;
        for (int i = 1; i < kProbes; ++i) xs.push_back(tf.lo + w * i / kProbes);
    } else {
        // geometric probes reaching ~1e6 above the left endpoint
        double step = 1e-6;
        double x = tf.lo + step;
        while (x < tf.lo + 1e6 && static_cast<int>(xs.size()) < kProbes * 2) {
            xs.push_back(x);
            step *= 1.5;
            x = tf.lo + step;
        }
    }
    double prev = -std::numeric_limits<double>::infinity();
    for (double x : xs) {
        const double t = tf.T(x);
        if (!(t > prev)) {
            throw NonMonotoneTransform(tf.label + ": T is not strictly increasing near " +
                                       std::to_string(x));
        }
        prev = t;
    }
}

/// Solve T(y) = target by bisection on a bracket grown from the left endpoint.
inline double invert_transform(const TransformFamily& tf, double target) {
    double lo = tf.lo;
    double hi;
    if (std::isfinite(tf.hi)) {
        hi = tf.hi;
    } else {
        double step = std::max(1.0, std::abs(tf.lo));
        hi = tf.lo + step;
        int grow = 0;
        while (tf.T(hi) < target) {
            step *= 2.0;
            hi = tf.lo + step;
            if (++grow > 200) throw ParamError(tf.label + ": failed to bracket T inverse");
        }
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (tf.T(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

inline DistributionModel from_transform(const TransformFamily& tf) {
    if (!(tf.c > 0.0)) throw ParamError("from_transform: c must be positive");
    if (!std::isfinite(tf.tau)) throw ParamError("from_transform: tau must be finite");
    detail::validate_monotone(tf);

    auto T = tf.T;
    const double tau = tf.tau;
    const double c = tf.c;
    auto t_prime = tf.T_prime;
    if (!t_prime) {
        t_prime = [T](double y) {
            const double h = std::cbrt(std::numeric_limits<double>::epsilon()) *
                             std::max(1.0, std::abs(y));
            return (T(y + h) - T(y - h)) / (2.0 * h);
        };
    }
    auto inverse = [tf](double target) {
        if (tf.T_inverse) return tf.T_inverse(target);
        return detail::invert_transform(tf, target);
    };

    auto hazard = [T, tau, c](double y) { return c * (T(y) - tau); };
    auto hazard_prime = [t_prime, c](double y) { return c * t_prime(y); };
    return DistributionModel(
        tf.label, tf.lo, tf.hi,
        [hazard](double y) { return -std::expm1(-hazard(y)); },
        [hazard, hazard_prime](double y) { return hazard_prime(y) * std::exp(-hazard(y)); },
        [inverse, tau, c](double p) { return inverse(tau - std::log1p(-p) / c); },
        [inverse, tau, c](double q) { return inverse(tau - std::log(q) / c); },
        hazard, hazard_prime);
}

/// Inverse-transform sampling: count i.i.d. draws quantile(U).
inline std::vector<double> sample(const DistributionModel& d, RandomStream& rng,
                                  std::int64_t count) {
    if (count < 0) throw ParamError("sample: count must be nonnegative");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        out.push_back(d.quantile(rng.uniform01()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CLI-facing family spec parser
// ---------------------------------------------------------------------------

/**
 * Parse a family spec string:
 *
 *   exp:c=1,l0=0 | weibull:c=1,alpha=2 | pareto:a=1,c=2
 *   uniform:a=0,b=1 | invweibull:c=1
 */
inline DistributionModel parse_dist_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string family = spec.substr(0, colon);
    std::map<std::string, double> kv;
    if (colon != std::string::npos) {
        std::stringstream rest(spec.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw ParamError("dist spec: expected key=value, got '" + item + "'");
            }
            try {
                kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw ParamError("dist spec: bad number in '" + item + "'");
            }
        }
    }
    auto get = [&](const std::string& key, double fallback) {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : it->second;
    };
    if (family == "exp") return shifted_exponential(get("c", 1.0), get("l0", 0.0));
    if (family == "weibull") return weibull(get("c", 1.0), get("alpha", 1.0));
    if (family == "pareto") return pareto(get("a", 1.0), get("c", 1.0));
    if (family == "uniform") return uniform(get("a", 0.0), get("b", 1.0));
    if (family == "invweibull") return inverse_weibull_corrected(get("c", 1.0));
    throw ParamError("unknown distribution family '" + family + "'");
}

} // namespace recreg
