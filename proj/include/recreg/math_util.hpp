#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "recreg/errors.hpp"

namespace recreg {

inline constexpr int kMaxFactorialArg = 20; // 20! still fits in uint64_t

/// n! as an exact 64-bit integer. Throws OrderTooHigh past 20.
inline std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > kMaxFactorialArg) {
        throw OrderTooHigh("factorial argument " + std::to_string(n) +
                           " outside exact range [0, 20]");
    }
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Falling factorial (x)_n = x (x-1) ... (x-n+1), (x)_0 = 1, exact.
inline std::int64_t falling_factorial_i64(int x, int n) {
    if (n < 0 || n > kMaxFactorialArg) {
        throw OrderTooHigh("falling factorial order " + std::to_string(n) +
                           " outside exact range [0, 20]");
    }
    std::int64_t p = 1;
    for (int i = 0; i < n; ++i) p *= static_cast<std::int64_t>(x - i);
    return p;
}

/// Binomial coefficient C(n, k) as exact integer, n <= 20.
inline std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial_u64(n) / (factorial_u64(k) * factorial_u64(n - k));
}

/// Open interval, endpoints may be infinite.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double x) const { return x > lo && x < hi; }
};

inline Interval positive_halfline() { return Interval{0.0, std::numeric_limits<double>::infinity()}; }
inline Interval real_line() { return Interval{}; }

/// Streaming mean / variance accumulator (Welford).
class RunningStats {
public:
    void add(double x) {
        ++n_;
        const double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
        if (x < min_) min_ = x;
        if (x > max_) max_ = x;
    }

    std::int64_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double stddev() const { return std::sqrt(variance()); }
    double std_error() const {
        return n_ > 1 ? stddev() / std::sqrt(static_cast<double>(n_)) : 0.0;
    }
    double min() const { return min_; }
    double max() const { return max_; }

private:
    std::int64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double min_ = std::numeric_limits<double>::infinity();
    double max_ = -std::numeric_limits<double>::infinity();
};

} // namespace recreg
