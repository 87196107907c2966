#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "recreg/distribution.hpp"
#include "recreg/errors.hpp"
#include "recreg/math_util.hpp"
#include "recreg/rng.hpp"

namespace recreg {

/// Realized upper record values X(1) < X(2) < ... < X(n).
struct RecordSequence {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    bool strictly_increasing() const {
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (!(values[i] > values[i - 1])) return false;
        }
        return true;
    }
};

/**
 * The conditioning event X(n-k) = u, X(n+r) = v.
 *
 * u may sit exactly on the left support endpoint (where the cumulative
 * hazard vanishes); v must be strictly interior. The conditional law of X(n)
 * depends on the tuple only through (k, r, u, v), never through n.
 */
struct ConditioningContext {
    int n = 2;
    int k = 1;
    int r = 1;
    double u = 0.0;
    double v = 1.0;
};

inline void validate_context(const DistributionModel& d, const ConditioningContext& ctx) {
    if (ctx.k < 1 || ctx.n < ctx.k + 1) {
        throw ContextError("need 1 <= k <= n-1, got k=" + std::to_string(ctx.k) +
                           " n=" + std::to_string(ctx.n));
    }
    if (ctx.r < 1) throw ContextError("need r >= 1, got r=" + std::to_string(ctx.r));
    if (!(ctx.u < ctx.v)) throw ContextError("need u < v");
    if (ctx.u < d.support_lo() || !(ctx.v > d.support_lo()) || !(ctx.v < d.support_hi())) {
        throw ContextError("conditioning points outside the support of " + d.label());
    }
}

/// R(v) - R(u), guarded against degenerate conditioning.
inline double hazard_gap(const DistributionModel& d, const ConditioningContext& ctx) {
    const double gap = d.hazard_R(ctx.v) - d.hazard_R(ctx.u);
    if (!(gap > 1e-14)) {
        throw DegenerateHazard("hazard gap R(v)-R(u) = " + std::to_string(gap) +
                               " below 1e-14 for " + d.label());
    }
    return gap;
}

// ---------------------------------------------------------------------------
// Record sampling
// ---------------------------------------------------------------------------

inline constexpr std::int64_t kStreamHorizonCap = 10'000'000;

/// Records observed among the first `horizon` i.i.d. draws (oracle path:
/// a literal scan of the stream; the first draw is always a record).
inline RecordSequence sample_records_stream(const DistributionModel& d, RandomStream& rng,
                                            std::int64_t horizon) {
    if (horizon < 1) throw ParamError("sample_records_stream: horizon must be >= 1");
    RecordSequence seq;
    double best = -std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < horizon; ++i) {
        const double x = d.quantile(rng.uniform01());
        if (x > best) {
            best = x;
            seq.values.push_back(x);
        }
    }
    return seq;
}

/// Scan the stream until n records appear. Raises HorizonExhausted if the
/// draw budget runs out first; counts beyond ~16 are out of reach anyway.
inline RecordSequence sample_records_stream_n(const DistributionModel& d, RandomStream& rng,
                                              int n, std::int64_t horizon = kStreamHorizonCap) {
    if (n < 1) throw ParamError("sample_records_stream_n: n must be >= 1");
    horizon = std::min(horizon, kStreamHorizonCap);
    RecordSequence seq;
    double best = -std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < horizon; ++i) {
        const double x = d.quantile(rng.uniform01());
        if (x > best) {
            best = x;
            seq.values.push_back(x);
            if (static_cast<int>(seq.values.size()) == n) return seq;
        }
    }
    throw HorizonExhausted("only " + std::to_string(seq.values.size()) + " of " +
                           std::to_string(n) + " records within " +
                           std::to_string(horizon) + " draws");
}

/**
 * Exact sampler of (X(1), ..., X(n)).
 *
 * R maps the records of F to records of the standard exponential, whose
 * n-th record is a sum of n unit exponentials; so X(i) is the point where
 * the survival 1 - F equals e^{-Gamma_i} with Gamma_i the running sum.
 */
inline RecordSequence sample_records_gamma(const DistributionModel& d, RandomStream& rng,
                                           int n) {
    if (n < 1) throw ParamError("sample_records_gamma: n must be >= 1");
    RecordSequence seq;
    seq.values.reserve(static_cast<std::size_t>(n));
    double gamma = 0.0;
    for (int i = 0; i < n; ++i) {
        gamma += rng.exponential();
        seq.values.push_back(d.survival_quantile(std::exp(-gamma)));
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Conditional law of X(n) given X(n-k) = u, X(n+r) = v
// ---------------------------------------------------------------------------

/**
 * Density at t, for u < t < v:
 *
 *   (k+r-1)! / ((k-1)!(r-1)!) * w^{k-1} (1-w)^{r-1} * R'(t) / (R(v)-R(u)),
 *   w = (R(t)-R(u)) / (R(v)-R(u)),
 *
 * and 0 outside (u, v). In the variable w this is the Beta(k, r) law.
 */
inline double conditional_density(const DistributionModel& d, const ConditioningContext& ctx,
                                  double t) {
    validate_context(d, ctx);
    const double gap = hazard_gap(d, ctx);
    if (!(t > ctx.u && t < ctx.v)) return 0.0;
    const double coeff =
        static_cast<double>(factorial_u64(ctx.k + ctx.r - 1)) /
        (static_cast<double>(factorial_u64(ctx.k - 1)) * static_cast<double>(factorial_u64(ctx.r - 1)));
    const double w = (d.hazard_R(t) - d.hazard_R(ctx.u)) / gap;
    return coeff * std::pow(w, ctx.k - 1) * std::pow(1.0 - w, ctx.r - 1) *
           d.hazard_R_prime(t) / gap;
}

/**
 * Exact bridge draw of X(n): B ~ Beta(k, r) in hazard space, mapped back
 * through the survival quantile. Always lands strictly inside (u, v).
 */
inline double sample_conditional(const DistributionModel& d, const ConditioningContext& ctx,
                                 RandomStream& rng) {
    validate_context(d, ctx);
    const double gap = hazard_gap(d, ctx);
    const double ru = d.hazard_R(ctx.u);
    const double b = rng.beta_integer(ctx.k, ctx.r);
    double t = d.survival_quantile(std::exp(-(ru + gap * b)));
    // guard the open interval against the last-ulp rounding of the quantile
    if (t <= ctx.u) t = std::nextafter(ctx.u, ctx.v);
    if (t >= ctx.v) t = std::nextafter(ctx.v, ctx.u);
    return t;
}

} // namespace recreg
