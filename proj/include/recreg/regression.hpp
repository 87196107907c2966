#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "recreg/distribution.hpp"
#include "recreg/errors.hpp"
#include "recreg/function_kernel.hpp"
#include "recreg/quadrature.hpp"
#include "recreg/record.hpp"
#include "recreg/rng.hpp"

namespace recreg {

/**
 * Which regression identity a residual is measured against.
 *
 * standard:       E[h^(k+r-1)(X(n)) | X(n-k) = u,   X(n+r) = v]
 *                   = (k+r-1)!/((k-1)!(r-1)!) * M^{(r-1,k-1)}(u, v)
 * shifted_prime:  E[h^(k+r-1)(X(n)) | X(n-k+1) = u2, X(n+r) = v]
 *                   = (k+r-2)!/((k-2)!(r-1)!) * M'^{(r-1,k-2)}(u2, v)
 *
 * where M is the divided difference of h, M' the divided difference of h',
 * and superscripts are mixed partial orders in (u, v). The shifted_prime
 * form conditions one record closer (inner gap k-1) and needs k >= 2.
 */
enum class IdentityVariant { standard, shifted_prime };

class RegressionIdentity {
public:
    RegressionIdentity(DerivableFunction h, int k, int r,
                       IdentityVariant variant = IdentityVariant::standard)
        : h_(std::move(h)), k_(k), r_(r), variant_(variant) {
        if (k < 1 || r < 1) throw ContextError("identity orders need k >= 1, r >= 1");
        if (variant == IdentityVariant::shifted_prime && k < 2) {
            throw ContextError("shifted_prime identity needs k >= 2");
        }
        if (k + r - 1 > h_.max_order()) {
            throw OrderTooHigh("identity needs derivative order " + std::to_string(k + r - 1) +
                               " of " + h_.label());
        }
    }

    /// (k+r-1)! / ((k-1)!(r-1)!) for standard, the k-shifted analog otherwise;
    /// exact integer arithmetic throughout.
    double coefficient() const {
        if (variant_ == IdentityVariant::standard) {
            return static_cast<double>(factorial_u64(k_ + r_ - 1)) /
                   (static_cast<double>(factorial_u64(k_ - 1)) *
                    static_cast<double>(factorial_u64(r_ - 1)));
        }
        return static_cast<double>(factorial_u64(k_ + r_ - 2)) /
               (static_cast<double>(factorial_u64(k_ - 2)) *
                static_cast<double>(factorial_u64(r_ - 1)));
    }

    const DerivableFunction& h() const { return h_; }
    int k() const { return k_; }
    int r() const { return r_; }
    IdentityVariant variant() const { return variant_; }

private:
    DerivableFunction h_;
    int k_, r_;
    IdentityVariant variant_;
};

enum class Method { quadrature, monte_carlo };

inline const char* method_name(Method m) {
    return m == Method::quadrature ? "quadrature" : "monte_carlo";
}

/// One evaluated grid point: both sides of an identity and their gap.
struct ResidualRow {
    ConditioningContext ctx;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0; // lhs - rhs, signed
    Method method = Method::quadrature;
    std::optional<double> mc_std_error;
    std::string error; // nonempty when this row failed to evaluate
};

// ---------------------------------------------------------------------------
// Conditional expectations
// ---------------------------------------------------------------------------

/// E[g(X(n)) | X(n-k)=u, X(n+r)=v] by adaptive quadrature of g against the
/// conditional density; absolute accuracy ~1e-10 on desk-scale integrands.
inline double cond_expect_quadrature(const DistributionModel& d, const ConditioningContext& ctx,
                                     const std::function<double(double)>& g,
                                     const QuadratureOptions& opts = {}) {
    validate_context(d, ctx);
    const double gap = hazard_gap(d, ctx);
    const double ru = d.hazard_R(ctx.u);
    const double coeff =
        static_cast<double>(factorial_u64(ctx.k + ctx.r - 1)) /
        (static_cast<double>(factorial_u64(ctx.k - 1)) * static_cast<double>(factorial_u64(ctx.r - 1)));
    const int k = ctx.k;
    const int r = ctx.r;
    auto integrand = [&](double t) {
        const double w = (d.hazard_R(t) - ru) / gap;
        const double dens = coeff * std::pow(w, k - 1) * std::pow(1.0 - w, r - 1) *
                            d.hazard_R_prime(t) / gap;
        return g(t) * dens;
    };
    return integrate_adaptive(integrand, ctx.u, ctx.v, opts);
}

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo counterpart over exact bridge draws.
inline McEstimate cond_expect_mc(const DistributionModel& d, const ConditioningContext& ctx,
                                 const std::function<double(double)>& g, RandomStream& rng,
                                 std::int64_t n_draws) {
    if (n_draws < 2) throw ParamError("cond_expect_mc: need at least 2 draws");
    validate_context(d, ctx);
    RunningStats stats;
    for (std::int64_t i = 0; i < n_draws; ++i) {
        stats.add(g(sample_conditional(d, ctx, rng)));
    }
    return {stats.mean(), stats.std_error()};
}

// ---------------------------------------------------------------------------
// Closed-form right-hand sides and residuals
// ---------------------------------------------------------------------------

inline double closed_form_rhs(const RegressionIdentity& ident, double u, double v) {
    if (ident.variant() == IdentityVariant::standard) {
        const MixedDiffRequest req{ident.r() - 1, ident.k() - 1, u, v};
        return ident.coefficient() * mixed_deriv(ident.h(), req);
    }
    const DerivableFunction h_prime = derivative_shift(ident.h(), 1);
    const MixedDiffRequest req{ident.r() - 1, ident.k() - 2, u, v};
    return ident.coefficient() * mixed_deriv(h_prime, req);
}

/**
 * Evaluate both sides at one grid point. For the shifted_prime variant the
 * caller passes the nominal (k, r) context with u = u2; the effective
 * conditional law (inner gap k-1) is derived here so the two sides can never
 * drift apart.
 */
inline ResidualRow residual(const DistributionModel& d, const ConditioningContext& ctx,
                            const RegressionIdentity& ident,
                            const QuadratureOptions& opts = {}) {
    if (ctx.k != ident.k() || ctx.r != ident.r()) {
        throw ContextError("context (k,r) does not match the identity");
    }
    ConditioningContext eff = ctx;
    if (ident.variant() == IdentityVariant::shifted_prime) {
        eff.k = ctx.k - 1;
        eff.n = std::max(ctx.n - 1, eff.k + 1);
    }
    const int order = ident.k() + ident.r() - 1;
    const DerivableFunction& h = ident.h();
    auto g = [&h, order](double t) { return h.deriv(order, t); };

    ResidualRow row;
    row.ctx = eff;
    row.lhs = cond_expect_quadrature(d, eff, g, opts);
    row.rhs = closed_form_rhs(ident, ctx.u, ctx.v);
    row.residual = row.lhs - row.rhs;
    row.method = Method::quadrature;
    return row;
}

/// Monte Carlo version of the same row.
inline ResidualRow residual_mc(const DistributionModel& d, const ConditioningContext& ctx,
                               const RegressionIdentity& ident, RandomStream& rng,
                               std::int64_t n_draws) {
    if (ctx.k != ident.k() || ctx.r != ident.r()) {
        throw ContextError("context (k,r) does not match the identity");
    }
    ConditioningContext eff = ctx;
    if (ident.variant() == IdentityVariant::shifted_prime) {
        eff.k = ctx.k - 1;
        eff.n = std::max(ctx.n - 1, eff.k + 1);
    }
    const int order = ident.k() + ident.r() - 1;
    const DerivableFunction& h = ident.h();
    auto g = [&h, order](double t) { return h.deriv(order, t); };

    ResidualRow row;
    row.ctx = eff;
    const McEstimate est = cond_expect_mc(d, eff, g, rng, n_draws);
    row.lhs = est.mean;
    row.rhs = closed_form_rhs(ident, ctx.u, ctx.v);
    row.residual = row.lhs - row.rhs;
    row.method = Method::monte_carlo;
    row.mc_std_error = est.std_error;
    return row;
}

} // namespace recreg
