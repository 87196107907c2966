#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recreg/distribution.hpp"
#include "recreg/errors.hpp"
#include "recreg/function_kernel.hpp"
#include "recreg/record.hpp"
#include "recreg/regression.hpp"

namespace recreg {

enum class Verdict { holds, fails, inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "inconclusive";
    }
}

/// A hold tolerance and a fail floor with a deliberate inconclusive band
/// between them, so quadrature noise cannot flip a verdict.
struct VerdictThresholds {
    double hold_tol = 1e-6;
    double fail_floor = 1e-3;
};

/**
 * A named, runnable verification unit: one distribution, a grid of
 * conditioning contexts, and a per-context row evaluator. Mean-form
 * scenarios additionally expose their integrand, right-hand side, and
 * generating transform so suite-level cross-checks can reuse them.
 */
struct Scenario {
    using RowFn =
        std::function<ResidualRow(const DistributionModel&, const ConditioningContext&)>;

    std::string name;
    DistributionModel dist;
    std::vector<ConditioningContext> grid;
    RowFn row_fn;
    Verdict expected = Verdict::holds;

    std::string mean_form;                                        // "", "arithmetic", ...
    std::optional<TransformFamily> transform;
    std::function<double(double)> integrand;                      // mean scenarios
    std::function<double(const ConditioningContext&)> rhs_fn;     // mean scenarios
};

struct ResidualReport {
    std::string scenario;
    std::vector<ResidualRow> rows;
    double max_abs_residual = 0.0;
    Verdict verdict = Verdict::inconclusive;
    std::optional<Verdict> expected; // not serialized; drives verify exit codes
};

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

inline const std::vector<std::pair<double, double>>& default_quantile_pairs() {
    static const std::vector<std::pair<double, double>> pairs = {
        {0.2, 0.5}, {0.3, 0.8}, {0.6, 0.9}};
    return pairs;
}

inline const std::vector<std::pair<int, int>>& default_kr_grid() {
    static const std::vector<std::pair<int, int>> kr = {
        {1, 1}, {2, 1}, {3, 1}, {2, 2}, {2, 3}};
    return kr;
}

/// Contexts from quantile pairs of d crossed with (k, r) combinations;
/// quantile anchoring keeps every context inside the support of any family.
inline std::vector<ConditioningContext> make_grid(
    const DistributionModel& d, const std::vector<std::pair<int, int>>& kr,
    const std::vector<std::pair<double, double>>& quantile_pairs = default_quantile_pairs()) {
    std::vector<ConditioningContext> grid;
    grid.reserve(kr.size() * quantile_pairs.size());
    for (const auto& [k, r] : kr) {
        for (const auto& [q1, q2] : quantile_pairs) {
            grid.push_back({k + 1, k, r, d.quantile(q1), d.quantile(q2)});
        }
    }
    return grid;
}

// ---------------------------------------------------------------------------
// Running scenarios
// ---------------------------------------------------------------------------

namespace detail {

inline bool row_less(const ResidualRow& a, const ResidualRow& b) {
    const auto key = [](const ResidualRow& x) {
        return std::make_tuple(x.ctx.n, x.ctx.k, x.ctx.r, x.ctx.u, x.ctx.v,
                               static_cast<int>(x.method));
    };
    return key(a) < key(b);
}

} // namespace detail

/// Verdict over the quadrature rows; Monte Carlo rows are consistency data
/// on their own standard-error scale and never flip a verdict.
inline Verdict compute_verdict(const std::vector<ResidualRow>& rows,
                               const VerdictThresholds& thr) {
    bool any_error = false;
    bool any_quadrature = false;
    double mx = 0.0;
    for (const auto& row : rows) {
        if (!row.error.empty()) {
            any_error = true;
            continue;
        }
        if (row.method != Method::quadrature) continue;
        any_quadrature = true;
        mx = std::max(mx, std::abs(row.residual));
    }
    if (!any_quadrature) return Verdict::inconclusive;
    if (mx > thr.fail_floor) return Verdict::fails;
    if (!any_error && mx <= thr.hold_tol) return Verdict::holds;
    return Verdict::inconclusive;
}

/// Evaluate every grid point; a row that throws is recorded with its error
/// text instead of aborting the rest of the grid.
inline ResidualReport run_scenario(const Scenario& scn, const VerdictThresholds& thr = {}) {
    ResidualReport report;
    report.scenario = scn.name;
    report.expected = scn.expected;
    report.rows.reserve(scn.grid.size());
    for (const auto& ctx : scn.grid) {
        try {
            report.rows.push_back(scn.row_fn(scn.dist, ctx));
        } catch (const Error& e) {
            ResidualRow row;
            row.ctx = ctx;
            row.lhs = row.rhs = row.residual = std::numeric_limits<double>::quiet_NaN();
            row.error = e.what();
            report.rows.push_back(row);
        }
    }
    std::sort(report.rows.begin(), report.rows.end(), detail::row_less);
    for (const auto& row : report.rows) {
        if (row.error.empty()) {
            report.max_abs_residual = std::max(report.max_abs_residual, std::abs(row.residual));
        }
    }
    report.verdict = compute_verdict(report.rows, thr);
    return report;
}

/// Row evaluator for the record-regression identity with h(x) = x^{k+r}/(k+r)!.
inline Scenario::RowFn identity_row_fn(IdentityVariant variant = IdentityVariant::standard) {
    return [variant](const DistributionModel& d, const ConditioningContext& ctx) {
        const RegressionIdentity ident(power_normalized(ctx.k + ctx.r), ctx.k, ctx.r, variant);
        return residual(d, ctx, ident);
    };
}

/// Row evaluator for a mean-form scenario: quadrature of g on the left,
/// closed-form mean on the right.
inline Scenario::RowFn mean_row_fn(std::function<double(double)> g,
                                   std::function<double(const ConditioningContext&)> rhs) {
    return [g = std::move(g), rhs = std::move(rhs)](const DistributionModel& d,
                                                    const ConditioningContext& ctx) {
        ResidualRow row;
        row.ctx = ctx;
        row.lhs = cond_expect_quadrature(d, ctx, g);
        row.rhs = rhs(ctx);
        row.residual = row.lhs - row.rhs;
        return row;
    };
}

// ---------------------------------------------------------------------------
// Exponentiality diagnosis
// ---------------------------------------------------------------------------

struct GridSpec {
    std::vector<std::pair<double, double>> quantile_pairs = default_quantile_pairs();
    std::vector<std::pair<int, int>> kr = default_kr_grid();
    VerdictThresholds thresholds{};
};

/**
 * Run the identity residual grid on d and call the verdict: `holds` is
 * numerical evidence that d is a shifted exponential, `fails` is a
 * counterexample witness, anything between is inconclusive.
 */
inline ResidualReport diagnose_exponentiality(const DistributionModel& d,
                                              const GridSpec& spec = {}) {
    if (spec.quantile_pairs.size() * spec.kr.size() < 9) {
        throw ContextError("diagnosis grid must define at least 9 contexts");
    }
    Scenario scn{"diagnose/" + d.label(), d, make_grid(d, spec.kr, spec.quantile_pairs),
                 identity_row_fn(), Verdict::holds, "", std::nullopt, nullptr, nullptr};
    ResidualReport report = run_scenario(scn, spec.thresholds);
    report.expected.reset();
    return report;
}

// ---------------------------------------------------------------------------
// Mean-form scenarios (weighted arithmetic / geometric / harmonic)
// ---------------------------------------------------------------------------

/// A monotone function with optional exact derivative and inverse; the
/// builders fall back to finite differences / bisection when those are absent.
struct MonotoneFunction {
    std::function<double(double)> fn;
    Interval domain = positive_halfline();
    std::function<double(double)> fn_prime;
    std::function<double(double)> fn_inverse;
    std::string label = "g";
};

namespace detail {

inline double probe_left_limit(const std::function<double(double)>& T, const Interval& dom) {
    const double x = dom.lo + 1e-9 * std::max(1.0, std::abs(dom.lo));
    const double t = T(x);
    if (!std::isfinite(t)) throw ParamError("transform has no finite left limit");
    return t;
}

inline void require_positive_decreasing(const MonotoneFunction& g) {
    const double a = g.domain.lo + 0.1 * std::max(1.0, std::abs(g.domain.lo));
    const double b = a + std::max(1.0, std::abs(a));
    if (!(g.fn(a) > 0.0) || !(g.fn(b) > 0.0)) {
        throw DomainError(g.label + " must be positive on its domain");
    }
}

inline std::string param_suffix(int k, double c) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "/k=%d,c=%g", k, c);
    return buf;
}

} // namespace detail

/**
 * E[g(Y(n)) | Y(n-k)=s, Y(n+1)=t] = (k g(t) + g(s)) / (k+1) holds exactly
 * when G(y) = 1 - e^{-c [g(y) - g(lo+)]}; the scenario carries that G and a
 * default quantile grid.
 */
inline Scenario scenario_arithmetic_mean(const MonotoneFunction& g, int k, double c,
                                         std::optional<double> tau = {},
                                         std::string name = "arithmetic-mean") {
    TransformFamily tf;
    tf.T = g.fn;
    tf.T_prime = g.fn_prime;
    tf.T_inverse = g.fn_inverse;
    tf.tau = tau ? *tau : detail::probe_left_limit(g.fn, g.domain);
    tf.c = c;
    tf.lo = g.domain.lo;
    tf.hi = g.domain.hi;
    tf.label = "arith[" + g.label + "]";
    DistributionModel dist = from_transform(tf);

    auto gf = g.fn;
    auto rhs = [gf, k](const ConditioningContext& ctx) {
        return (k * gf(ctx.v) + gf(ctx.u)) / (k + 1.0);
    };
    Scenario scn{std::move(name) + detail::param_suffix(k, c),
                 std::move(dist),
                 {},
                 mean_row_fn(gf, rhs),
                 Verdict::holds,
                 "arithmetic",
                 tf,
                 gf,
                 rhs};
    scn.grid = make_grid(scn.dist, {{k, 1}});
    return scn;
}

/**
 * E[g(Y(n)) | Y(n-k)=s, Y(n+1)=t] = g(t)^{k/(k+1)} g(s)^{1/(k+1)} for
 * strictly decreasing positive g, under the law induced by the increasing
 * transform T = g^{-1/(k+1)}. At k = 1 the right side is the geometric mean.
 */
inline Scenario scenario_geometric_mean(const MonotoneFunction& g, int k, double c,
                                        std::optional<double> tau = {},
                                        std::string name = "geometric-mean") {
    detail::require_positive_decreasing(g);
    const double expo = -1.0 / (k + 1.0);
    TransformFamily tf;
    tf.T = [gf = g.fn, expo](double y) { return std::pow(gf(y), expo); };
    if (g.fn_prime) {
        tf.T_prime = [gf = g.fn, gp = g.fn_prime, expo](double y) {
            return expo * std::pow(gf(y), expo - 1.0) * gp(y);
        };
    }
    if (g.fn_inverse) {
        tf.T_inverse = [gi = g.fn_inverse, k](double x) {
            return gi(std::pow(x, -(k + 1.0)));
        };
    }
    tf.tau = tau ? *tau : detail::probe_left_limit(tf.T, g.domain);
    tf.c = c;
    tf.lo = g.domain.lo;
    tf.hi = g.domain.hi;
    tf.label = "geom[" + g.label + "]";
    DistributionModel dist = from_transform(tf);

    auto gf = g.fn;
    auto rhs = [gf, k](const ConditioningContext& ctx) {
        return std::pow(gf(ctx.v), k / (k + 1.0)) * std::pow(gf(ctx.u), 1.0 / (k + 1.0));
    };
    Scenario scn{std::move(name) + detail::param_suffix(k, c),
                 std::move(dist),
                 {},
                 mean_row_fn(gf, rhs),
                 Verdict::holds,
                 "geometric",
                 tf,
                 gf,
                 rhs};
    scn.grid = make_grid(scn.dist, {{k, 1}});
    return scn;
}

/**
 * E[g(Y(n)) | Y(n-1)=s, Y(n+1)=t] = 2 g(s) g(t) / (g(s) + g(t)) for strictly
 * decreasing positive g, under the law induced by T = g^{-2}; k = r = 1.
 */
inline Scenario scenario_harmonic_mean(const MonotoneFunction& g, double c,
                                       std::optional<double> tau = {},
                                       std::string name = "harmonic-mean") {
    detail::require_positive_decreasing(g);
    TransformFamily tf;
    tf.T = [gf = g.fn](double y) { return std::pow(gf(y), -2.0); };
    if (g.fn_prime) {
        tf.T_prime = [gf = g.fn, gp = g.fn_prime](double y) {
            return -2.0 * std::pow(gf(y), -3.0) * gp(y);
        };
    }
    if (g.fn_inverse) {
        tf.T_inverse = [gi = g.fn_inverse](double x) { return gi(std::pow(x, -0.5)); };
    }
    tf.tau = tau ? *tau : detail::probe_left_limit(tf.T, g.domain);
    tf.c = c;
    tf.lo = g.domain.lo;
    tf.hi = g.domain.hi;
    tf.label = "harm[" + g.label + "]";
    DistributionModel dist = from_transform(tf);

    auto gf = g.fn;
    auto rhs = [gf](const ConditioningContext& ctx) {
        const double gs = gf(ctx.u);
        const double gt = gf(ctx.v);
        return 2.0 * gs * gt / (gs + gt);
    };
    Scenario scn{std::move(name) + detail::param_suffix(1, c),
                 std::move(dist),
                 {},
                 mean_row_fn(gf, rhs),
                 Verdict::holds,
                 "harmonic",
                 tf,
                 gf,
                 rhs};
    scn.grid = make_grid(scn.dist, {{1, 1}});
    return scn;
}

/// E[Y(n)^{-a(k+1)} | Y(n-k)=s, Y(n+1)=t] = t^{-a k} s^{-a} under the
/// Weibull law G(y) = 1 - e^{-c y^a}.
inline Scenario scenario_weibull_example(double alpha, double c, int k) {
    if (!(alpha > 0.0) || !(c > 0.0)) throw ParamError("weibull example: alpha, c > 0");
    DistributionModel dist = weibull(c, alpha);
    auto g = [alpha, k](double y) { return std::pow(y, -alpha * (k + 1)); };
    auto rhs = [alpha, k](const ConditioningContext& ctx) {
        return std::pow(ctx.v, -alpha * k) * std::pow(ctx.u, -alpha);
    };
    char buf[64];
    std::snprintf(buf, sizeof(buf), "weibull-example/alpha=%g,c=%g,k=%d", alpha, c, k);
    Scenario scn{buf,          std::move(dist), {}, mean_row_fn(g, rhs), Verdict::holds,
                 "geometric",  std::nullopt,    g,  rhs};
    scn.grid = make_grid(scn.dist, {{k, 1}});
    return scn;
}

/**
 * E[(ln Y(n))^{-(k+1)} | Y(n-k)=s, Y(n+1)=t] = (ln t)^{-k} (ln s)^{-1} under
 * the Pareto law G(y) = 1 - (a/y)^c. The conditioning points must satisfy
 * s > max(a, 1) so the logarithms stay positive; the residuals do not depend
 * on a at fixed (s, t). A fixed (6, 10) context is appended to the grid so
 * reports under different a stay directly comparable.
 */
inline Scenario scenario_pareto_example(double a, double c, int k) {
    if (!(a > 0.0) || !(c > 0.0)) throw ParamError("pareto example: a, c > 0");
    DistributionModel dist = pareto(a, c);
    auto g = [k](double y) { return std::pow(std::log(y), -(k + 1.0)); };
    auto rhs = [k](const ConditioningContext& ctx) {
        return std::pow(std::log(ctx.v), -static_cast<double>(k)) / std::log(ctx.u);
    };
    char buf[64];
    std::snprintf(buf, sizeof(buf), "pareto-example/a=%g,c=%g,k=%d", a, c, k);
    Scenario scn{buf,         std::move(dist), {}, mean_row_fn(g, rhs), Verdict::holds,
                 "geometric", std::nullopt,    g,  rhs};
    scn.grid = make_grid(scn.dist, {{k, 1}});
    if (a < 6.0) scn.grid.push_back({k + 1, k, 1, 6.0, 10.0});
    for (const auto& ctx : scn.grid) {
        if (!(ctx.u > 1.0)) {
            throw DomainError("pareto example needs s > max(a, 1); got s = " +
                              std::to_string(ctx.u));
        }
    }
    return scn;
}

/// Same scenario structure evaluated under a different law; the grid is
/// rebuilt from the new law's quantiles (same (k, r) combinations).
inline Scenario with_distribution(const Scenario& base, DistributionModel dist,
                                  std::string name, Verdict expected = Verdict::fails) {
    std::vector<std::pair<int, int>> kr;
    for (const auto& ctx : base.grid) {
        std::pair<int, int> p{ctx.k, ctx.r};
        if (std::find(kr.begin(), kr.end(), p) == kr.end()) kr.push_back(p);
    }
    Scenario scn{std::move(name), std::move(dist), {},           base.row_fn, expected,
                 base.mean_form,  base.transform,  base.integrand, base.rhs_fn};
    scn.grid = make_grid(scn.dist, kr);
    return scn;
}

/// Max pairwise gap between the fixed-(s,t) residuals across Pareto scale
/// parameters; the regression relation does not involve a, so this is ~0.
inline double pareto_a_invariance(const std::vector<double>& a_values, double s, double t,
                                  double c = 1.0, int k = 1) {
    std::vector<double> residuals;
    for (double a : a_values) {
        Scenario scn = scenario_pareto_example(a, c, k);
        const ConditioningContext ctx{k + 1, k, 1, s, t};
        residuals.push_back(scn.row_fn(scn.dist, ctx).residual);
    }
    double gap = 0.0;
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        for (std::size_t j = i + 1; j < residuals.size(); ++j) {
            gap = std::max(gap, std::abs(residuals[i] - residuals[j]));
        }
    }
    return gap;
}

// ---------------------------------------------------------------------------
// Transform-space cross-check
// ---------------------------------------------------------------------------

/// The mean-scenario left side computed the other way around: through the
/// shifted exponential living in transform space. Agreement with the direct
/// quadrature under G validates the transform route.
inline double mean_lhs_via_exponential(const Scenario& scn, const ConditioningContext& ctx) {
    if (!scn.transform || !scn.integrand) {
        throw ParamError("scenario carries no transform metadata");
    }
    const TransformFamily& tf = *scn.transform;
    const DistributionModel expdist = shifted_exponential(tf.c, tf.tau);
    const ConditioningContext mapped{ctx.n, ctx.k, ctx.r, tf.T(ctx.u), tf.T(ctx.v)};
    auto g_in_t_space = [&](double x) {
        const double y = tf.T_inverse ? tf.T_inverse(x) : detail::invert_transform(tf, x);
        return scn.integrand(y);
    };
    return cond_expect_quadrature(expdist, mapped, g_in_t_space);
}

// ---------------------------------------------------------------------------
// Named scenario registry
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fmt_g(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

} // namespace detail

/// Default increasing g for the arithmetic-mean scenario.
inline MonotoneFunction cubic_g() {
    return {[](double y) { return y * y * y; },
            positive_halfline(),
            [](double y) { return 3.0 * y * y; },
            [](double x) { return std::cbrt(x); },
            "y^3"};
}

/// Default decreasing g for the geometric-mean scenario.
inline MonotoneFunction inv_square_g() {
    return {[](double y) { return 1.0 / (y * y); },
            positive_halfline(),
            [](double y) { return -2.0 / (y * y * y); },
            [](double x) { return 1.0 / std::sqrt(x); },
            "1/y^2"};
}

/// Default decreasing g for the harmonic-mean scenario.
inline MonotoneFunction reciprocal_g() {
    return {[](double y) { return 1.0 / y; },
            positive_halfline(),
            [](double y) { return -1.0 / (y * y); },
            [](double x) { return 1.0 / x; },
            "1/y"};
}

/// Every named scenario group, in canonical order.
inline std::vector<std::string> scenario_group_names() {
    return {"exponential-core",
            "exponential-pair",
            "arithmetic-mean",
            "arithmetic-mean-mismatch",
            "geometric-mean",
            "geometric-mean-mismatch",
            "harmonic-mean",
            "harmonic-mean-mismatch",
            "weibull-example",
            "weibull-example-mismatch",
            "pareto-example",
            "pareto-example-mismatch",
            "uniform-falsification",
            "pareto-falsification",
            "inverse-weibull-falsification"};
}

inline std::vector<Scenario> make_scenario_group(const std::string& group) {
    std::vector<Scenario> out;
    if (group == "exponential-core") {
        // the core identity grid: every (c, l0) with k, r in 1..4
        std::vector<std::pair<int, int>> kr;
        for (int k = 1; k <= 4; ++k) {
            for (int r = 1; r <= 4; ++r) kr.push_back({k, r});
        }
        for (double c : {0.5, 1.0, 2.0}) {
            for (double l0 : {0.0, 1.0}) {
                DistributionModel d = shifted_exponential(c, l0);
                Scenario scn{"exponential-core/c=" + detail::fmt_g(c) +
                                 ",l0=" + detail::fmt_g(l0),
                             d, make_grid(d, kr), identity_row_fn(), Verdict::holds};
                out.push_back(std::move(scn));
            }
        }
    } else if (group == "exponential-pair") {
        // both identity forms, run jointly, for gaps needing the paired statement
        for (double c : {1.0, 2.0}) {
            for (double l0 : {0.0, 1.0}) {
                for (auto [k, r] : {std::pair{2, 2}, std::pair{3, 2}}) {
                    DistributionModel d = shifted_exponential(c, l0);
                    const std::string base = "exponential-pair/c=" + detail::fmt_g(c) +
                                             ",l0=" + detail::fmt_g(l0) +
                                             ",k=" + std::to_string(k) +
                                             ",r=" + std::to_string(r);
                    out.push_back(Scenario{base + "/eq-a", d, make_grid(d, {{k, r}}),
                                           identity_row_fn(IdentityVariant::standard),
                                           Verdict::holds});
                    out.push_back(Scenario{base + "/eq-b", d, make_grid(d, {{k, r}}),
                                           identity_row_fn(IdentityVariant::shifted_prime),
                                           Verdict::holds});
                }
            }
        }
    } else if (group == "arithmetic-mean") {
        out.push_back(scenario_arithmetic_mean(cubic_g(), 2, 1.0, 0.0));
    } else if (group == "arithmetic-mean-mismatch") {
        out.push_back(with_distribution(scenario_arithmetic_mean(cubic_g(), 2, 1.0, 0.0),
                                        weibull(1.0, 1.0), "arithmetic-mean-mismatch"));
    } else if (group == "geometric-mean") {
        out.push_back(scenario_geometric_mean(inv_square_g(), 1, 1.0, 0.0));
    } else if (group == "geometric-mean-mismatch") {
        out.push_back(with_distribution(scenario_geometric_mean(inv_square_g(), 1, 1.0, 0.0),
                                        weibull(1.0, 2.0), "geometric-mean-mismatch"));
    } else if (group == "harmonic-mean") {
        out.push_back(scenario_harmonic_mean(reciprocal_g(), 1.0, 0.0));
    } else if (group == "harmonic-mean-mismatch") {
        out.push_back(with_distribution(scenario_harmonic_mean(reciprocal_g(), 1.0, 0.0),
                                        weibull(1.0, 1.0), "harmonic-mean-mismatch"));
    } else if (group == "weibull-example") {
        out.push_back(scenario_weibull_example(2.0, 1.0, 2));
    } else if (group == "weibull-example-mismatch") {
        out.push_back(with_distribution(scenario_weibull_example(2.0, 1.0, 2), pareto(1.0, 2.0),
                                        "weibull-example-mismatch"));
    } else if (group == "pareto-example") {
        for (double a : {1.0, 2.0, 5.0}) {
            out.push_back(scenario_pareto_example(a, 1.0, 1));
        }
    } else if (group == "pareto-example-mismatch") {
        out.push_back(with_distribution(scenario_pareto_example(1.0, 1.0, 1), uniform(1.0, 12.0),
                                        "pareto-example-mismatch"));
    } else if (group == "uniform-falsification") {
        DistributionModel d = uniform(0.0, 1.0);
        out.push_back(Scenario{"uniform-falsification", d, make_grid(d, default_kr_grid()),
                               identity_row_fn(), Verdict::fails});
    } else if (group == "pareto-falsification") {
        DistributionModel d = pareto(1.0, 2.0);
        out.push_back(Scenario{"pareto-falsification", d, make_grid(d, default_kr_grid()),
                               identity_row_fn(), Verdict::fails});
    } else if (group == "inverse-weibull-falsification") {
        DistributionModel d = inverse_weibull_corrected(1.0);
        out.push_back(Scenario{"inverse-weibull-falsification", d,
                               make_grid(d, default_kr_grid()), identity_row_fn(),
                               Verdict::fails});
    } else {
        throw ParamError("unknown scenario group '" + group + "'");
    }
    return out;
}

inline std::vector<Scenario> all_scenarios() {
    std::vector<Scenario> out;
    for (const auto& group : scenario_group_names()) {
        auto scns = make_scenario_group(group);
        for (auto& s : scns) out.push_back(std::move(s));
    }
    return out;
}

} // namespace recreg
