#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "recreg/scenario.hpp"

using namespace recreg;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("arithmetic-mean scenario") {
    SECTION("identity g reduces to the adjacent-record midpoint form") {
        MonotoneFunction ident{[](double y) { return y; },
                               positive_halfline(),
                               [](double) { return 1.0; },
                               [](double x) { return x; },
                               "y"};
        Scenario scn = scenario_arithmetic_mean(ident, 1, 1.0, 0.0);
        const ConditioningContext ctx{2, 1, 1, 1.0, 3.0};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinAbs(2.0, 1e-15));
        const auto row = scn.row_fn(scn.dist, ctx);
        REQUIRE(std::abs(row.residual) <= 1e-8);
    }
    SECTION("g = y^3, k = 2: right side (2 g(t) + g(s))/3") {
        Scenario scn = scenario_arithmetic_mean(cubic_g(), 2, 1.0, 0.0);
        const ConditioningContext ctx{3, 2, 1, 1.0, 2.0};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(17.0 / 3.0, 1e-14));
        const auto row = scn.row_fn(scn.dist, ctx);
        REQUIRE(std::abs(row.residual) <= 1e-8);
        REQUIRE(run_scenario(scn).verdict == Verdict::holds);
    }
    SECTION("k = 1 right side is the exact arithmetic mean") {
        Scenario scn = scenario_arithmetic_mean(cubic_g(), 1, 1.0, 0.0);
        const ConditioningContext ctx{2, 1, 1, 1.0, 2.0};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(0.5 * (1.0 + 8.0), 1e-12));
    }
    SECTION("mismatched law fails") {
        Scenario scn = with_distribution(scenario_arithmetic_mean(cubic_g(), 2, 1.0, 0.0),
                                         weibull(1.0, 1.0), "mismatch");
        const auto report = run_scenario(scn);
        REQUIRE(report.verdict == Verdict::fails);
        REQUIRE(report.max_abs_residual > 1e-3);
    }
}

TEST_CASE("geometric-mean scenario") {
    SECTION("k = 1, g = 1/y^2 on (1, 2): right side is sqrt(g(s) g(t)) = 0.5") {
        Scenario scn = scenario_geometric_mean(inv_square_g(), 1, 1.0, 0.0);
        const ConditioningContext ctx{2, 1, 1, 1.0, 2.0};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(0.5, 1e-12));
        const auto row = scn.row_fn(scn.dist, ctx);
        REQUIRE(std::abs(row.residual) <= 1e-8);
    }
    SECTION("right side equals the exact geometric mean at k = 1") {
        Scenario scn = scenario_geometric_mean(inv_square_g(), 1, 1.0, 0.0);
        for (auto [s, t] : {std::pair{0.7, 1.9}, std::pair{1.1, 4.2}}) {
            const ConditioningContext ctx{2, 1, 1, s, t};
            const double gs = 1.0 / (s * s), gt = 1.0 / (t * t);
            REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(std::sqrt(gs * gt), 1e-12));
        }
    }
    SECTION("equal endpoints give back the common value") {
        Scenario scn = scenario_geometric_mean(inv_square_g(), 1, 1.0, 0.0);
        const double gamma = 1.0 / (1.3 * 1.3);
        const ConditioningContext ctx{2, 1, 1, 1.3, 1.3};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(gamma, 1e-12));
    }
    SECTION("the Weibull instance: g = y^{-alpha(k+1)} induces G = 1 - e^{-c y^alpha}") {
        const double alpha = 2.0;
        const int k = 2;
        MonotoneFunction g{[alpha, k](double y) { return std::pow(y, -alpha * (k + 1)); },
                           positive_halfline(),
                           [alpha, k](double y) {
                               return -alpha * (k + 1) * std::pow(y, -alpha * (k + 1) - 1.0);
                           },
                           [alpha, k](double x) { return std::pow(x, -1.0 / (alpha * (k + 1))); },
                           "y^-a(k+1)"};
        Scenario scn = scenario_geometric_mean(g, k, 1.0, 0.0);
        const auto w = weibull(1.0, alpha);
        for (double y : {0.5, 1.0, 1.8}) {
            REQUIRE_THAT(scn.dist.cdf(y), WithinRel(w.cdf(y), 1e-10));
        }
        const ConditioningContext ctx{3, 2, 1, 1.0, 2.0};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(std::pow(2.0, -alpha * k) * 1.0, 1e-12));
    }
    SECTION("nonpositive g is rejected") {
        MonotoneFunction bad{[](double y) { return 1.0 - y; }, positive_halfline()};
        REQUIRE_THROWS_AS(scenario_geometric_mean(bad, 1, 1.0, 0.0), DomainError);
    }
    SECTION("mismatched law fails") {
        Scenario scn = with_distribution(scenario_geometric_mean(inv_square_g(), 1, 1.0, 0.0),
                                         weibull(1.0, 2.0), "mismatch");
        REQUIRE(run_scenario(scn).verdict == Verdict::fails);
    }
}

TEST_CASE("harmonic-mean scenario") {
    SECTION("g = 1/y on (1, 3): right side 0.5, identity holds") {
        Scenario scn = scenario_harmonic_mean(reciprocal_g(), 1.0, 0.0);
        const ConditioningContext ctx{2, 1, 1, 1.0, 3.0};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(0.5, 1e-12));
        const auto row = scn.row_fn(scn.dist, ctx);
        REQUIRE(std::abs(row.residual) <= 1e-8);
        REQUIRE(run_scenario(scn).verdict == Verdict::holds);
    }
    SECTION("right side equals the exact harmonic mean") {
        Scenario scn = scenario_harmonic_mean(reciprocal_g(), 1.0, 0.0);
        for (auto [s, t] : {std::pair{0.4, 1.1}, std::pair{2.0, 7.0}}) {
            const ConditioningContext ctx{2, 1, 1, s, t};
            const double gs = 1.0 / s, gt = 1.0 / t;
            REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(2.0 * gs * gt / (gs + gt), 1e-12));
        }
        const ConditioningContext eq{2, 1, 1, 1.7, 1.7};
        REQUIRE_THAT(scn.rhs_fn(eq), WithinRel(1.0 / 1.7, 1e-12));
    }
    SECTION("mismatched law fails") {
        Scenario scn = with_distribution(scenario_harmonic_mean(reciprocal_g(), 1.0, 0.0),
                                         weibull(1.0, 1.0), "mismatch");
        REQUIRE(run_scenario(scn).verdict == Verdict::fails);
    }
    SECTION("the left limit of the transform can be probed instead of given") {
        Scenario scn = scenario_harmonic_mean(reciprocal_g(), 1.0);
        REQUIRE(run_scenario(scn).verdict == Verdict::holds);
    }
}

TEST_CASE("Weibull example scenario") {
    SECTION("alpha=1, c=1, k=1 at (1,2): right side 0.5") {
        Scenario scn = scenario_weibull_example(1.0, 1.0, 1);
        const ConditioningContext ctx{2, 1, 1, 1.0, 2.0};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(0.5, 1e-14));
        const auto row = scn.row_fn(scn.dist, ctx);
        REQUIRE(std::abs(row.residual) <= 1e-8);
    }
    SECTION("alpha=2, c=1, k=2 at (1,2): right side 1/16") {
        Scenario scn = scenario_weibull_example(2.0, 1.0, 2);
        const ConditioningContext ctx{3, 2, 1, 1.0, 2.0};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(0.0625, 1e-14));
        const auto row = scn.row_fn(scn.dist, ctx);
        REQUIRE(std::abs(row.residual) <= 1e-8);
        REQUIRE(run_scenario(scn).verdict == Verdict::holds);
    }
    SECTION("under a Pareto law the identity fails") {
        Scenario scn = with_distribution(scenario_weibull_example(2.0, 1.0, 2), pareto(1.0, 2.0),
                                         "mismatch");
        REQUIRE(run_scenario(scn).verdict == Verdict::fails);
    }
}

TEST_CASE("Pareto example scenario") {
    SECTION("a=1, c=1, k=1 at (e, e^2): right side 0.5") {
        Scenario scn = scenario_pareto_example(1.0, 1.0, 1);
        const ConditioningContext ctx{2, 1, 1, M_E, M_E * M_E};
        REQUIRE_THAT(scn.rhs_fn(ctx), WithinRel(0.5, 1e-14));
        const auto row = scn.row_fn(scn.dist, ctx);
        REQUIRE(std::abs(row.residual) <= 1e-8);
        REQUIRE(run_scenario(scn).verdict == Verdict::holds);
    }
    SECTION("the regression relation does not involve a") {
        REQUIRE(pareto_a_invariance({1.0, 2.0, 5.0}, 6.0, 10.0) <= 1e-10);
    }
    SECTION("s <= 1 is rejected: the logarithm must stay positive") {
        REQUIRE_THROWS_AS(scenario_pareto_example(0.2, 1.0, 1), DomainError);
    }
    SECTION("under a uniform law on (1, 12) the identity fails") {
        Scenario scn = with_distribution(scenario_pareto_example(1.0, 1.0, 1), uniform(1.0, 12.0),
                                         "mismatch");
        REQUIRE(run_scenario(scn).verdict == Verdict::fails);
    }
}

TEST_CASE("transform scenarios agree with the exponential route") {
    // the left side computed under G directly and through the shifted
    // exponential in transform space must coincide
    std::vector<Scenario> scns;
    scns.push_back(scenario_arithmetic_mean(cubic_g(), 2, 1.0, 0.0));
    scns.push_back(scenario_geometric_mean(inv_square_g(), 1, 1.0, 0.0));
    scns.push_back(scenario_harmonic_mean(reciprocal_g(), 1.0, 0.0));
    for (const auto& scn : scns) {
        for (const auto& ctx : scn.grid) {
            const double direct = scn.row_fn(scn.dist, ctx).lhs;
            const double via_exp = mean_lhs_via_exponential(scn, ctx);
            INFO(scn.name);
            REQUIRE_THAT(direct, WithinAbs(via_exp, 1e-8));
        }
    }
}

TEST_CASE("exponentiality diagnosis") {
    SECTION("shifted exponential holds") {
        const auto rep = diagnose_exponentiality(shifted_exponential(2.0, 1.0));
        REQUIRE(rep.verdict == Verdict::holds);
        REQUIRE(rep.rows.size() >= 9);
    }
    SECTION("uniform fails") {
        REQUIRE(diagnose_exponentiality(uniform(0.0, 1.0)).verdict == Verdict::fails);
    }
    SECTION("weibull(1,2) fails") {
        REQUIRE(diagnose_exponentiality(weibull(1.0, 2.0)).verdict == Verdict::fails);
    }
    SECTION("corrected inverse Weibull fails") {
        REQUIRE(diagnose_exponentiality(inverse_weibull_corrected(1.0)).verdict ==
                Verdict::fails);
    }
    SECTION("grids below 9 contexts are rejected") {
        GridSpec spec;
        spec.kr = {{1, 1}};
        spec.quantile_pairs = {{0.2, 0.5}, {0.3, 0.8}};
        REQUIRE_THROWS_AS(diagnose_exponentiality(uniform(0.0, 1.0), spec), ContextError);
    }
}

TEST_CASE("verdict thresholds leave an inconclusive band") {
    auto make_row = [](double res) {
        ResidualRow row;
        row.ctx = {2, 1, 1, 0.0, 1.0};
        row.residual = res;
        return row;
    };
    const VerdictThresholds thr{1e-6, 1e-3};
    REQUIRE(compute_verdict({make_row(5e-7)}, thr) == Verdict::holds);
    REQUIRE(compute_verdict({make_row(5e-5)}, thr) == Verdict::inconclusive);
    REQUIRE(compute_verdict({make_row(5e-3)}, thr) == Verdict::fails);
    REQUIRE(compute_verdict({}, thr) == Verdict::inconclusive);

    ResidualRow err = make_row(0.0);
    err.error = "boom";
    REQUIRE(compute_verdict({err}, thr) == Verdict::inconclusive);
    REQUIRE(compute_verdict({make_row(5e-3), err}, thr) == Verdict::fails);
}

TEST_CASE("the scenario registry") {
    SECTION("every group builds and carries a nonempty grid") {
        for (const auto& name : scenario_group_names()) {
            const auto scns = make_scenario_group(name);
            REQUIRE_FALSE(scns.empty());
            for (const auto& scn : scns) {
                INFO(scn.name);
                REQUIRE_FALSE(scn.grid.empty());
                for (const auto& ctx : scn.grid) validate_context(scn.dist, ctx);
            }
        }
        REQUIRE_THROWS_AS(make_scenario_group("no-such-group"), ParamError);
    }
    SECTION("exponential-core spans 288 grid points") {
        std::size_t rows = 0;
        for (const auto& scn : make_scenario_group("exponential-core")) {
            rows += scn.grid.size();
        }
        REQUIRE(rows == 288);
    }
    SECTION("the exponential pair runs both identity forms and holds") {
        const auto scns = make_scenario_group("exponential-pair");
        REQUIRE(scns.size() % 2 == 0);
        // spot-check one a/b pair
        const auto rep_a = run_scenario(scns[0]);
        const auto rep_b = run_scenario(scns[1]);
        REQUIRE(rep_a.verdict == Verdict::holds);
        REQUIRE(rep_b.verdict == Verdict::holds);
    }
    SECTION("n-independence of the reported rows") {
        // same (k, r, u, v) under different n give identical residuals
        const auto d = shifted_exponential(1.0, 0.0);
        auto fn = identity_row_fn();
        const auto row5 = fn(d, {5, 2, 2, 1.0, 3.0});
        const auto row9 = fn(d, {9, 2, 2, 1.0, 3.0});
        REQUIRE(row5.lhs == row9.lhs);
        REQUIRE(row5.rhs == row9.rhs);
    }
}
