#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "recreg/distribution.hpp"
#include "recreg/quadrature.hpp"

using namespace recreg;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<DistributionModel> all_families() {
    std::vector<DistributionModel> out;
    out.push_back(shifted_exponential(1.0, 0.0));
    out.push_back(shifted_exponential(2.0, 1.0));
    out.push_back(weibull(1.0, 2.0));
    out.push_back(weibull(2.0, 0.5));
    out.push_back(pareto(1.0, 2.0));
    out.push_back(pareto(3.0, 1.0));
    out.push_back(uniform(0.0, 1.0));
    out.push_back(inverse_weibull_corrected(1.0));
    return out;
}

} // namespace

TEST_CASE("shifted exponential") {
    const auto d = shifted_exponential(1.0, 0.0);
    REQUIRE_THAT(d.hazard_R(2.0), WithinAbs(2.0, 1e-15));
    REQUIRE(d.cdf(0.0) == 0.0);
    REQUIRE(d.cdf(-5.0) == 0.0);
    const auto d2 = shifted_exponential(2.0, 1.0);
    REQUIRE_THAT(d2.quantile(1.0 - std::exp(-2.0)), WithinRel(2.0, 1e-12));
    REQUIRE_THROWS_AS(shifted_exponential(0.0, 0.0), ParamError);
    REQUIRE_THROWS_AS(shifted_exponential(-1.0, 0.0), ParamError);
}

TEST_CASE("weibull") {
    const auto w1 = weibull(1.0, 1.0);
    const auto e1 = shifted_exponential(1.0, 0.0);
    for (double y : {0.5, 1.0, 2.0}) {
        REQUIRE_THAT(w1.cdf(y), WithinAbs(e1.cdf(y), 1e-14));
    }
    REQUIRE_THAT(weibull(1.0, 2.0).hazard_R(3.0), WithinRel(9.0, 1e-14));
    REQUIRE_THAT(weibull(2.0, 0.5).cdf(1.0), WithinRel(1.0 - std::exp(-2.0), 1e-14));
    REQUIRE_THROWS_AS(weibull(1.0, 0.0), ParamError);
}

TEST_CASE("pareto") {
    const auto p = pareto(1.0, 2.0);
    REQUIRE_THAT(p.cdf(2.0), WithinAbs(0.75, 1e-14));
    REQUIRE(p.cdf(1.0) == 0.0);
    REQUIRE_THAT(pareto(3.0, 1.0).hazard_R(3.0 * M_E), WithinRel(1.0, 1e-13));
    REQUIRE_THROWS_AS(pareto(0.0, 1.0), ParamError);
}

TEST_CASE("uniform") {
    const auto u = uniform(0.0, 1.0);
    REQUIRE_THAT(u.cdf(0.5), WithinAbs(0.5, 1e-15));
    REQUIRE_THAT(u.hazard_R(0.5), WithinRel(std::log(2.0), 1e-14));
    REQUIRE_THAT(u.quantile(0.25), WithinAbs(0.25, 1e-15));
    REQUIRE(u.cdf(2.0) == 1.0);
    REQUIRE_THROWS_AS(uniform(1.0, 1.0), ParamError);
}

TEST_CASE("corrected inverse Weibull is a valid model") {
    // exp(-c sqrt(y)) decreases in y, so it cannot be a CDF; the corrected
    // form exp(-c / sqrt(y)) rises from 0 to 1.
    const auto d = inverse_weibull_corrected(1.0);
    double prev = 0.0;
    for (double y : {0.1, 0.5, 1.0, 4.0, 25.0, 1e4}) {
        const double f = d.cdf(y);
        REQUIRE(f > prev);
        REQUIRE(f < 1.0);
        prev = f;
    }
    REQUIRE_THAT(d.cdf(d.quantile(0.3)), WithinAbs(0.3, 1e-12));
}

TEST_CASE("hazard transform identity R = -ln(1 - F)") {
    for (const auto& d : all_families()) {
        for (double p : {0.05, 0.2, 0.5, 0.8, 0.95}) {
            const double x = d.quantile(p);
            const double want = -std::log1p(-d.cdf(x));
            INFO(d.label() << " p=" << p);
            REQUIRE_THAT(d.hazard_R(x), WithinRel(want, 1e-12));
        }
    }
}

TEST_CASE("hazard is nondecreasing and vanishes at the left endpoint") {
    for (const auto& d : all_families()) {
        INFO(d.label());
        double prev = -1.0;
        for (double p : {0.001, 0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
            const double r = d.hazard_R(d.quantile(p));
            REQUIRE(r >= prev);
            prev = r;
        }
        REQUIRE(d.hazard_R(d.quantile(1e-12)) < 1e-10);
        REQUIRE(d.hazard_R(d.support_lo()) == 0.0);
    }
}

TEST_CASE("quantile round trips") {
    for (const auto& d : all_families()) {
        for (double p : {0.001, 0.1, 0.5, 0.9, 0.999}) {
            const double x = d.quantile(p);
            INFO(d.label() << " p=" << p);
            REQUIRE_THAT(d.cdf(x), WithinAbs(p, 1e-10));
            REQUIRE_THAT(d.quantile(d.cdf(x)), WithinRel(x, 1e-8));
            // survival_quantile is the stable complement route
            REQUIRE_THAT(d.survival_quantile(1.0 - p), WithinRel(x, 1e-8));
        }
    }
}

TEST_CASE("hazard derivative consistency") {
    for (const auto& d : all_families()) {
        for (double p : {0.2, 0.5, 0.8}) {
            const double x = d.quantile(p);
            const double h = std::cbrt(std::numeric_limits<double>::epsilon()) *
                             std::max(1.0, std::abs(x));
            const double fd = (d.hazard_R(x + h) - d.hazard_R(x - h)) / (2.0 * h);
            INFO(d.label() << " x=" << x);
            REQUIRE_THAT(d.hazard_R_prime(x), WithinRel(fd, 1e-6));
        }
    }
}

TEST_CASE("pdf equals R' e^{-R}") {
    for (const auto& d : all_families()) {
        for (double p : {0.1, 0.4, 0.7, 0.95}) {
            const double x = d.quantile(p);
            const double want = d.hazard_R_prime(x) * std::exp(-d.hazard_R(x));
            INFO(d.label() << " x=" << x);
            REQUIRE_THAT(d.pdf(x), WithinRel(want, 1e-10));
        }
    }
}

TEST_CASE("pdf mass matches cdf mass over the support") {
    // integrate the density over probability-uniform windows so singular
    // left tails (weibull alpha < 1) stay resolvable, then add the exact
    // tail masses back
    const std::vector<double> ps = {1e-6, 1e-4, 0.01, 0.1, 0.3, 0.5,
                                    0.7,  0.9,  0.99, 1.0 - 1e-6, 1.0 - 1e-9};
    for (const auto& d : all_families()) {
        double total = ps.front(); // exact mass left of the first window edge
        for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
            const double a = d.quantile(ps[i]);
            const double b = d.quantile(ps[i + 1]);
            total += integrate_adaptive([&](double x) { return d.pdf(x); }, a, b);
        }
        total += 1.0 - ps.back();
        INFO(d.label());
        REQUIRE_THAT(total, WithinAbs(1.0, 1e-8));
    }
}

TEST_CASE("transform composition reproduces the closed-form families") {
    SECTION("identity transform is the exponential") {
        TransformFamily tf;
        tf.T = [](double y) { return y; };
        tf.T_prime = [](double) { return 1.0; };
        tf.tau = 0.0;
        tf.c = 1.0;
        tf.label = "identity";
        const auto d = from_transform(tf);
        const auto e = shifted_exponential(1.0, 0.0);
        for (double y : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            REQUIRE_THAT(d.cdf(y), WithinAbs(e.cdf(y), 1e-14));
        }
    }
    SECTION("T = y^2 is weibull(1, 2)") {
        TransformFamily tf;
        tf.T = [](double y) { return y * y; };
        tf.T_prime = [](double y) { return 2.0 * y; };
        tf.tau = 0.0;
        tf.c = 1.0;
        tf.label = "square";
        const auto d = from_transform(tf);
        const auto w = weibull(1.0, 2.0);
        for (double y : {0.3, 0.9, 1.7, 3.0}) {
            REQUIRE_THAT(d.cdf(y), WithinAbs(w.cdf(y), 1e-12));
            REQUIRE_THAT(d.quantile(w.cdf(y)), WithinRel(y, 1e-9));
        }
    }
    SECTION("T = ln y with tau = ln a is pareto(a, 2)") {
        const double a = 1.5;
        TransformFamily tf;
        tf.T = [](double y) { return std::log(y); };
        tf.T_prime = [](double y) { return 1.0 / y; };
        tf.tau = std::log(a);
        tf.c = 2.0;
        tf.lo = a;
        tf.label = "log";
        const auto d = from_transform(tf);
        const auto p = pareto(a, 2.0);
        for (double y : {1.7, 2.5, 4.0, 9.0}) {
            REQUIRE_THAT(d.cdf(y), WithinAbs(p.cdf(y), 1e-12));
        }
    }
    SECTION("decreasing T is rejected") {
        TransformFamily tf;
        tf.T = [](double y) { return -y; };
        tf.tau = 0.0;
        tf.label = "decreasing";
        REQUIRE_THROWS_AS(from_transform(tf), NonMonotoneTransform);
    }
    SECTION("quantile falls back to bisection without T_inverse") {
        TransformFamily tf;
        tf.T = [](double y) { return y + 0.1 * std::sin(y); }; // monotone, no closed inverse
        tf.tau = 0.0;
        tf.c = 1.0;
        tf.label = "wobble";
        const auto d = from_transform(tf);
        for (double p : {0.1, 0.5, 0.9}) {
            REQUIRE_THAT(d.cdf(d.quantile(p)), WithinAbs(p, 1e-10));
        }
    }
}

TEST_CASE("sampling") {
    SECTION("count zero gives an empty sequence") {
        RandomStream rng(42, "empty");
        REQUIRE(sample(shifted_exponential(1.0, 0.0), rng, 0).empty());
    }
    SECTION("law of large numbers for the exponential") {
        RandomStream rng(42, "lln");
        const auto d = shifted_exponential(1.0, 0.0);
        const int n = 1000000;
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += d.quantile(rng.uniform01());
        REQUIRE_THAT(s / n, WithinAbs(1.0, 4.0 / std::sqrt(static_cast<double>(n))));
    }
    SECTION("uniform draws pass a KS bound") {
        RandomStream rng(42, "ks");
        const auto d = uniform(0.0, 1.0);
        const int n = 100000;
        auto xs = sample(d, rng, n);
        std::sort(xs.begin(), xs.end());
        double ks = 0.0;
        for (int i = 0; i < n; ++i) {
            const double f = d.cdf(xs[i]);
            ks = std::max(ks, std::abs(f - (i + 1.0) / n));
            ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
        }
        REQUIRE(ks <= 1.95 / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("family spec strings") {
    REQUIRE(parse_dist_spec("exp:c=1,l0=0").label() == shifted_exponential(1, 0).label());
    REQUIRE(parse_dist_spec("weibull:c=1,alpha=2").label() == weibull(1, 2).label());
    REQUIRE(parse_dist_spec("pareto:a=1,c=2").label() == pareto(1, 2).label());
    REQUIRE(parse_dist_spec("uniform:a=0,b=1").label() == uniform(0, 1).label());
    REQUIRE(parse_dist_spec("invweibull:c=1").label() == inverse_weibull_corrected(1).label());
    REQUIRE_THROWS_AS(parse_dist_spec("cauchy:c=1"), ParamError);
    REQUIRE_THROWS_AS(parse_dist_spec("exp:c"), ParamError);
    REQUIRE_THROWS_AS(parse_dist_spec("exp:c=abc"), ParamError);
}
