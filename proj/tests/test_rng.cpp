#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "recreg/rng.hpp"

using namespace recreg;
using Catch::Matchers::WithinAbs;

TEST_CASE("streams are a pure function of (seed, label, replicate)") {
    RandomStream a(42, "grid", 3);
    RandomStream b(42, "grid", 3);
    for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());

    RandomStream c(42, "grid", 4);
    RandomStream d(42, "other", 3);
    RandomStream e(43, "grid", 3);
    RandomStream base(42, "grid", 3);
    const std::uint64_t first = base.next_u64();
    REQUIRE(c.next_u64() != first);
    REQUIRE(d.next_u64() != first);
    REQUIRE(e.next_u64() != first);
}

TEST_CASE("uniform01 stays strictly inside (0, 1)") {
    RandomStream rng(7, "unit");
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("moment sanity") {
    RandomStream rng(11, "moments");
    const int n = 200000;
    double su = 0.0, se = 0.0;
    for (int i = 0; i < n; ++i) {
        su += rng.uniform01();
        se += rng.exponential();
    }
    // 4 standard errors: uniform sd = sqrt(1/12), exponential sd = 1
    REQUIRE_THAT(su / n, WithinAbs(0.5, 4.0 * std::sqrt(1.0 / 12.0) / std::sqrt(n)));
    REQUIRE_THAT(se / n, WithinAbs(1.0, 4.0 / std::sqrt(n)));
}

TEST_CASE("integer-shape gamma and beta draws") {
    RandomStream rng(13, "beta");
    const int n = 200000;
    double sb = 0.0;
    for (int i = 0; i < n; ++i) {
        const double b = rng.beta_integer(2, 3);
        REQUIRE(b > 0.0);
        REQUIRE(b < 1.0);
        sb += b;
    }
    // Beta(2,3): mean 0.4, sd = sqrt(6/150)
    REQUIRE_THAT(sb / n, WithinAbs(0.4, 4.0 * std::sqrt(6.0 / 150.0) / std::sqrt(n)));
}
