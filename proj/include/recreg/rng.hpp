#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace recreg {

/**
 * Counter-based random stream.
 *
 * The i-th output is a pure function of (key, i): the splitmix64 finalizer
 * applied to key + i * golden-ratio increment. Streams are keyed by
 * (seed, label, replicate), so grids and replicated simulations can be
 * evaluated in any order, or in parallel, without changing a single draw.
 */
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::string_view label = {},
                          std::uint64_t replicate = 0) {
        std::uint64_t k = mix(seed);
        for (const char c : label) {
            k = mix(k ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
        }
        key_ = mix(k ^ replicate);
    }

    std::uint64_t next_u64() {
        ++counter_;
        return mix(key_ + counter_ * kGolden);
    }

    /// Uniform draw on the open interval (0, 1).
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard exponential draw.
    double exponential() { return -std::log(uniform01()); }

    /// Sum of k independent standard exponentials (Gamma(k, 1), integer k).
    double gamma_integer(int k) {
        double s = 0.0;
        for (int i = 0; i < k; ++i) s += exponential();
        return s;
    }

    /// Beta(k, r) for integer shapes, as G1 / (G1 + G2).
    double beta_integer(int k, int r) {
        const double g1 = gamma_integer(k);
        const double g2 = gamma_integer(r);
        return g1 / (g1 + g2);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z += kGolden;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace recreg
