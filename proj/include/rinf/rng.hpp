#pragma once

#include <cstdint>
#include <string_view>

namespace rinf {

/// Deterministic generator for the verification suites: xoshiro256**
/// seeded through SplitMix64. A trial stream for a named test case is
/// keyed by (seed, case name) via FNV-1a, so two runs with the same
/// config draw identical samples regardless of suite execution order.
/// The three primitives (SplitMix64, xoshiro256**, FNV-1a 64) are
/// documented in the README so other implementations can replay streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    Rng(std::uint64_t seed, std::string_view stream_name);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01();
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller (two fresh uniforms per call, the
    /// sine partner is discarded to keep the stream stateless).
    double gaussian();

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n);

private:
    void seed_state(std::uint64_t seed);
    std::uint64_t state_[4];
};

std::uint64_t fnv1a64(std::string_view text);
std::uint64_t splitmix64_next(std::uint64_t& state);

}  // namespace rinf
