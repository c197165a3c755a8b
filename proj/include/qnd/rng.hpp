#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qnd {

/// splitmix64 finalizer; good avalanche for seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// Pure function of (master seed, stream coordinates). Trajectories, repeats
/// and grid points each get an independent stream so results do not depend
/// on scheduling.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0, std::uint64_t d = 0);

/// mt19937_64 wrapped with fixed-algorithm uniform/gaussian draws so streams
/// are reproducible independent of the standard library's distribution
/// implementations.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log argument.
    double uniform_open() { return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; second value of each pair is cached.
    double gaussian();

    /// Index into an unnormalized weight vector (linear inverse CDF).
    std::size_t categorical(const std::vector<double>& weights, double total_weight);

private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace qnd
