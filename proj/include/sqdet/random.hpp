#pragma once

#include "sqdet/arrangement.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace sqdet {

/// Seeded generator with a platform-independent integer draw
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 step, used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct RandomArrangementOptions {
    long normal_range = 3;        // normal coordinates drawn from [-range, range]
    long offset_numerator = 20;   // offsets p/q with |p| ≤ this ...
    long offset_denominator = 4;  // ... and 1 ≤ q ≤ this
    bool uniform_matroid = false; // insist on normals in general position
    int max_attempts = 1000;
};

/// Random essential arrangement with integer normals and small-denominator
/// rational offsets, re-drawn until generic. nullopt when the attempts run out.
std::optional<Arrangement> random_arrangement(int dim, int n, std::uint64_t seed,
                                              const RandomArrangementOptions& opts = {});

/// Same normals, fresh random offsets, re-validated for genericity.
std::optional<Arrangement> nudge_offsets(const Arrangement& arr, std::uint64_t seed,
                                         const RandomArrangementOptions& opts = {});

} // namespace sqdet
