#include "sqdet/random.hpp"

#include <limits>

namespace sqdet {

long Rng::uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

Rational random_offset(Rng& rng, const RandomArrangementOptions& opts) {
    Rational r(rng.uniform(-opts.offset_numerator, opts.offset_numerator), rng.uniform(1, opts.offset_denominator));
    r.canonicalize();
    return r;
}

bool is_uniform(const Arrangement& arr) {
    return central_chirotope(arr).matroid().bases().size() == k_subsets(arr.size(), arr.dim()).size();
}

std::optional<Arrangement> generic_offsets(const Arrangement& arr, Rng& rng, const RandomArrangementOptions& opts) {
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        std::vector<Rational> offsets;
        for (int i = 0; i < arr.size(); ++i) offsets.push_back(random_offset(rng, opts));
        Arrangement candidate = arr.with_offsets(offsets);
        if (validate_generic(candidate).ok) return candidate;
    }
    return std::nullopt;
}

} // namespace

std::optional<Arrangement> random_arrangement(int dim, int n, std::uint64_t seed, const RandomArrangementOptions& opts) {
    Rng rng(seed);
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        std::vector<Hyperplane> hs;
        for (int i = 0; i < n; ++i) {
            Hyperplane h{"H" + std::to_string(i + 1), RationalVector(static_cast<std::size_t>(dim)), 0};
            bool zero = true;
            do {
                zero = true;
                for (auto& c : h.normal) {
                    c = rng.uniform(-opts.normal_range, opts.normal_range);
                    zero = zero && c == 0;
                }
            } while (zero);
            hs.push_back(std::move(h));
        }
        RationalMatrix normals;
        for (const auto& h : hs) normals.push_back(h.normal);
        if (rational_rank(normals) != dim) continue;
        Arrangement arr(dim, std::move(hs));
        if (opts.uniform_matroid && !is_uniform(arr)) continue;
        if (auto out = generic_offsets(arr, rng, opts)) return out;
    }
    return std::nullopt;
}

std::optional<Arrangement> nudge_offsets(const Arrangement& arr, std::uint64_t seed, const RandomArrangementOptions& opts) {
    Rng rng(seed);
    return generic_offsets(arr, rng, opts);
}

} // namespace sqdet
