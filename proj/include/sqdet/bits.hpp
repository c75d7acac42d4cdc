#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sqdet {

/// Subsets of an ordered ground set of at most 64 elements; bit i is the
/// i-th element in ground order.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

inline bool contains(Mask m, int i) { return (m >> i) & 1U; }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Element indices of `m` in increasing order.
inline std::vector<int> elements(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= bit(i);
    return m;
}

/// Lexicographic comparison of the sorted element lists of two subsets.
inline bool lex_less(Mask a, Mask b) {
    while (a && b) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

/// All k-subsets of {0..n-1}, in lexicographic order of their sorted lists.
inline std::vector<Mask> k_subsets(int n, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) idx.push_back(i);
    for (;;) {
        out.push_back(mask_of(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// Sign of the permutation sorting `seq` (entries distinct); 0 on repeats.
inline int permutation_parity(const std::vector<int>& seq) {
    int s = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return 0;
            if (seq[i] > seq[j]) s = -s;
        }
    return s;
}

} // namespace sqdet
