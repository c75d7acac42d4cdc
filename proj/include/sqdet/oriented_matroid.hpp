#pragma once

#include "sqdet/bits.hpp"
#include "sqdet/matroid.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sqdet {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign sign_of(int v) { return v > 0 ? Sign::Plus : (v < 0 ? Sign::Minus : Sign::Zero); }
inline Sign operator*(Sign a, Sign b) { return sign_of(to_int(a) * to_int(b)); }
inline Sign operator-(Sign a) { return sign_of(-to_int(a)); }

/// A total map from an ordered ground set of at most 64 elements to
/// {+, -, 0}, stored as two disjoint bit masks.
class SignVector {
public:
    SignVector() = default;
    /// All-zero vector on `size` elements.
    explicit SignVector(int size) : size_(size) {}
    SignVector(int size, Mask plus, Mask minus);
    /// From integer signs in ground order (only the sign of each entry matters).
    static SignVector from_ints(const std::vector<int>& values);
    /// From a key such as "+-0+".
    static SignVector from_key(std::string_view key);

    int size() const { return size_; }
    Sign at(int i) const;
    void set(int i, Sign s);
    Mask plus() const { return plus_; }
    Mask minus() const { return minus_; }
    Mask support() const { return plus_ | minus_; }
    Mask zero_set() const { return low_mask(size_) & ~support(); }
    bool is_zero() const { return support() == 0; }
    bool has_full_support() const { return support() == low_mask(size_); }

    SignVector operator-() const { return {size_, minus_, plus_}; }

    /// '+', '-' or '0' per element in ground order. Lexicographic order on
    /// keys is the canonical order (+ before -).
    std::string key() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    int size_ = 0;
    Mask plus_ = 0;
    Mask minus_ = 0;
};

struct SignVectorHash {
    std::size_t operator()(const SignVector& v) const {
        return std::hash<Mask>{}(v.plus() * 0x9E3779B97F4A7C15ULL ^ v.minus());
    }
};

/// (x∘y)(e) = x(e) if x(e) ≠ 0 else y(e). Throws InputError on size mismatch.
SignVector compose(const SignVector& x, const SignVector& y);

/// x ⪯ t: every nonzero entry of x agrees with t.
bool conforms(const SignVector& x, const SignVector& t);

/// Number of elements on which a and b differ.
int separation(const SignVector& a, const SignVector& b);

/// All distinct compositions of nonempty sequences of `generators`.
/// Throws SizeError once more than `cap` covectors have been produced.
std::vector<SignVector> composition_closure(const std::vector<SignVector>& generators, std::size_t cap);

/// Text form used in fixtures: space separated labels, "-label" for a
/// negative entry, omitted labels are zero.
SignVector parse_sign_vector(std::string_view text, const std::vector<std::string>& ground);
std::string format_sign_vector(const SignVector& v, const std::vector<std::string>& ground);

/// A basis orientation: signs on the lexicographically ordered r-subsets of
/// the ground set, extended to ordered tuples by alternation.
class Chirotope {
public:
    /// Throws InputError if the sign count is wrong, the map is identically
    /// zero, or its support fails basis exchange.
    Chirotope(std::vector<std::string> ground, int rank, std::vector<Sign> lex_signs);
    /// `text` is a string over {+,-,0}, one character per lex r-subset.
    static Chirotope from_string(std::vector<std::string> ground, int rank, std::string_view text);

    int rank() const { return rank_; }
    const std::vector<std::string>& ground() const { return matroid_.ground(); }
    const Matroid& matroid() const { return matroid_; }
    Sign sign_of_sorted(Mask b) const;
    /// χ on an ordered tuple: stored sign times the parity of the sorting
    /// permutation; zero on repeated elements.
    Sign operator()(const std::vector<int>& ordered) const;
    std::string to_string() const;

private:
    int rank_;
    std::unordered_map<Mask, Sign> signs_;
    std::vector<Mask> lex_subsets_;
    Matroid matroid_;
};

inline Sign chirotope_sign(const Chirotope& c, const std::vector<int>& ordered) { return c(ordered); }

/// Cocircuits of the oriented matroid of `c`, both signs of each, in order of
/// first appearance over lex (r-1)-subsets.
std::vector<SignVector> cocircuits_from_chirotope(const Chirotope& c);

/// An affine oriented matroid (M̃, g) presented by the chirotope of M = M̃/g and
/// the feasible cocircuits (those with Y(g) = +), restricted to I.
class AffineOrientedMatroid {
public:
    /// Validates genericity (every feasible zero set is a basis of M), the
    /// basis ↔ feasible-cocircuit bijection, and the pivoting relation
    /// χ(J,i)χ(J,j) = -Y_{J+i}(j)·Y_{J+j}(i) between the chirotope and the
    /// cocircuits. Throws InvariantError on failure.
    AffineOrientedMatroid(Chirotope central, std::string lift, std::vector<SignVector> feasible);

    const std::vector<std::string>& ground() const { return central_.ground(); }
    int size() const { return central_.matroid().size(); }
    int rank() const { return central_.rank(); }
    const std::string& lift() const { return lift_; }
    const Chirotope& central() const { return central_; }
    const Matroid& matroid() const { return central_.matroid(); }
    const std::vector<SignVector>& feasible_cocircuits() const { return feasible_; }
    /// Cocircuits of M (Y(g) = 0), as ± pairs.
    const std::vector<SignVector>& infinite_cocircuits() const { return infinite_; }
    /// Index into feasible_cocircuits() of the cocircuit with zero set b.
    std::optional<std::size_t> feasible_index(Mask b) const;

private:
    Chirotope central_;
    std::string lift_;
    std::vector<SignVector> feasible_;
    std::vector<SignVector> infinite_;
    std::unordered_map<Mask, std::size_t> by_zero_set_;
};

struct Tope {
    SignVector sign;
    std::string key() const { return sign.key(); }
    friend bool operator==(const Tope&, const Tope&) = default;
};

struct FVector {
    int dim = 0;
    std::vector<long long> f;  // f[i] = number of i-dimensional faces
    long long euler_characteristic() const;
    friend bool operator==(const FVector&, const FVector&) = default;
};

inline constexpr std::size_t kDefaultCovectorCap = 1'000'000;

/// Bounded topes in canonical key order.
std::vector<Tope> bounded_topes(const AffineOrientedMatroid& om, std::size_t cap = kDefaultCovectorCap);

/// Cocircuits (feasible and infinite, both signs) conforming to t.
std::vector<SignVector> cocircuit_faces(const AffineOrientedMatroid& om, const Tope& t);

/// Indices of feasible cocircuits conforming to t.
std::vector<std::size_t> feasible_face_indices(const AffineOrientedMatroid& om, const SignVector& t);

/// r - rank_M(z(X) ∩ I).
int face_dimension(const AffineOrientedMatroid& om, const SignVector& x);

/// Face numbers of the common face A ∧ B; nullopt when A and B share no
/// cocircuit face.
std::optional<FVector> meet_faces(const AffineOrientedMatroid& om, const Tope& a, const Tope& b);

/// Same, given the common cocircuit faces directly.
std::optional<FVector> meet_faces_of(const AffineOrientedMatroid& om, const std::vector<SignVector>& common);

/// The feasible cocircuit Y_b. Throws InvariantError if b has none.
SignVector basis_to_cocircuit(const AffineOrientedMatroid& om, Mask b);

} // namespace sqdet
