#pragma once

#include "sqdet/arrangement.hpp"
#include "sqdet/oriented_matroid.hpp"
#include "sqdet/polyring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sqdet {

struct LexMaskLess {
    bool operator()(Mask a, Mask b) const { return lex_less(a, b); }
};

/// e_b = orientation · (i_1 ∧ ... ∧ i_r) with i_1 < ... < i_r.
struct BasisMonomial {
    Mask basis = 0;
    Sign orientation = Sign::Zero;
};

std::vector<BasisMonomial> basis_monomials(const Chirotope& chi);

/// An element of the top-degree part of the exterior algebra, in
/// sorted-monomial coordinates. Zero coefficients are not stored.
using FlagVector = std::map<Mask, BigInt, LexMaskLess>;
/// Degree r-1 chains, same convention.
using Chain = std::map<Mask, BigInt, LexMaskLess>;

/// φ(A) = Σ_b (Π_{i∈b} A(i)) e_b over bases b whose feasible cocircuit is a
/// face of A.
FlagVector phi(const AffineOrientedMatroid& om, const SignVector& region);

/// ⟨u, v⟩ with the e_b orthonormal.
BigInt pairing(const FlagVector& u, const FlagVector& v);

/// ∂(i_1 ∧ ... ∧ i_r) = Σ_k (-1)^{k-1} (i_1 ∧ ..î_k.. ∧ i_r), extended linearly.
Chain boundary(const FlagVector& v);

/// Nonzero elementary divisors of an integer matrix (Smith normal form).
std::vector<BigInt> smith_divisors(IntMatrix m);

struct KernelReport {
    std::size_t n_topes = 0;
    std::size_t n_bases = 0;
    bool all_in_kernel = true;
    std::optional<std::size_t> kernel_witness;  // index of a tope with ∂φ ≠ 0
    std::size_t rank = 0;                      // rank over Q of {φ(A)}
    BigInt mu_plus_dual;                       // μ⁺(M*)
    std::vector<BigInt> divisors;
    bool unit_divisors = true;
    bool gram_identity = true;                 // ⟨φ(A),φ(B)⟩ = S(A,B)
    std::optional<std::pair<std::size_t, std::size_t>> gram_witness;

    bool ok() const {
        return all_in_kernel && gram_identity && unit_divisors && rank == n_topes && mu_plus_dual == n_topes;
    }
};

/// Checks that {φ(A)} lies in ker ∂, has the expected rank μ⁺(M*), extends to
/// a Z-basis, and has Gram matrix `s` (the integer intersection matrix over
/// the same tope order). Throws SizeError above `max_bases` bases.
KernelReport check_basis_of_kernel(const AffineOrientedMatroid& om, const std::vector<Tope>& topes,
                                   const PolyMatrix& s, std::size_t max_bases = 500);

/// Realizable-case change of basis between {φ(A) : A ξ-bounded} and the
/// rescaled monomials 𝐞_b.
struct YMatrix {
    RationalVector xi;
    unsigned draws = 0;
    std::vector<Mask> bases;            // column order, lex
    std::vector<SignVector> regions;    // regions[k] = μ(bases[k]); row order
    IntMatrix y;
    PolyMatrix yq;
    BigInt det_y;
    BigInt det_yq_at_one;
    std::optional<IntPoly> det_yq;      // only computed up to full_det_limit bases
    bool expansion_identity = true;     // rows of y equal φ(A) in 𝐞_b coordinates
    bool extended_gram = true;          // ⟨φ(A),φ(B)⟩ = (-1)^d · #common vertices on 𝒫
};

/// Draws ξ from `seed` (integer coordinates in [-10^4, 10^4], up to 64
/// draws until ξ is nonconstant on every edge direction) and builds y and
/// its q-analogue. Throws InvariantError when no generic ξ is found.
YMatrix build_y_matrix(const Arrangement& arr, std::uint64_t seed, std::size_t full_det_limit = 12);

} // namespace sqdet
