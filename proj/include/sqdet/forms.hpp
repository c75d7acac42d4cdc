#pragma once

#include "sqdet/matroid.hpp"
#include "sqdet/oriented_matroid.hpp"
#include "sqdet/polyring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqdet {

/// h(x) = f(x - 1) evaluated at x = q^2, expanded in q.
IntPoly h_poly(const FVector& f);

/// Meets and separations of every pair of bounded topes; symmetric.
class MeetTable {
public:
    MeetTable(const AffineOrientedMatroid& om, std::vector<Tope> topes, unsigned jobs = 1);

    const std::vector<Tope>& topes() const { return topes_; }
    std::size_t size() const { return topes_.size(); }
    const std::optional<FVector>& meet(std::size_t a, std::size_t b) const { return meets_[a * size() + b]; }
    int separation(std::size_t a, std::size_t b) const { return dist_[a * size() + b]; }
    std::vector<std::string> labels() const;

private:
    std::vector<Tope> topes_;
    std::vector<std::optional<FVector>> meets_;
    std::vector<int> dist_;
};

/// A labelled intersection matrix: constant entries for S, polynomial for S_q.
struct IntersectionForm {
    std::vector<Tope> topes;
    PolyMatrix s;
};

/// S(A,B) = (-1)^{d(A,B)} f_0(A ∧ B), 0 on empty meets.
IntersectionForm build_S(const MeetTable& meets);
/// S_q(A,B) = (-q)^{d(A,B)} h(A ∧ B, q^2), 0 on empty meets.
IntersectionForm build_Sq(const MeetTable& meets);

IntersectionForm build_S(const AffineOrientedMatroid& om, unsigned jobs = 1);
IntersectionForm build_Sq(const AffineOrientedMatroid& om, unsigned jobs = 1);

/// One factor |I∖K|^{β(M/K)·μ⁺((M|K)*)} of the determinant formula. The
/// Möbius factor is taken on the dual of the restriction to K; it agrees
/// with μ⁺(K) when M|K has rank at most 1 and gives the exponents of the
/// Vámos example (μ⁺(U_{1,4}) = 1 rather than μ⁺(U_{3,4}) = 3).
struct RhsFactor {
    Flat flat;
    std::vector<std::string> labels;
    unsigned long base = 0;
    BigInt beta;      // β(M/K)
    BigInt mu_plus;   // μ⁺((M|K)*)
    BigInt exponent;  // beta · mu_plus
};

/// Factors over the coloop-free flats K ≠ I, canonical flat order. Factors
/// with exponent 0 are kept.
std::vector<RhsFactor> rhs_factors(const Matroid& m);

struct ClassicalRhs {
    BigInt value;
    std::vector<RhsFactor> factors;
};

struct QRhs {
    IntPoly value;
    std::vector<RhsFactor> factors;
};

ClassicalRhs rhs_classical(const Matroid& m);
QRhs rhs_q(const Matroid& m);

struct DeterminantVerdict {
    IntPoly lhs;
    IntPoly rhs;
    std::vector<RhsFactor> rhs_factors;
    bool match = false;
};

struct Verification {
    IntersectionForm S;
    IntersectionForm Sq;
    DeterminantVerdict theorem;     // det S against the integer formula
    DeterminantVerdict conjecture;  // det S_q against the q-formula
};

/// Builds both matrices, takes determinants, and compares them with the
/// product formulas over the central matroid. A disagreement for S throws
/// InternalError (that identity is a theorem); a disagreement for S_q is
/// reported through conjecture.match.
Verification verify(const AffineOrientedMatroid& om, unsigned jobs = 1);

} // namespace sqdet
