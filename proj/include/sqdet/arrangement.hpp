#pragma once

#include "sqdet/errors.hpp"
#include "sqdet/oriented_matroid.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace sqdet {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Rank over Q by Gaussian elimination.
int rational_rank(RationalMatrix rows);
/// Determinant of a square rational matrix.
Rational rational_det(RationalMatrix rows);
/// Unique solution of the square system a·x = b (a invertible).
RationalVector rational_solve(RationalMatrix a, RationalVector b);
Rational dot(const RationalVector& a, const RationalVector& b);

/// The hyperplane {x : <normal, x> = offset}; its positive side is
/// <normal, x> > offset.
struct Hyperplane {
    std::string label;
    RationalVector normal;
    Rational offset;
};

/// An essential affine arrangement in Q^dim.
class Arrangement {
public:
    /// Throws InputError for zero or wrong-length normals, duplicate labels,
    /// or a non-essential central arrangement.
    Arrangement(int dim, std::vector<Hyperplane> hyperplanes);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(hyperplanes_.size()); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& operator[](int i) const { return hyperplanes_[static_cast<std::size_t>(i)]; }
    std::vector<std::string> labels() const;

    /// Side of each hyperplane at `point`.
    SignVector sign_vector_at(const RationalVector& point) const;

    Arrangement with_offsets(const std::vector<Rational>& offsets) const;
    /// Hyperplanes reordered so that entry k of the result is hyperplanes()[order[k]].
    Arrangement reordered(const std::vector<int>& order) const;

private:
    int dim_;
    std::vector<Hyperplane> hyperplanes_;
};

/// χ(i_1..i_r) = sign det(normals in that order).
Chirotope central_chirotope(const Arrangement& arr);

/// Intersection point of the hyperplanes of each basis, in lex basis order.
std::vector<std::pair<Mask, RationalVector>> vertices(const Arrangement& arr);

struct GenericityReport {
    bool ok = true;
    Mask circuit = 0;  // first violating circuit when !ok
    int coefficient_rank = 0;
    int augmented_rank = 0;
    std::string describe(const std::vector<std::string>& labels) const;
};

/// Every circuit of the normal matroid must have an infeasible affine system.
GenericityReport validate_generic(const Arrangement& arr);

class GenericityError : public InvariantError {
public:
    GenericityError(GenericityReport report, const std::string& what) : InvariantError(what), report_(report) {}
    const GenericityReport& report() const { return report_; }

private:
    GenericityReport report_;
};

/// The affine oriented matroid of a generic arrangement: one feasible
/// cocircuit per vertex, infinite cocircuits from the central chirotope.
/// Throws GenericityError when validate_generic fails.
AffineOrientedMatroid compile(const Arrangement& arr);

} // namespace sqdet
