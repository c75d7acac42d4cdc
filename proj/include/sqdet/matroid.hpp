#pragma once

#include "sqdet/bits.hpp"
#include "sqdet/polyring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sqdet {

/// A matroid given by an explicit list of bases over an ordered ground set.
///
/// Elements are addressed by their position in the ground list; labels are
/// only used for I/O. The ground list order is also the linear order used for
/// broken circuits.
class Matroid {
public:
    /// Validates that all bases have the same cardinality, that the list is
    /// nonempty and duplicate-free, and (for at most 12 elements) the basis
    /// exchange axiom. Throws InputError otherwise.
    Matroid(std::vector<std::string> ground, std::vector<Mask> bases);

    /// U_{r,n} on labels "1".."n".
    static Matroid uniform(int r, int n);

    const std::vector<std::string>& ground() const { return ground_; }
    int size() const { return static_cast<int>(ground_.size()); }
    int rank() const { return rank_; }
    Mask full() const { return low_mask(size()); }
    /// Bases sorted by lexicographic order of their element lists.
    const std::vector<Mask>& bases() const { return bases_; }

    bool is_basis(Mask b) const;
    bool is_independent(Mask s) const;
    int index_of(std::string_view label) const;
    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask s) const;

    friend bool operator==(const Matroid&, const Matroid&) = default;

private:
    std::vector<std::string> ground_;
    std::vector<Mask> bases_;
    int rank_ = 0;
};

struct Flat {
    Mask elements = 0;
    int rank = 0;
    friend bool operator==(const Flat&, const Flat&) = default;
};

/// Canonical flat order: by rank, then lexicographically by elements.
bool flat_less(const Flat& a, const Flat& b);

int rank(const Matroid& m, Mask s);
Flat closure(const Matroid& m, Mask s);
bool is_flat(const Matroid& m, Mask s);

/// All flats in canonical order, generated by closing up covers from
/// closure(∅). Throws SizeError beyond `max_flats`.
std::vector<Flat> flats(const Matroid& m, std::size_t max_flats = 200000);

/// The lattice of flats with μ(cl ∅, K) for every flat, computed once.
class FlatLattice {
public:
    explicit FlatLattice(const Matroid& m);

    const std::vector<Flat>& flats() const { return flats_; }
    /// Position of a flat in flats(); throws InputError for non-flats.
    std::size_t index_of(Mask k) const;
    /// μ(∅, K), taken to be 0 when the matroid has loops (∅ is then not a flat).
    const BigInt& mobius(std::size_t idx) const { return mobius_[idx]; }
    BigInt mobius_plus(std::size_t idx) const;
    bool has_loops() const { return has_loops_; }

private:
    std::vector<Flat> flats_;
    std::vector<BigInt> mobius_;
    bool has_loops_ = false;
};

/// μ⁺(K) = (-1)^{r(K)} μ(∅, K). Throws InputError if `k` is not a flat.
BigInt mobius_plus(const Matroid& m, Mask k);

/// μ⁺ of the whole matroid, i.e. of its top flat.
BigInt mobius_plus(const Matroid& m);

/// Number of bases of m|K without a broken circuit (ground-list order).
BigInt nbc_basis_count(const Matroid& m, Mask k);

/// Fundamental circuit of e ∉ b with respect to the basis b of m|span.
Mask fundamental_circuit(const Matroid& m, Mask b, int e);

/// All circuits (minimal dependent sets), sorted canonically. Circuits have
/// at most r+1 elements, so only subsets up to that size are examined.
std::vector<Mask> circuits(const Matroid& m);

Matroid deletion(const Matroid& m, int e);
Matroid contraction(const Matroid& m, int e);
/// m/K for an arbitrary subset K (bases of m/K are B∖K for B meeting K maximally).
Matroid contraction(const Matroid& m, Mask k);
Matroid restriction(const Matroid& m, Mask s);
Matroid dual(const Matroid& m);

bool is_loop(const Matroid& m, int e);
bool is_coloop(const Matroid& m, int e);
/// Connectivity through fundamental circuits of one basis; the empty
/// matroid and single elements count as connected.
bool is_connected(const Matroid& m);

/// Crapo's beta invariant by deletion/contraction on the least element that
/// is neither a loop nor a coloop.
BigInt beta(const Matroid& m);

/// (-1)^{r(K)} Σ_{flats K' ≤ K} μ(∅,K') r(K').
BigInt beta_sum(const Matroid& m, Mask k);

/// Flats K with m|K coloop-free, in canonical order.
std::vector<Flat> coloop_free_flats(const Matroid& m);

} // namespace sqdet
