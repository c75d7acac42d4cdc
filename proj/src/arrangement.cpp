#include "sqdet/arrangement.hpp"

#include <set>

namespace sqdet {

namespace {

// Row echelon form in place; returns the rank and the sign of the row swaps.
int eliminate(RationalMatrix& a, int* swap_sign = nullptr) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    std::size_t r = 0;
    int sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    if (swap_sign) *swap_sign = sign;
    return static_cast<int>(r);
}

} // namespace

int rational_rank(RationalMatrix rows) { return eliminate(rows); }

Rational rational_det(RationalMatrix rows) {
    const std::size_t n = rows.size();
    int sign = 1;
    if (eliminate(rows, &sign) < static_cast<int>(n)) return 0;
    Rational d = sign;
    for (std::size_t i = 0; i < n; ++i) d *= rows[i][i];
    return d;
}

RationalVector rational_solve(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw InternalError("rational_solve: singular system");
        std::swap(a[piv], a[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Arrangement::Arrangement(int dim, std::vector<Hyperplane> hyperplanes) : dim_(dim), hyperplanes_(std::move(hyperplanes)) {
    if (dim < 1) throw InputError("arrangement: dimension must be positive");
    if (hyperplanes_.size() > static_cast<std::size_t>(kMaxGround))
        throw InputError("arrangement: at most 64 hyperplanes are supported");
    std::set<std::string> seen;
    RationalMatrix normals;
    for (auto& h : hyperplanes_) {
        if (!seen.insert(h.label).second) throw InputError("arrangement: duplicate label '" + h.label + "'");
        if (h.normal.size() != static_cast<std::size_t>(dim))
            throw InputError("arrangement: hyperplane '" + h.label + "' has a normal of length " +
                             std::to_string(h.normal.size()) + ", expected " + std::to_string(dim));
        for (auto& c : h.normal) c.canonicalize();
        h.offset.canonicalize();
        bool zero = true;
        for (const auto& c : h.normal) zero = zero && c == 0;
        if (zero) throw InputError("arrangement: hyperplane '" + h.label + "' has a zero normal");
        normals.push_back(h.normal);
    }
    if (rational_rank(normals) != dim) throw InputError("arrangement: central arrangement is not essential");
}

std::vector<std::string> Arrangement::labels() const {
    std::vector<std::string> out;
    for (const auto& h : hyperplanes_) out.push_back(h.label);
    return out;
}

SignVector Arrangement::sign_vector_at(const RationalVector& point) const {
    SignVector v(size());
    for (int i = 0; i < size(); ++i) {
        const Rational s = dot((*this)[i].normal, point) - (*this)[i].offset;
        v.set(i, sign_of(sgn(s)));
    }
    return v;
}

Arrangement Arrangement::with_offsets(const std::vector<Rational>& offsets) const {
    if (offsets.size() != hyperplanes_.size()) throw InputError("with_offsets: wrong number of offsets");
    auto hs = hyperplanes_;
    for (std::size_t i = 0; i < hs.size(); ++i) hs[i].offset = offsets[i];
    return Arrangement(dim_, std::move(hs));
}

Arrangement Arrangement::reordered(const std::vector<int>& order) const {
    if (order.size() != hyperplanes_.size()) throw InputError("reordered: wrong permutation length");
    std::vector<Hyperplane> hs;
    for (int k : order) hs.push_back((*this)[k]);
    return Arrangement(dim_, std::move(hs));
}

Chirotope central_chirotope(const Arrangement& arr) {
    std::vector<Sign> signs;
    for (Mask s : k_subsets(arr.size(), arr.dim())) {
        RationalMatrix rows;
        for (int i : elements(s)) rows.push_back(arr[i].normal);
        signs.push_back(sign_of(sgn(rational_det(rows))));
    }
    return Chirotope(arr.labels(), arr.dim(), std::move(signs));
}

std::vector<std::pair<Mask, RationalVector>> vertices(const Arrangement& arr) {
    std::vector<std::pair<Mask, RationalVector>> out;
    for (Mask s : k_subsets(arr.size(), arr.dim())) {
        RationalMatrix a;
        RationalVector b;
        for (int i : elements(s)) {
            a.push_back(arr[i].normal);
            b.push_back(arr[i].offset);
        }
        if (rational_det(a) == 0) continue;
        out.emplace_back(s, rational_solve(a, b));
    }
    return out;
}

std::string GenericityReport::describe(const std::vector<std::string>& labels) const {
    if (ok) return "generic";
    std::string names;
    for (int i : elements(circuit)) names += (names.empty() ? "" : ",") + labels[static_cast<std::size_t>(i)];
    return "circuit {" + names + "} has a common point (coefficient rank " + std::to_string(coefficient_rank) +
           ", augmented rank " + std::to_string(augmented_rank) + ")";
}

GenericityReport validate_generic(const Arrangement& arr) {
    const Matroid m = central_chirotope(arr).matroid();
    for (Mask c : circuits(m)) {
        RationalMatrix coeff, aug;
        for (int i : elements(c)) {
            coeff.push_back(arr[i].normal);
            aug.push_back(arr[i].normal);
            aug.back().push_back(arr[i].offset);
        }
        const int rc = rational_rank(coeff), ra = rational_rank(aug);
        if (ra == rc) return {false, c, rc, ra};
    }
    return {};
}

AffineOrientedMatroid compile(const Arrangement& arr) {
    const GenericityReport rep = validate_generic(arr);
    if (!rep.ok) throw GenericityError(rep, "arrangement is not generic: " + rep.describe(arr.labels()));
    std::vector<SignVector> feasible;
    for (const auto& [basis, point] : vertices(arr)) feasible.push_back(arr.sign_vector_at(point));
    return AffineOrientedMatroid(central_chirotope(arr), "g", std::move(feasible));
}

} // namespace sqdet
