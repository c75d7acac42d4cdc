#include "sqdet/polyring.hpp"

#include "sqdet/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace sqdet {

IntPoly::IntPoly(const BigInt& c) {
    if (c != 0) coeffs_.push_back(c);
}

IntPoly::IntPoly(long c) : IntPoly(BigInt(c)) {}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

long IntPoly::low_degree() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<long>(k);
    return kZeroDegree;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::pow(unsigned long e) const {
    IntPoly result(1L), base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

IntPoly IntPoly::divexact(const IntPoly& a, const IntPoly& d) {
    if (d.is_zero()) throw InternalError("IntPoly::divexact: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < d.degree()) throw InternalError("IntPoly::divexact: divisor degree exceeds dividend degree");
    std::vector<BigInt> rem = a.coeffs_;
    const std::size_t dn = d.coeffs_.size();
    const BigInt& lead = d.coeffs_.back();
    std::vector<BigInt> quot(rem.size() - dn + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + dn - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw InternalError("IntPoly::divexact: inexact coefficient division (" + a.to_string() + ") / (" +
                                d.to_string() + ")");
        mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j < dn; ++j)
            mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), d.coeffs_[j].get_mpz_t());
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
        throw InternalError("IntPoly::divexact: nonzero remainder dividing (" + a.to_string() + ") by (" +
                            d.to_string() + ")");
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (k == 0 || mag != 1) out += mag.get_str();
        if (k >= 1) out += "q";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

IntPoly q_integer(unsigned long n) {
    if (n == 0) throw std::invalid_argument("q_integer: n must be positive");
    std::vector<BigInt> c(2 * n - 1);
    for (unsigned long k = 0; k < n; ++k) c[2 * k] = 1;
    return IntPoly(std::move(c));
}

BigInt poly_eval(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : row) data_.emplace_back(v);
    }
}

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
}

PolyMatrix::PolyMatrix(std::vector<std::string> labels)
    : n_(labels.size()), labels_(std::move(labels)), entries_(n_ * n_) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw std::invalid_argument("PolyMatrix: duplicate label");
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<IntPoly>> rows) : PolyMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw std::invalid_argument("PolyMatrix: not square");
        std::size_t j = 0;
        for (const auto& p : row) (*this)(i, j++) = p;
        ++i;
    }
}

PolyMatrix PolyMatrix::from_constants(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("PolyMatrix::from_constants: not square");
    PolyMatrix p(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = IntPoly(m(i, j));
    return p;
}

IntMatrix PolyMatrix::evaluate(const BigInt& x) const {
    IntMatrix out(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) = poly_eval((*this)(i, j), x);
    return out;
}

bool PolyMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
}

namespace {

// Shared Bareiss driver. Ops supplies zero test and the fused update
// (p*a - b*c) / prev for the element type.
template <class T, class Ops>
T bareiss(std::vector<T> a, std::size_t n, Ops ops) {
    if (n == 0) return ops.one();
    auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
    int sign = 1;
    T prev = ops.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && ops.is_zero(at(piv, k))) ++piv;
        if (piv == n) return T{};
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) = ops.update(at(k, k), at(i, j), at(i, k), at(k, j), prev);
            at(i, k) = T{};
        }
        prev = at(k, k);
    }
    T det = at(n - 1, n - 1);
    return sign < 0 ? ops.negate(det) : det;
}

struct IntOps {
    static BigInt one() { return 1; }
    static bool is_zero(const BigInt& x) { return x == 0; }
    static BigInt negate(const BigInt& x) { return -x; }
    static BigInt update(const BigInt& p, const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& prev) {
        BigInt t = p * a;
        mpz_submul(t.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
            throw InternalError("int_det: inexact Bareiss division");
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        return t;
    }
};

struct PolyOps {
    static IntPoly one() { return IntPoly(1L); }
    static bool is_zero(const IntPoly& x) { return x.is_zero(); }
    static IntPoly negate(const IntPoly& x) { return -x; }
    static IntPoly update(const IntPoly& p, const IntPoly& a, const IntPoly& b, const IntPoly& c,
                          const IntPoly& prev) {
        IntPoly t = p * a;
        if (!b.is_zero() && !c.is_zero()) t -= b * c;
        if (prev.degree() == 0 && prev.coeffs()[0] == 1) return t;
        return IntPoly::divexact(t, prev);
    }
};

} // namespace

BigInt int_det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("int_det: matrix is not square");
    std::vector<BigInt> a;
    a.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
    return bareiss(std::move(a), m.rows(), IntOps{});
}

IntPoly poly_det_unchecked(const PolyMatrix& m) {
    std::vector<IntPoly> a;
    a.reserve(m.size() * m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) a.push_back(m(i, j));
    return bareiss(std::move(a), m.size(), PolyOps{});
}

IntPoly poly_det(const PolyMatrix& m) {
    IntPoly det = poly_det_unchecked(m);
    for (long x : {1L, 2L, 3L}) {
        BigInt expected = int_det(m.evaluate(x));
        if (poly_eval(det, x) != expected)
            throw InternalError("poly_det: evaluation cross-check failed at q = " + std::to_string(x));
    }
    return det;
}

} // namespace sqdet
