#include "sqdet/oriented_matroid.hpp"

#include "sqdet/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace sqdet {

SignVector::SignVector(int size, Mask plus, Mask minus) : size_(size), plus_(plus), minus_(minus) {
    if (size < 0 || size > kMaxGround) throw InputError("sign vector: size out of range");
    if (plus & minus) throw InputError("sign vector: element both positive and negative");
    if (!is_subset(plus | minus, low_mask(size))) throw InputError("sign vector: entry outside the ground set");
}

SignVector SignVector::from_ints(const std::vector<int>& values) {
    SignVector v(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v.set(static_cast<int>(i), sign_of(values[i]));
    return v;
}

SignVector SignVector::from_key(std::string_view key) {
    SignVector v(static_cast<int>(key.size()));
    for (std::size_t i = 0; i < key.size(); ++i) {
        switch (key[i]) {
        case '+': v.set(static_cast<int>(i), Sign::Plus); break;
        case '-': v.set(static_cast<int>(i), Sign::Minus); break;
        case '0': break;
        default: throw InputError("sign vector key: unexpected character '" + std::string(1, key[i]) + "'");
        }
    }
    return v;
}

Sign SignVector::at(int i) const {
    if (contains(plus_, i)) return Sign::Plus;
    if (contains(minus_, i)) return Sign::Minus;
    return Sign::Zero;
}

void SignVector::set(int i, Sign s) {
    plus_ &= ~bit(i);
    minus_ &= ~bit(i);
    if (s == Sign::Plus) plus_ |= bit(i);
    if (s == Sign::Minus) minus_ |= bit(i);
}

std::string SignVector::key() const {
    std::string k(static_cast<std::size_t>(size_), '0');
    for (int i = 0; i < size_; ++i) {
        if (contains(plus_, i)) k[static_cast<std::size_t>(i)] = '+';
        if (contains(minus_, i)) k[static_cast<std::size_t>(i)] = '-';
    }
    return k;
}

SignVector compose(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size()) throw InputError("compose: sign vectors on different ground sets");
    const Mask free = ~x.support();
    return {x.size(), x.plus() | (y.plus() & free), x.minus() | (y.minus() & free)};
}

bool conforms(const SignVector& x, const SignVector& t) {
    if (x.size() != t.size()) throw InputError("conforms: sign vectors on different ground sets");
    return is_subset(x.plus(), t.plus()) && is_subset(x.minus(), t.minus());
}

int separation(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) throw InputError("separation: sign vectors on different ground sets");
    return popcount((a.plus() & ~b.plus()) | (a.minus() & ~b.minus()) | (b.plus() & ~a.plus()) |
                    (b.minus() & ~a.minus()));
}

std::vector<SignVector> composition_closure(const std::vector<SignVector>& generators, std::size_t cap) {
    std::unordered_set<SignVector, SignVectorHash> seen;
    std::vector<SignVector> out;
    for (const auto& g : generators)
        if (seen.insert(g).second) out.push_back(g);
    const std::vector<SignVector> gens = out;
    for (std::size_t head = 0; head < out.size(); ++head) {
        const SignVector x = out[head];
        for (const auto& y : gens) {
            SignVector z = compose(x, y);
            if (z == x) continue;
            if (seen.insert(z).second) {
                out.push_back(z);
                if (out.size() > cap)
                    throw SizeError("composition closure exceeded the cap of " + std::to_string(cap) + " covectors");
            }
        }
    }
    return out;
}

SignVector parse_sign_vector(std::string_view text, const std::vector<std::string>& ground) {
    SignVector v(static_cast<int>(ground.size()));
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        Sign s = Sign::Plus;
        if (tok.front() == '-') {
            s = Sign::Minus;
            tok.erase(0, 1);
        }
        auto it = std::find(ground.begin(), ground.end(), tok);
        if (it == ground.end()) throw InputError("sign vector '" + std::string(text) + "': unknown element '" + tok + "'");
        const int i = static_cast<int>(it - ground.begin());
        if (v.at(i) != Sign::Zero) throw InputError("sign vector '" + std::string(text) + "': element repeated");
        v.set(i, s);
    }
    return v;
}

std::string format_sign_vector(const SignVector& v, const std::vector<std::string>& ground) {
    std::string out;
    for (int i = 0; i < v.size(); ++i) {
        Sign s = v.at(i);
        if (s == Sign::Zero) continue;
        if (!out.empty()) out += ' ';
        if (s == Sign::Minus) out += '-';
        out += ground[static_cast<std::size_t>(i)];
    }
    return out;
}

namespace {

Matroid support_matroid(const std::vector<std::string>& ground, int rank, const std::vector<Sign>& lex_signs) {
    const auto subsets = k_subsets(static_cast<int>(ground.size()), rank);
    if (subsets.size() != lex_signs.size())
        throw InputError("chirotope: expected " + std::to_string(subsets.size()) + " signs, got " +
                         std::to_string(lex_signs.size()));
    std::vector<Mask> bases;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (lex_signs[i] != Sign::Zero) bases.push_back(subsets[i]);
    if (bases.empty()) throw InputError("chirotope: identically zero");
    return Matroid(ground, bases);
}

} // namespace

Chirotope::Chirotope(std::vector<std::string> ground, int rank, std::vector<Sign> lex_signs)
    : rank_(rank), lex_subsets_(k_subsets(static_cast<int>(ground.size()), rank)),
      matroid_(support_matroid(ground, rank, lex_signs)) {
    for (std::size_t i = 0; i < lex_subsets_.size(); ++i)
        if (lex_signs[i] != Sign::Zero) signs_.emplace(lex_subsets_[i], lex_signs[i]);
}

Chirotope Chirotope::from_string(std::vector<std::string> ground, int rank, std::string_view text) {
    std::vector<Sign> signs;
    for (char ch : text) {
        switch (ch) {
        case '+': signs.push_back(Sign::Plus); break;
        case '-': signs.push_back(Sign::Minus); break;
        case '0': signs.push_back(Sign::Zero); break;
        default: throw InputError("chirotope string: unexpected character '" + std::string(1, ch) + "'");
        }
    }
    return Chirotope(std::move(ground), rank, std::move(signs));
}

Sign Chirotope::sign_of_sorted(Mask b) const {
    auto it = signs_.find(b);
    return it == signs_.end() ? Sign::Zero : it->second;
}

Sign Chirotope::operator()(const std::vector<int>& ordered) const {
    if (static_cast<int>(ordered.size()) != rank_) throw InputError("chirotope: tuple length differs from the rank");
    const int parity = permutation_parity(ordered);
    if (parity == 0) return Sign::Zero;
    return sign_of_sorted(mask_of(ordered)) * sign_of(parity);
}

std::string Chirotope::to_string() const {
    std::string out;
    for (Mask s : lex_subsets_) {
        Sign v = sign_of_sorted(s);
        out += v == Sign::Plus ? '+' : (v == Sign::Minus ? '-' : '0');
    }
    return out;
}

std::vector<SignVector> cocircuits_from_chirotope(const Chirotope& c) {
    const Matroid& m = c.matroid();
    const int n = m.size();
    std::vector<SignVector> out;
    std::unordered_set<SignVector, SignVectorHash> seen;
    for (Mask s : k_subsets(n, c.rank() - 1)) {
        if (rank(m, s) != c.rank() - 1) continue;
        std::vector<int> tuple = elements(s);
        tuple.push_back(0);
        SignVector y(n);
        for (int j = 0; j < n; ++j) {
            if (contains(s, j)) continue;
            tuple.back() = j;
            y.set(j, c(tuple));
        }
        if (y.is_zero() || seen.count(y)) continue;
        seen.insert(y);
        seen.insert(-y);
        out.push_back(y);
        out.push_back(-y);
    }
    return out;
}

AffineOrientedMatroid::AffineOrientedMatroid(Chirotope central, std::string lift, std::vector<SignVector> feasible)
    : central_(std::move(central)), lift_(std::move(lift)), feasible_(std::move(feasible)) {
    const Matroid& m = central_.matroid();
    if (std::find(m.ground().begin(), m.ground().end(), lift_) != m.ground().end())
        throw InputError("affine oriented matroid: lift element '" + lift_ + "' collides with a ground element");
    for (std::size_t i = 0; i < feasible_.size(); ++i) {
        const SignVector& y = feasible_[i];
        if (y.size() != m.size()) throw InputError("affine oriented matroid: cocircuit of the wrong length");
        const Mask z = y.zero_set();
        if (!m.is_basis(z))
            throw InvariantError("genericity: feasible cocircuit " + format_sign_vector(y, m.ground()) +
                                 " has a zero set that is not a basis of the central matroid");
        if (!by_zero_set_.emplace(z, i).second)
            throw InvariantError("bijectivity: two feasible cocircuits share the zero set " +
                                 format_sign_vector(SignVector(m.size(), z, 0), m.ground()));
    }
    if (feasible_.size() != m.bases().size())
        throw InvariantError("bijectivity: " + std::to_string(feasible_.size()) + " feasible cocircuits but " +
                             std::to_string(m.bases().size()) + " bases");

    // Pivoting: for adjacent bases J+i, J+j the chirotope and the two
    // cocircuits must satisfy χ(J,i)χ(J,j) = -Y_{J+i}(j)·Y_{J+j}(i).
    for (Mask b1 : m.bases())
        for (int i : elements(b1)) {
            const Mask jset = b1 & ~bit(i);
            std::vector<int> tuple = elements(jset);
            tuple.push_back(i);
            const Sign chi_i = central_(tuple);
            for (int j = 0; j < m.size(); ++j) {
                const Mask b2 = jset | bit(j);
                if (contains(b1, j) || !m.is_basis(b2)) continue;
                tuple.back() = j;
                const Sign chi_j = central_(tuple);
                const Sign lhs = chi_i * chi_j;
                const Sign rhs = -(feasible_[by_zero_set_.at(b1)].at(j) * feasible_[by_zero_set_.at(b2)].at(i));
                if (lhs != rhs)
                    throw InvariantError("pivoting: chirotope inconsistent with feasible cocircuits at bases " +
                                         format_sign_vector(SignVector(m.size(), b1, 0), m.ground()) + " / " +
                                         format_sign_vector(SignVector(m.size(), b2, 0), m.ground()));
            }
        }
    infinite_ = cocircuits_from_chirotope(central_);
}

std::optional<std::size_t> AffineOrientedMatroid::feasible_index(Mask b) const {
    auto it = by_zero_set_.find(b);
    if (it == by_zero_set_.end()) return std::nullopt;
    return it->second;
}

long long FVector::euler_characteristic() const {
    long long acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += (i % 2 == 0 ? 1 : -1) * f[i];
    return acc;
}

std::vector<Tope> bounded_topes(const AffineOrientedMatroid& om, std::size_t cap) {
    std::vector<Tope> out;
    for (const auto& x : composition_closure(om.feasible_cocircuits(), cap)) {
        if (!x.has_full_support()) continue;
        const bool bounded = std::none_of(om.infinite_cocircuits().begin(), om.infinite_cocircuits().end(),
                                          [&](const SignVector& y) { return conforms(y, x); });
        if (bounded) out.push_back({x});
    }
    std::sort(out.begin(), out.end(), [](const Tope& a, const Tope& b) { return a.key() < b.key(); });
    return out;
}

std::vector<SignVector> cocircuit_faces(const AffineOrientedMatroid& om, const Tope& t) {
    std::vector<SignVector> out;
    for (const auto& y : om.feasible_cocircuits())
        if (conforms(y, t.sign)) out.push_back(y);
    for (const auto& y : om.infinite_cocircuits())
        if (conforms(y, t.sign)) out.push_back(y);
    return out;
}

std::vector<std::size_t> feasible_face_indices(const AffineOrientedMatroid& om, const SignVector& t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < om.feasible_cocircuits().size(); ++i)
        if (conforms(om.feasible_cocircuits()[i], t)) out.push_back(i);
    return out;
}

int face_dimension(const AffineOrientedMatroid& om, const SignVector& x) {
    return om.rank() - rank(om.matroid(), x.zero_set());
}

std::optional<FVector> meet_faces_of(const AffineOrientedMatroid& om, const std::vector<SignVector>& common) {
    if (common.empty()) return std::nullopt;
    FVector fv;
    for (const auto& x : composition_closure(common, kDefaultCovectorCap)) {
        const int d = face_dimension(om, x);
        if (static_cast<int>(fv.f.size()) <= d) fv.f.resize(static_cast<std::size_t>(d) + 1);
        ++fv.f[static_cast<std::size_t>(d)];
        fv.dim = std::max(fv.dim, d);
    }
    return fv;
}

std::optional<FVector> meet_faces(const AffineOrientedMatroid& om, const Tope& a, const Tope& b) {
    std::vector<SignVector> common;
    for (const auto& y : cocircuit_faces(om, a))
        if (conforms(y, b.sign)) common.push_back(y);
    return meet_faces_of(om, common);
}

SignVector basis_to_cocircuit(const AffineOrientedMatroid& om, Mask b) {
    auto idx = om.feasible_index(b);
    if (!idx)
        throw InvariantError("no feasible cocircuit with zero set " +
                             format_sign_vector(SignVector(om.size(), b, 0), om.ground()));
    return om.feasible_cocircuits()[*idx];
}

} // namespace sqdet
