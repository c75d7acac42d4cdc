#include "sqdet/forms.hpp"

#include "sqdet/errors.hpp"
#include "sqdet/parallel.hpp"

namespace sqdet {

IntPoly h_poly(const FVector& f) {
    const IntPoly x_minus_1{-1, 0, 1};  // q^2 - 1
    IntPoly acc, power(1L);
    for (long long fi : f.f) {
        acc += IntPoly(BigInt(static_cast<long>(fi))) * power;
        power *= x_minus_1;
    }
    return acc;
}

MeetTable::MeetTable(const AffineOrientedMatroid& om, std::vector<Tope> topes, unsigned jobs)
    : topes_(std::move(topes)), meets_(topes_.size() * topes_.size()), dist_(topes_.size() * topes_.size()) {
    const std::size_t n = topes_.size();
    std::vector<std::vector<std::size_t>> faces(n);
    for (std::size_t i = 0; i < n; ++i) faces[i] = feasible_face_indices(om, topes_[i].sign);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) pairs.emplace_back(a, b);

    parallel_for(pairs.size(), jobs, [&](std::size_t k) {
        const auto [a, b] = pairs[k];
        std::vector<SignVector> common;
        for (std::size_t idx : faces[a])
            if (conforms(om.feasible_cocircuits()[idx], topes_[b].sign)) common.push_back(om.feasible_cocircuits()[idx]);
        auto meet = meet_faces_of(om, common);
        const int d = sqdet::separation(topes_[a].sign, topes_[b].sign);
        meets_[a * n + b] = meet;
        meets_[b * n + a] = std::move(meet);
        dist_[a * n + b] = dist_[b * n + a] = d;
    });
}

std::vector<std::string> MeetTable::labels() const {
    std::vector<std::string> out;
    for (const auto& t : topes_) out.push_back(t.key());
    return out;
}

IntersectionForm build_S(const MeetTable& meets) {
    PolyMatrix s(meets.labels());
    for (std::size_t a = 0; a < meets.size(); ++a)
        for (std::size_t b = 0; b < meets.size(); ++b) {
            const auto& m = meets.meet(a, b);
            if (!m) continue;
            const long f0 = static_cast<long>(m->f.front());
            s(a, b) = IntPoly(meets.separation(a, b) % 2 == 0 ? f0 : -f0);
        }
    return {meets.topes(), std::move(s)};
}

IntersectionForm build_Sq(const MeetTable& meets) {
    PolyMatrix s(meets.labels());
    for (std::size_t a = 0; a < meets.size(); ++a)
        for (std::size_t b = 0; b < meets.size(); ++b) {
            const auto& m = meets.meet(a, b);
            if (!m) continue;
            const int d = meets.separation(a, b);
            s(a, b) = IntPoly::monomial(d % 2 == 0 ? 1 : -1, static_cast<std::size_t>(d)) * h_poly(*m);
        }
    return {meets.topes(), std::move(s)};
}

IntersectionForm build_S(const AffineOrientedMatroid& om, unsigned jobs) {
    return build_S(MeetTable(om, bounded_topes(om), jobs));
}

IntersectionForm build_Sq(const AffineOrientedMatroid& om, unsigned jobs) {
    return build_Sq(MeetTable(om, bounded_topes(om), jobs));
}

std::vector<RhsFactor> rhs_factors(const Matroid& m) {
    std::vector<RhsFactor> out;
    for (const Flat& k : coloop_free_flats(m)) {
        if (k.elements == m.full()) continue;
        RhsFactor f;
        f.flat = k;
        f.labels = m.labels_of(k.elements);
        f.base = static_cast<unsigned long>(m.size() - popcount(k.elements));
        f.beta = beta(contraction(m, k.elements));
        f.mu_plus = k.elements == 0 ? BigInt(1) : mobius_plus(dual(restriction(m, k.elements)));
        f.exponent = f.beta * f.mu_plus;
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

unsigned long exponent_of(const RhsFactor& f) {
    if (f.exponent < 0 || !f.exponent.fits_ulong_p()) throw InternalError("rhs: exponent out of range");
    return f.exponent.get_ui();
}

} // namespace

ClassicalRhs rhs_classical(const Matroid& m) {
    ClassicalRhs out{1, rhs_factors(m)};
    for (const auto& f : out.factors) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), f.base, exponent_of(f));
        out.value *= p;
    }
    return out;
}

QRhs rhs_q(const Matroid& m) {
    QRhs out{IntPoly(1L), rhs_factors(m)};
    for (const auto& f : out.factors) {
        const unsigned long e = exponent_of(f);
        if (e == 0) continue;
        out.value *= q_integer(f.base).pow(e);
    }
    return out;
}

Verification verify(const AffineOrientedMatroid& om, unsigned jobs) {
    MeetTable meets(om, bounded_topes(om), jobs);
    Verification v{build_S(meets), build_Sq(meets), {}, {}};

    const ClassicalRhs classical = rhs_classical(om.matroid());
    v.theorem.lhs = poly_det(v.S.s);
    v.theorem.rhs = IntPoly(classical.value);
    v.theorem.rhs_factors = classical.factors;
    v.theorem.match = v.theorem.lhs == v.theorem.rhs;
    if (!v.theorem.match)
        throw InternalError("det S = " + v.theorem.lhs.to_string() + " disagrees with the product formula " +
                            v.theorem.rhs.to_string());

    QRhs q = rhs_q(om.matroid());
    v.conjecture.lhs = poly_det(v.Sq.s);
    v.conjecture.rhs = std::move(q.value);
    v.conjecture.rhs_factors = std::move(q.factors);
    v.conjecture.match = v.conjecture.lhs == v.conjecture.rhs;
    return v;
}

} // namespace sqdet
