#include "oracles.hpp"

#include "sqdet/errors.hpp"
#include "sqdet/forms.hpp"
#include "sqdet/io.hpp"
#include "sqdet/random.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace sqdet;

namespace {

IntersectionForm s_of(const std::string& name) { return build_S(*load_instance_file(oracle::fixture(name)).om); }

// Product formula with the Möbius factor taken on M|K itself.
BigInt literal_rhs(const Matroid& m) {
    BigInt acc = 1;
    for (const Flat& k : coloop_free_flats(m)) {
        if (k.elements == m.full()) continue;
        const BigInt e = beta(contraction(m, k.elements)) * mobius_plus(m, k.elements);
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m.size() - popcount(k.elements)), e.get_ui());
        acc *= p;
    }
    return acc;
}

// In the plane, a meet with k common vertices is a point (k=1), a segment
// (k=2) or a k-gon, so both matrices follow from vertex incidences alone.
void planar_oracle(const Arrangement& arr, const std::vector<Tope>& topes, PolyMatrix& s, PolyMatrix& sq) {
    const auto verts = vertices(arr);
    const std::size_t n = topes.size();
    s = PolyMatrix(n);
    sq = PolyMatrix(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            long k = 0;
            for (const auto& [basis, p] : verts) {
                const SignVector at = arr.sign_vector_at(p);
                if (conforms(at, topes[a].sign) && conforms(at, topes[b].sign)) ++k;
            }
            if (k == 0) continue;
            int d = 0;
            for (int i = 0; i < arr.size(); ++i) d += topes[a].sign.at(i) != topes[b].sign.at(i);
            const long sign = d % 2 == 0 ? 1 : -1;
            s(a, b) = IntPoly(sign * k);
            IntPoly h = k == 1 ? IntPoly(1L) : k == 2 ? IntPoly{1, 0, 1} : IntPoly{1, 0, k - 2, 0, 1};
            sq(a, b) = IntPoly::monomial(sign, static_cast<std::size_t>(d)) * h;
        }
}

} // namespace

TEST(HPoly, SmallPolytopes) {
    EXPECT_EQ(h_poly({0, {1}}), IntPoly(1L));
    EXPECT_EQ(h_poly({1, {2, 1}}), (IntPoly{1, 0, 1}));
    EXPECT_EQ(h_poly({2, {3, 3, 1}}), (IntPoly{1, 0, 1, 0, 1}));
    EXPECT_EQ(h_poly({2, {4, 4, 1}}), (IntPoly{1, 0, 2, 0, 1}));
    EXPECT_EQ(h_poly({3, {8, 12, 6, 1}}), (IntPoly{1, 0, 3, 0, 3, 0, 1}));  // cube
}

TEST(Forms, TwoLinePairFixtures) {
    const IntersectionForm c = s_of("two-lines-C.json");
    EXPECT_EQ(c.s.evaluate(0), (IntMatrix{{3, 1}, {1, 3}}));
    const IntersectionForm cp = s_of("two-lines-Cprime.json");
    EXPECT_EQ(cp.s.evaluate(0), (IntMatrix{{3, -2}, {-2, 4}}));
    for (const char* name : {"two-lines-C.json", "two-lines-Cprime.json"}) {
        const Verification v = verify(*load_instance_file(oracle::fixture(name)).om);
        EXPECT_EQ(v.theorem.lhs, IntPoly(8L));
        EXPECT_EQ(v.conjecture.lhs, oracle::q_int(4) * oracle::q_int(2));
        EXPECT_TRUE(v.conjecture.match);
        ASSERT_EQ(v.theorem.rhs_factors.size(), 2u);
        EXPECT_EQ(v.theorem.rhs_factors[0].base, 4u);
        EXPECT_EQ(v.theorem.rhs_factors[0].exponent, 1);
        EXPECT_EQ(v.theorem.rhs_factors[1].labels, (std::vector<std::string>{"H1", "H2"}));
        EXPECT_EQ(v.theorem.rhs_factors[1].base, 2u);
        EXPECT_EQ(v.theorem.rhs_factors[1].exponent, 1);
    }
}

TEST(Forms, PointsOnALine) {
    for (int n = 1; n <= 20; ++n) {
        std::vector<Hyperplane> hs;
        for (int i = 1; i <= n + 1; ++i) hs.push_back({"H" + std::to_string(i), {1}, -i});
        const Verification v = verify(compile(Arrangement(1, hs)));
        IntMatrix tri(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < tri.rows(); ++i) {
            tri(i, i) = 2;
            if (i + 1 < tri.rows()) tri(i, i + 1) = tri(i + 1, i) = -1;
        }
        EXPECT_EQ(v.S.s.evaluate(0), tri);
        EXPECT_EQ(v.theorem.lhs, IntPoly(static_cast<long>(n + 1)));
        EXPECT_EQ(v.conjecture.lhs, oracle::q_int(static_cast<unsigned>(n + 1)));
    }
}

TEST(Forms, PlanarMatricesAgreeWithVertexIncidence) {
    for (std::uint64_t s = 0; s < 25; ++s) {
        auto arr = random_arrangement(2, 3 + static_cast<int>(s % 6), 700 + s);
        ASSERT_TRUE(arr);
        const AffineOrientedMatroid om = compile(*arr);
        MeetTable meets(om, bounded_topes(om));
        PolyMatrix s_want, sq_want;
        planar_oracle(*arr, meets.topes(), s_want, sq_want);
        const IntersectionForm s = build_S(meets), sq = build_Sq(meets);
        EXPECT_EQ(s.s.evaluate(0), s_want.evaluate(0));
        for (std::size_t a = 0; a < meets.size(); ++a)
            for (std::size_t b = 0; b < meets.size(); ++b) EXPECT_EQ(sq.s(a, b), sq_want(a, b));
    }
}

TEST(Forms, DeterminantsAgreeWithLaplace) {
    for (std::uint64_t s = 0; s < 15; ++s) {
        auto arr = random_arrangement(2 + static_cast<int>(s % 2), 5, 800 + s);
        ASSERT_TRUE(arr);
        const Verification v = verify(compile(*arr));
        if (v.S.topes.size() > 7) continue;
        EXPECT_EQ(v.theorem.lhs, IntPoly(oracle::det(v.S.s.evaluate(0))));
        EXPECT_EQ(v.conjecture.lhs, oracle::det(v.Sq.s));
    }
}

TEST(Forms, StructuralProperties) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto arr = random_arrangement(1 + static_cast<int>(s % 3), 6, 900 + s);
        ASSERT_TRUE(arr);
        const AffineOrientedMatroid om = compile(*arr);
        MeetTable meets(om, bounded_topes(om));
        const IntersectionForm sf = build_S(meets), sq = build_Sq(meets);
        EXPECT_TRUE(sf.s.is_symmetric());
        EXPECT_TRUE(sq.s.is_symmetric());
        EXPECT_EQ(sq.s.evaluate(1), sf.s.evaluate(1));
        EXPECT_EQ(BigInt(static_cast<unsigned long>(meets.size())), mobius_plus(dual(om.matroid())));
        for (std::size_t a = 0; a < meets.size(); ++a) {
            EXPECT_EQ(sq.s(a, a).coeff(0), 1);
            EXPECT_EQ(sq.s(a, a).degree(), 2 * arr->dim());
            for (std::size_t b = 0; b < meets.size(); ++b) {
                const auto& m = meets.meet(a, b);
                if (!m) {
                    EXPECT_TRUE(sq.s(a, b).is_zero());
                    continue;
                }
                EXPECT_EQ(m->euler_characteristic(), 1);
                const IntPoly h = h_poly(*m);
                for (int k = 0; k <= 2 * m->dim; ++k)
                    EXPECT_EQ(h.coeff(static_cast<std::size_t>(k)), h.coeff(static_cast<std::size_t>(2 * m->dim - k)));
                EXPECT_EQ(sq.s(a, b).low_degree(), meets.separation(a, b));
            }
        }
    }
}

TEST(Forms, ParallelJobsGiveTheSameMatrices) {
    auto arr = random_arrangement(3, 7, 42);
    ASSERT_TRUE(arr);
    const AffineOrientedMatroid om = compile(*arr);
    EXPECT_EQ(build_Sq(om, 1).s, build_Sq(om, 4).s);
}

TEST(Rhs, VamosFactors) {
    const Matroid m = load_instance_file(oracle::fixture("vamos.json")).om->matroid();
    const auto factors = rhs_factors(m);
    ASSERT_EQ(factors.size(), 6u);
    EXPECT_EQ(factors[0].base, 8u);
    EXPECT_EQ(factors[0].exponent, 15);
    for (std::size_t i = 1; i < 6; ++i) {
        EXPECT_EQ(factors[i].base, 4u);
        EXPECT_EQ(factors[i].beta, 1);
        EXPECT_EQ(factors[i].mu_plus, 1);
        EXPECT_EQ(mobius_plus(m, factors[i].flat.elements), 3);
    }
    EXPECT_EQ(rhs_q(m).value, oracle::power(oracle::q_int(8), 15) * oracle::power(oracle::q_int(4), 5));
}

TEST(Rhs, LiteralMobiusReadingDisagreesWithTheDeterminant) {
    // Taking μ⁺ on M|K instead of its dual overshoots as soon as a
    // coloop-free flat has rank ≥ 2.
    const AffineOrientedMatroid vamos = *load_instance_file(oracle::fixture("vamos.json")).om;
    const Verification v = verify(vamos);
    EXPECT_EQ(v.theorem.lhs, IntPoly(BigInt(1) << 55));
    EXPECT_NE(IntPoly(literal_rhs(vamos.matroid())), v.theorem.lhs);

    int disagreements = 0;
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto arr = random_arrangement(3, 6, 1000 + s);
        ASSERT_TRUE(arr);
        const AffineOrientedMatroid om = compile(*arr);
        const Verification r = verify(om);
        EXPECT_TRUE(r.theorem.match);
        if (IntPoly(literal_rhs(om.matroid())) != r.theorem.lhs) ++disagreements;
    }
    EXPECT_GT(disagreements, 0);
}

TEST(Invariance, RelabelReorderAndNudge) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto arr = random_arrangement(2 + static_cast<int>(s % 2), 6, 1100 + s);
        ASSERT_TRUE(arr);
        const Verification base = verify(compile(*arr));

        std::vector<int> order(static_cast<std::size_t>(arr->size()));
        std::iota(order.begin(), order.end(), 0);
        Rng rng(s);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
        Arrangement shuffled = arr->reordered(order);
        std::vector<Hyperplane> renamed = shuffled.hyperplanes();
        for (auto& h : renamed) h.label = "x" + h.label;
        const Verification perm = verify(compile(Arrangement(arr->dim(), renamed)));
        EXPECT_EQ(perm.theorem.lhs, base.theorem.lhs);
        EXPECT_EQ(perm.conjecture.lhs, base.conjecture.lhs);

        auto nudged = nudge_offsets(*arr, 77 + s);
        ASSERT_TRUE(nudged);
        const Verification moved = verify(compile(*nudged));
        EXPECT_EQ(moved.theorem.lhs, base.theorem.lhs);
        EXPECT_EQ(moved.conjecture.lhs, base.conjecture.lhs);
    }
}
