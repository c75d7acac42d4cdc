#include "oracles.hpp"

#include "sqdet/errors.hpp"
#include "sqdet/io.hpp"
#include "sqdet/oriented_matroid.hpp"
#include "sqdet/random.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace sqdet;

namespace {

// Bounded regions of a line arrangement, found from points instead of
// covectors: centroids of vertex triples, kept when they avoid every line and
// the recession cone of their region is trivial.
std::set<std::string> geometric_bounded_regions(const Arrangement& arr) {
    const auto& hs = arr.hyperplanes();
    std::vector<std::pair<mpq_class, mpq_class>> verts;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const auto &a = hs[i].normal, &b = hs[j].normal;
            const mpq_class d = a[0] * b[1] - a[1] * b[0];
            if (d == 0) continue;
            verts.emplace_back((hs[i].offset * b[1] - a[1] * hs[j].offset) / d,
                               (a[0] * hs[j].offset - hs[i].offset * b[0]) / d);
        }
    std::set<std::string> out;
    for (std::size_t x = 0; x < verts.size(); ++x)
        for (std::size_t y = x + 1; y < verts.size(); ++y)
            for (std::size_t z = y + 1; z < verts.size(); ++z) {
                const mpq_class px = (verts[x].first + verts[y].first + verts[z].first) / 3;
                const mpq_class py = (verts[x].second + verts[y].second + verts[z].second) / 3;
                std::string key;
                std::vector<int> s;
                bool on_line = false;
                for (const auto& h : hs) {
                    const mpq_class v = h.normal[0] * px + h.normal[1] * py - h.offset;
                    on_line = on_line || v == 0;
                    s.push_back(sgn(v));
                    key += v > 0 ? '+' : '-';
                }
                if (on_line) continue;
                bool bounded = true;
                for (const auto& h : hs)
                    for (int dir : {1, -1}) {
                        const mpq_class vx = -h.normal[1] * dir, vy = h.normal[0] * dir;
                        bool blocked = false;
                        for (std::size_t k = 0; k < hs.size(); ++k)
                            if (s[k] * sgn(hs[k].normal[0] * vx + hs[k].normal[1] * vy) < 0) blocked = true;
                        if (!blocked) bounded = false;
                    }
                if (bounded) out.insert(key);
            }
    return out;
}

std::set<std::string> keys(const std::vector<Tope>& topes) {
    std::set<std::string> out;
    for (const auto& t : topes) out.insert(t.key());
    return out;
}

} // namespace

TEST(SignVector, BasicOperations) {
    const SignVector x = SignVector::from_key("+0-0");
    const SignVector y = SignVector::from_key("--++");
    EXPECT_EQ(compose(x, y).key(), "+--+");
    EXPECT_TRUE(conforms(x, SignVector::from_key("+--+")));
    EXPECT_FALSE(conforms(x, y));
    EXPECT_EQ(separation(x, y), 4);
    EXPECT_EQ((-x).key(), "-0+0");
    EXPECT_EQ(x.zero_set(), Mask{0b1010});
    EXPECT_THROW(compose(x, SignVector::from_key("+")), InputError);
    EXPECT_LT(SignVector::from_key("+-").key(), SignVector::from_key("-+").key());
}

TEST(SignVector, TextRoundTrip) {
    const std::vector<std::string> ground{"1", "2", "3", "4", "5"};
    const SignVector v = parse_sign_vector("5 -2 3", ground);
    EXPECT_EQ(v.key(), "0-+0+");
    EXPECT_EQ(format_sign_vector(v, ground), "-2 3 5");
    EXPECT_THROW(parse_sign_vector("6", ground), InputError);
    EXPECT_THROW(parse_sign_vector("1 -1", ground), InputError);
}

TEST(SignVector, CompositionClosureCap) {
    std::vector<SignVector> gens{SignVector::from_key("+0"), SignVector::from_key("0+"),
                                 SignVector::from_key("-0"), SignVector::from_key("0-")};
    EXPECT_EQ(composition_closure(gens, 100).size(), 8u);
    EXPECT_THROW(composition_closure(gens, 5), SizeError);
}

TEST(Chirotope, AlternatingExtension) {
    const Chirotope c = Chirotope::from_string({"a", "b", "c"}, 2, "+-+");
    EXPECT_EQ(c({0, 1}), Sign::Plus);
    EXPECT_EQ(c({1, 0}), Sign::Minus);
    EXPECT_EQ(c({0, 2}), Sign::Minus);
    EXPECT_EQ(c({2, 0}), Sign::Plus);
    EXPECT_EQ(c({1, 1}), Sign::Zero);
    EXPECT_EQ(c.to_string(), "+-+");
    EXPECT_THROW(Chirotope::from_string({"a", "b", "c"}, 2, "+-"), InputError);
    EXPECT_THROW(Chirotope::from_string({"a", "b", "c"}, 2, "000"), InputError);
}

TEST(Chirotope, CocircuitsMatchLinearFunctionals) {
    // Vectors (1,0), (0,1), (1,1): cocircuits are sign patterns of <w, v_i>
    // for w orthogonal to one of the vectors.
    Arrangement arr(2, {{"a", {1, 0}, 0}, {"b", {0, 1}, 0}, {"c", {1, 1}, 0}});
    std::set<std::string> got;
    for (const auto& y : cocircuits_from_chirotope(central_chirotope(arr))) got.insert(y.key());
    // w = (0,1), (1,0), (1,-1) and their negatives
    const std::set<std::string> expected{"0++", "0--", "+0+", "-0-", "+-0", "-+0"};
    EXPECT_EQ(got, expected);
}

TEST(AffineOrientedMatroid, RejectsInconsistentInput) {
    nlohmann::json j = nlohmann::json::parse(oracle::slurp(oracle::fixture("vamos.json")));
    auto& list = j["lift"]["feasible_cocircuits"];
    {
        auto bad = j;
        bad["lift"]["feasible_cocircuits"][0] = "-5 6 -7 -8";  // breaks the pivot relation
        EXPECT_THROW(parse_oriented_matroid(bad), InvariantError);
    }
    {
        auto bad = j;
        bad["lift"]["feasible_cocircuits"][0] = "4 6 -7 8";  // duplicate zero set
        EXPECT_THROW(parse_oriented_matroid(bad), InvariantError);
    }
    {
        auto bad = j;
        bad["lift"]["feasible_cocircuits"][0] = "2 4 7 8";  // zero set {1,3,5,6} is not a basis
        EXPECT_THROW(parse_oriented_matroid(bad), InvariantError);
    }
    {
        auto bad = j;
        bad["lift"]["feasible_cocircuits"].erase(bad["lift"]["feasible_cocircuits"].begin());
        EXPECT_THROW(parse_oriented_matroid(bad), InvariantError);
    }
    {
        auto bad = j;
        bad["lift"]["g"] = "1";
        EXPECT_THROW(parse_oriented_matroid(bad), InputError);
    }
    EXPECT_EQ(list.size(), 65u);
    EXPECT_NO_THROW(parse_oriented_matroid(j));
}

TEST(BoundedTopes, VamosFixture) {
    const AffineOrientedMatroid om = *load_instance_file(oracle::fixture("vamos.json")).om;
    EXPECT_EQ(om.feasible_cocircuits().size(), 65u);
    const auto topes = bounded_topes(om);
    const auto expected = nlohmann::json::parse(oracle::slurp(oracle::fixture("vamos-bounded-topes.json")));
    std::set<std::string> want;
    for (const auto& t : expected["bounded_topes"]) want.insert(parse_sign_vector(t.get<std::string>(), om.ground()).key());
    EXPECT_EQ(want.size(), 30u);
    EXPECT_EQ(keys(topes), want);
    EXPECT_TRUE(std::is_sorted(topes.begin(), topes.end(),
                               [](const Tope& a, const Tope& b) { return a.key() < b.key(); }));
}

TEST(BoundedTopes, PointsOnALine) {
    for (int n = 1; n <= 12; ++n) {
        std::vector<Hyperplane> hs;
        for (int i = 1; i <= n + 1; ++i) hs.push_back({"H" + std::to_string(i), {1}, -i});
        const AffineOrientedMatroid om = compile(Arrangement(1, hs));
        EXPECT_EQ(om.feasible_cocircuits().size(), static_cast<std::size_t>(n + 1));
        EXPECT_EQ(bounded_topes(om).size(), static_cast<std::size_t>(n));
    }
}

TEST(BoundedTopes, AgreeWithGeometryForRandomLineArrangements) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto arr = random_arrangement(2, 3 + static_cast<int>(s % 5), 200 + s);
        ASSERT_TRUE(arr);
        EXPECT_EQ(keys(bounded_topes(compile(*arr))), geometric_bounded_regions(*arr)) << "seed " << 200 + s;
    }
}

TEST(BoundedTopes, GenericLinesCount) {
    RandomArrangementOptions opts;
    opts.uniform_matroid = true;
    for (int n = 3; n <= 8; ++n) {
        auto arr = random_arrangement(2, n, 300 + static_cast<std::uint64_t>(n), opts);
        ASSERT_TRUE(arr);
        EXPECT_EQ(bounded_topes(compile(*arr)).size(), static_cast<std::size_t>((n - 1) * (n - 2) / 2));
    }
}

TEST(Faces, DimensionsAndMeets) {
    const Instance inst = load_instance_file(oracle::fixture("two-lines-C.json"));
    const auto& om = *inst.om;
    const auto topes = bounded_topes(om);
    ASSERT_EQ(topes.size(), 2u);
    for (const auto& y : om.feasible_cocircuits()) EXPECT_EQ(face_dimension(om, y), 0);
    for (const auto& t : topes) {
        EXPECT_EQ(face_dimension(om, t.sign), 2);
        const auto f = meet_faces(om, t, t);
        ASSERT_TRUE(f);
        EXPECT_EQ(f->f, (std::vector<long long>{3, 3, 1}));  // a triangle
        EXPECT_EQ(f->euler_characteristic(), 1);
    }
    const auto shared = meet_faces(om, topes[0], topes[1]);
    ASSERT_TRUE(shared);
    EXPECT_EQ(shared->f, (std::vector<long long>{1}));
}
