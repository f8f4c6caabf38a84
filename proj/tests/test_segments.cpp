#include <set>

#include <doctest.h>

#include "anst/errors.hpp"
#include "anst/segments.hpp"

using namespace anst;

namespace {
TwistTuple T(std::vector<Rational> v) { return v; }
}

TEST_CASE("base twists")
{
    CHECK(pi_base_twists(2, 2) == T({0, 1}));
    CHECK(pi_base_twists(1, 1) == T({0}));
    CHECK(pi_base_twists(1, 2) == T({Rational(1, 2), Rational(1, 2)}));
    for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 7; ++k) {
            TwistTuple t = pi_base_twists(r, k);
            Rational c(0);
            for (int i = 1; i <= k; ++i) c += (t[i - 1] - Rational(k - i)) * Rational(r);
            CHECK(c == Rational(0));
        }
}

TEST_CASE("rational text")
{
    CHECK(rational_str(Rational(-1, 2)) == "-1/2");
    CHECK(rational_str(Rational(3)) == "3");
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
}

TEST_CASE("jacquet decomposition")
{
    auto one = jacquet_decomposition(3, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].second == T({0}));
    auto two = jacquet_decomposition(2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].first.is_identity());
    CHECK(two[0].second == pi_base_twists(2, 2));
    for (int k = 1; k <= 6; ++k) {
        auto jd = jacquet_decomposition(1, k);
        std::set<TwistTuple> seen;
        for (const auto& [w, t] : jd) seen.insert(t);
        long long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        CHECK(static_cast<long long>(seen.size()) == f);
    }
}

TEST_CASE("segments of pi_I")
{
    BlockSet full = BlockSet::full(2, 3);
    auto s = pi_I_segments(full);
    REQUIRE(s.size() == 1);
    CHECK(s[0].block_length == 3);
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 5; ++k) {
            auto segs = pi_I_segments(BlockSet(r, k));
            auto base = pi_base_twists(r, k);
            REQUIRE(segs.size() == static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) {
                CHECK(segs[i].block_length == 1);
                CHECK(segs[i].twist == base[i]);
            }
        }
    auto mid = pi_I_segments(BlockSet(2, 3, std::vector<int>{1}));
    REQUIRE(mid.size() == 2);
    CHECK(mid[0] == SegmentDatum{2, Rational(0)});
    CHECK(mid[1] == SegmentDatum{1, Rational(2)});
}

TEST_CASE("orientations and fibers")
{
    CHECK(orientation_of(Permutation::identity(4)).str() == "<<<");
    auto a = theta_fiber(BlockSet(1, 2)), b = theta_fiber(BlockSet::full(1, 2));
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0] == Permutation::simple(2, 1));
    CHECK(b[0].is_identity());
    for (int k = 1; k <= 5; ++k) {
        std::set<Permutation> cover;
        for (const auto& I : all_block_sets(1, k))
            for (const auto& w : theta_fiber(I)) {
                CHECK(cover.insert(w).second);
                CHECK(descents_right(w).complement().mask() == I.mask());
            }
        CHECK(cover.size() == enumerate_group(k).size());
    }
}

TEST_CASE("jordan-holder counts")
{
    CHECK(jh_factors(3, 1).size() == 1);
    CHECK(jh_factors(1, 2).size() == 2);
    CHECK(jh_factors(2, 4).size() == 8);
    CHECK(jh_factors(1, 6).size() == 32);
}
