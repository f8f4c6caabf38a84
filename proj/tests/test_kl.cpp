#include <set>
#include <thread>

#include <doctest.h>

#include "anst/errors.hpp"
#include "anst/kl.hpp"
#include "anst/oracles.hpp"

using namespace anst;

namespace {
Permutation P(std::vector<int> v) { return Permutation::from_one_line(v); }
MultiWeylElement M(std::vector<int> v) { return MultiWeylElement({P(v)}); }
}

TEST_CASE("kl examples")
{
    CHECK(kl_poly(P({1, 2, 3, 4}), P({3, 4, 1, 2})) == KLPolynomial{{1, 1}});
    CHECK(kl_poly(P({1, 3, 2, 4}), P({3, 4, 1, 2})) == KLPolynomial{{1, 1}});
    CHECK(kl_poly(P({2, 1, 3, 4}), P({1, 3, 2, 4})).is_zero());
    for (const auto& x : enumerate_group(4)) {
        CHECK(kl_poly(x, x) == KLPolynomial{{1}});
        CHECK(kl_poly(x, P({4, 3, 2, 1})) == KLPolynomial{{1}});
    }
}

TEST_CASE("kl agrees with the R-polynomial oracle on S_4 and S_5")
{
    for (int n : {4, 5})
        for (const auto& w : enumerate_group(n))
            for (const auto& [x, p] : oracle::kl_column(w)) REQUIRE(kl_poly(x, w) == p);
}

TEST_CASE("kl basic properties on S_5")
{
    auto G = enumerate_group(5);
    for (const auto& w : G)
        for (const auto& x : G) {
            KLPolynomial p = kl_poly(x, w);
            if (!bruhat_leq(x, w)) {
                REQUIRE(p.is_zero());
                continue;
            }
            REQUIRE(p.coeff(0) == 1);
            if (x != w) REQUIRE(2 * p.degree() <= length(w) - length(x) - 1);
            REQUIRE(p == kl_poly(x.inverse(), w.inverse()));
        }
}

TEST_CASE("kl on S_6 columns match the oracle")
{
    for (const auto& w : {P({3, 4, 5, 6, 1, 2}), P({4, 6, 2, 5, 1, 3})}) {
        auto col = oracle::kl_column(w);
        for (const auto& [x, p] : col) CHECK(kl_poly(x, w) == p);
    }
}

TEST_CASE("verma multiplicities")
{
    CHECK(verma_mult(M({3, 4, 1, 2}), M({3, 4, 1, 2})) == 1);
    CHECK(verma_mult(M({1, 2, 3, 4}), M({3, 4, 1, 2})) == 2);
    CHECK(verma_mult(M({2, 1}), M({1, 2})) == 0);
    MultiWeylElement a({P({1, 2, 3, 4}), P({1, 2, 3, 4})});
    MultiWeylElement b({P({3, 4, 1, 2}), P({3, 4, 1, 2})});
    CHECK(verma_mult(a, b) == 4);
}

TEST_CASE("parabolic verma multiplicities for blocks (2,2)")
{
    BlockSet K(2, 2);
    std::set<Permutation> ones = {P({1, 2, 3, 4}), P({1, 3, 2, 4}), P({3, 4, 1, 2})};
    for (const auto& w : enumerate_group(4))
        CHECK(parabolic_verma_mult(K, MultiWeylElement({w})) == (ones.count(w) ? 1 : 0));
    CHECK(parabolic_verma_mult(K, M({2, 1, 3, 4})) == 0);
}

TEST_CASE("kl cache is safe under concurrent callers")
{
    KLCache cache;
    auto G = enumerate_group(5);
    std::vector<std::vector<KLPolynomial>> out(4);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 4; ++t)
            pool.emplace_back([&, t] {
                for (const auto& w : G) out[t].push_back(cache.poly(Permutation::identity(5), w));
            });
    }
    for (int t = 1; t < 4; ++t) CHECK(out[t] == out[0]);
}

TEST_CASE("kl cache cap fails fast")
{
    KLCache small(8);
    CHECK_THROWS_AS(small.poly(Permutation::identity(5), P({5, 4, 3, 2, 1})), ResourceError);
}

TEST_CASE("kl rank guard")
{
    Permutation big = Permutation::identity(kKLMaxRank + 1);
    CHECK_THROWS_AS(kl_poly(big, big), ResourceError);
}
