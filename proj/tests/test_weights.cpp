#include <doctest.h>

#include "anst/errors.hpp"
#include "anst/io.hpp"
#include "anst/weights.hpp"

using namespace anst;

namespace {
IntegralWeight W(std::vector<long long> row)
{
    IntegralWeight w;
    w.n = static_cast<int>(row.size());
    w.rows = {row};
    return w;
}
MultiWeylElement M(std::vector<int> v) { return MultiWeylElement({Permutation::from_one_line(v)}); }
}

TEST_CASE("rho is shifted to integers")
{
    CHECK(rho(2).shifted.rows[0] == std::vector<long long>{1, 0});
    CHECK(rho(4).shifted.rows[0] == std::vector<long long>{3, 2, 1, 0});
}

TEST_CASE("dot action examples")
{
    IntegralWeight zero = IntegralWeight::zero(2, 1);
    CHECK(dot_action(MultiWeylElement::identity(2, 1), zero) == zero);
    CHECK(dot_action(M({2, 1}), zero) == W({-1, 1}));
}

TEST_CASE("dot action is an action on S_4")
{
    IntegralWeight lambda = W({5, 2, 2, -1});
    auto G = enumerate_group(4);
    for (const auto& u : G)
        for (const auto& v : G) {
            MultiWeylElement uv({u * v}), U({u}), V({v});
            CHECK(dot_action(uv, lambda) == dot_action(U, dot_action(V, lambda)));
        }
}

TEST_CASE("I-dominance")
{
    IntegralWeight zero = IntegralWeight::zero(3, 2);
    for (std::uint32_t m = 0; m < 4; ++m) {
        CHECK(is_I_dominant(zero, SimpleRootSet(3, m << 1), DominanceSign::Plus));
        CHECK(is_I_dominant(zero, SimpleRootSet(3, m << 1), DominanceSign::Minus));
    }
    SimpleRootSet one(2, std::vector<int>{1});
    CHECK(is_I_dominant(W({-1, 1}), one, DominanceSign::Minus));
    CHECK_FALSE(is_I_dominant(W({-1, 1}), one, DominanceSign::Plus));
}

TEST_CASE("dominance set examples")
{
    IntegralWeight z1 = IntegralWeight::zero(4, 1), z2 = IntegralWeight::zero(4, 2);
    CHECK(dominance_set(MultiWeylElement::identity(4, 1), z1) == SimpleRootSet::full(4));
    CHECK(dominance_set(M({3, 4, 1, 2}), z1).str() == "1,3");
    MultiWeylElement w({Permutation::simple(4, 2), Permutation::identity(4)});
    CHECK(dominance_set(w, z2).str() == "1,3");
}

TEST_CASE("dominance set is the ascent intersection for dominant weights")
{
    IntegralWeight lambda = parse_weight("4,1,0,-3;2,2,1,0");
    for (const auto& w : enumerate_multi(4, 2)) {
        SimpleRootSet dom = dominance_set(w, lambda);
        CHECK(dom == ascent_set_I(w).intersection);
        SimpleRootSet direct(4);
        IntegralWeight mu = dot_action(w, lambda);
        for (int i = 1; i < 4; ++i)
            if (is_I_dominant(mu, SimpleRootSet(4, std::vector<int>{i}), DominanceSign::Plus)) direct.insert(i);
        CHECK(dom == direct);
    }
    CHECK_THROWS_AS(dominance_set(M({1, 2, 3, 4}), W({0, 1, 0, 0})), PreconditionError);
}
