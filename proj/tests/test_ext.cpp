#include <doctest.h>

#include "anst/errors.hpp"
#include "anst/ext.hpp"

using namespace anst;

namespace {

ExtQuery query(Flavor f, int degree, const std::string& left, const std::string& right, int r, int k,
               int d, bool fixed = false)
{
    ExtQuery q;
    q.flavor = f;
    q.fixed_center = fixed;
    q.degree = degree;
    q.r = r;
    q.k = k;
    q.n = r * k;
    q.d_L = d;
    q.left = RepDescriptor::parse(left, r, k);
    q.right = RepDescriptor::parse(right, r, k);
    return q;
}

} // namespace

TEST_CASE("descriptor grammar round trips")
{
    for (const char* s : {"i:1,3", "v:-", "levi:2", "st-an", "sigma:2", "sigma:2@0", "c:1@1"})
        CHECK(RepDescriptor::parse(s, 2, 4).str() == s);
    CHECK_THROWS_AS(RepDescriptor::parse("sigma:4", 2, 4), PreconditionError);
    CHECK_THROWS_AS(RepDescriptor::parse("w:1", 2, 4), PreconditionError);
    CHECK_THROWS_AS(RepDescriptor::parse("c:1", 2, 4), PreconditionError);
}

TEST_CASE("character groups")
{
    BlockSet full = BlockSet::full(2, 3);
    CHECK(char_group_dim(CharGroup::HomL, full, 1) == 2);
    CHECK(char_group_dim(CharGroup::HomZIbar, BlockSet::all_but(2, 3, 1), 3) == 4);
    CHECK(char_group_dim(CharGroup::XstarLI, full, 1) == 1);
    CHECK(char_group_dim(CharGroup::HomLsigma, full, 2) == 2);
}

TEST_CASE("analytic steinberg extension is d_L + 1")
{
    for (int d = 1; d <= 3; ++d) {
        ExtAnswer a = ext_dim(query(Flavor::Analytic, 1, "v:1", "st-an", 1, 2, d));
        CHECK(a.status == ExtAnswer::Status::Dimension);
        CHECK(a.dim() == d + 1);
        CHECK(a.citation == "Thm analyticExt3");
        CHECK(ext_dim(query(Flavor::Analytic, 1, "v:1", "st-an", 1, 2, d, true)).dim() == d + 1);
        CHECK(ext_dim(query(Flavor::Analytic, 0, "v:1", "st-an", 1, 2, d)).dim() == 0);
    }
    CHECK(ext_dim(query(Flavor::Analytic, 1, "v:2", "st-an", 3, 3, 2)).dim() == 3);
}

TEST_CASE("adjacent generalized steinberg extensions")
{
    for (int deg = 0; deg <= 4; ++deg) {
        ExtAnswer a = ext_dim(query(Flavor::Smooth, deg, "v:1,2", "v:1", 1, 4, 1));
        CHECK(a.determined());
        CHECK(a.dim() == (deg == 1 ? 1 : 0));
    }
    CHECK_FALSE(ext_dim(query(Flavor::Smooth, 2, "v:1,2", "v:1", 1, 4, 1, true)).determined());
    CHECK_FALSE(ext_dim(query(Flavor::Smooth, 1, "v:1,2", "v:3", 1, 4, 1)).determined());
}

TEST_CASE("full inductions vanish unless J is contained in I")
{
    for (int deg = 0; deg <= 3; ++deg) {
        ExtAnswer a = ext_dim(query(Flavor::Smooth, deg, "i:1", "i:2", 1, 4, 1));
        CHECK(a.status == ExtAnswer::Status::ZeroByRule);
        CHECK(a.citation == "Lemma SmoothExt1");
        CHECK(ext_dim(query(Flavor::Analytic, deg, "i:1", "i:1,2", 1, 4, 1)).status ==
              ExtAnswer::Status::ZeroByRule);
    }
}

TEST_CASE("full inductions have binomial dimensions")
{
    for (int k = 1; k <= 5; ++k)
        for (const auto& J : all_block_sets(1, k))
            for (int deg = 0; deg <= k + 1; ++deg) {
                ExtQuery q = query(Flavor::Smooth, deg, "i:-", "i:-", 1, k, 1);
                q.left.set = BlockSet::full(1, k);
                q.right.set = J;
                CHECK(ext_dim(q).dim() == binomial(levi_block_count(J), deg));
            }
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(5, 2) == 10);
}

TEST_CASE("fixed center uses the reduced character group")
{
    ExtQuery q = query(Flavor::Smooth, 1, "i:1,2,3", "i:-", 1, 4, 1, true);
    CHECK_FALSE(ext_dim(q).determined());
    q.right.set = BlockSet::all_but(1, 4, 2);
    CHECK(ext_dim(q).dim() == 1);
    q.right.set = BlockSet::full(1, 4);
    CHECK(ext_dim(q).dim() == 0);
    q.degree = 0;
    CHECK(ext_dim(q).dim() == 1);
}

TEST_CASE("steinberg against induction shifts the degree")
{
    ExtQuery q = query(Flavor::Smooth, 0, "v:1", "i:2,3", 1, 4, 1);
    CHECK(ext_dim(q).dim() == 0);
    q.degree = 2;
    CHECK(ext_dim(q).dim() == binomial(2, 0));
    q.degree = 3;
    CHECK(ext_dim(q).dim() == binomial(2, 1));
    CHECK(ext_dim(query(Flavor::Smooth, 2, "v:1", "i:1", 1, 4, 1)).status == ExtAnswer::Status::ZeroByRule);
}

TEST_CASE("sigma rules")
{
    CHECK(ext_dim(query(Flavor::Analytic, 1, "v:2", "sigma:2@1", 1, 4, 2)).dim() == 2);
    CHECK(ext_dim(query(Flavor::Analytic, 1, "v:2", "sigma:2", 1, 4, 2)).dim() == 3);
    CHECK(ext_dim(query(Flavor::Analytic, 1, "v:2", "c:2@0", 1, 4, 2)).dim() == 1);
    CHECK(ext_dim(query(Flavor::Analytic, 1, "v:2", "c:1@0", 1, 4, 2)).dim() == 0);
    CHECK_FALSE(ext_dim(query(Flavor::Analytic, 1, "v:2", "sigma:1@0", 1, 4, 2)).determined());
    CHECK_FALSE(ext_dim(query(Flavor::Analytic, 1, "v:2", "sigma:2", 1, 4, 2, true)).determined());
    CHECK_THROWS_AS(ext_dim(query(Flavor::Analytic, 1, "v:2", "sigma:2@2", 1, 4, 2)), PreconditionError);
}

TEST_CASE("analytic inductions in low degree")
{
    ExtQuery q = query(Flavor::Analytic, 1, "i:1,2", "i:1,2", 1, 3, 2);
    CHECK(ext_dim(q).dim() == 3);
    q.degree = 0;
    CHECK(ext_dim(q).dim() == 1);
    q.degree = 2;
    CHECK_FALSE(ext_dim(q).determined());
    q = query(Flavor::Analytic, 1, "i:1,2", "i:1", 1, 3, 2);
    CHECK_FALSE(ext_dim(q).determined());
    q.fixed_center = true;
    CHECK(ext_dim(q).dim() == 3);
}

TEST_CASE("every determined answer cites a rule")
{
    for (const char* l : {"i:1", "v:1", "v:1,2", "levi:1", "i:1,2"})
        for (const char* r : {"i:-", "i:1", "v:1", "st-an", "sigma:1", "sigma:1@0", "c:1@0", "levi:1"})
            for (int deg = 0; deg <= 3; ++deg)
                for (bool fixed : {false, true})
                    for (Flavor f : {Flavor::Smooth, Flavor::Analytic}) {
                        ExtQuery q = query(f, deg, l, r, 1, 3, 1, fixed);
                        if (q.left.kind == RepDescriptor::Kind::SelfExtLevi &&
                            q.right.kind == RepDescriptor::Kind::SelfExtLevi)
                            q.right.set = q.left.set;
                        else if ((q.left.kind == RepDescriptor::Kind::SelfExtLevi) !=
                                 (q.right.kind == RepDescriptor::Kind::SelfExtLevi))
                            continue;
                        ExtAnswer a = ext_dim(q);
                        if (a.determined()) {
                            CHECK_FALSE(a.citation.empty());
                            CHECK_FALSE(a.rule.empty());
                        }
                    }
}

TEST_CASE("main theorem consistency")
{
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 6; ++k)
            for (int d = 1; d <= 3; ++d) CHECK(consistency_check_thm_main(r, k, d));
}
