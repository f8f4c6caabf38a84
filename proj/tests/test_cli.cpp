#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "anst/errors.hpp"
#include "anst/io.hpp"

using namespace anst;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("kl verb")
{
    Run r = run({"kl", "--n", "4", "--x", "[1,2,3,4]", "--w", "[3,4,1,2]"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"coeffs\":[1,1]}\n");
    CHECK(run({"kl", "--x", "e", "--w", "s2*s1*s3*s2"}).out == r.out);
}

TEST_CASE("jh verb")
{
    Run r = run({"jh", "--r", "2", "--k", "4"});
    CHECK(r.code == 0);
    CHECK(parse(r)["count"] == 8);
}

TEST_CASE("ext-dim verb")
{
    Run r = run({"ext-dim", "--kind", "analytic", "--degree", "1", "--left", "v:2", "--right", "st-an", "--r", "3",
                 "--k", "3", "--dL", "2"});
    CHECK(r.code == 0);
    CHECK(parse(r)["dim"] == 3);
    CHECK(parse(r)["cite"] == "Thm analyticExt3");
    Run u = run({"ext-dim", "--kind", "analytic", "--degree", "2", "--left", "v:2", "--right", "st-an", "--r", "3",
                 "--k", "3"});
    CHECK(u.out == "{\"status\":\"not-determined\"}\n");
}

TEST_CASE("steinberg-mult verb")
{
    Run r = run({"steinberg-mult", "--r", "2", "--k", "2", "--dL", "1", "--S", "-", "--J", "-"});
    CHECK(r.code == 0);
    auto j = parse(r);
    std::vector<long long> m;
    for (const auto& e : j["results"]) m.push_back(e["m"]);
    CHECK(m == std::vector<long long>{1, 1, 0, 0, 0, 1});
    Run one = run({"steinberg-mult", "--r", "2", "--k", "2", "--S", "-", "--J", "-", "--w", "[3,4,1,2]"});
    CHECK(one.out == "{\"w\":\"[3,4,1,2]\",\"J\":\"-\",\"S\":\"-\",\"m\":1}\n");
}

TEST_CASE("parallel output is byte-identical")
{
    std::vector<std::string> base = {"steinberg-mult", "--r", "1", "--k", "4", "--dL", "2", "--max-len", "5"};
    std::vector<std::string> par = base;
    par.insert(par.end(), {"--parallel", "3"});
    Run a = run(base), b = run(par), c = run(base);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("other verbs produce json")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"weyl", "--w", "[3,4,1,2]", "--x", "[2,1,4,3]"},
             {"weyl", "--n", "4", "--longest", "1,3"},
             {"cosets", "--n", "4", "--I", "1,3", "--J", "1,3"},
             {"cosets", "--r", "2", "--k", "2", "--I", "-", "--J", "-"},
             {"cosets", "--r", "2", "--embed", "[2,1]"},
             {"mult", "--w", "[3,4,1,2]", "--wp", "e"},
             {"mult", "--K", "-", "--r", "2", "--k", "2", "--w", "s2"},
             {"segments", "--r", "2", "--k", "3", "--I", "1"},
             {"jacquet", "--r", "1", "--k", "3"},
             {"jacquet", "--r", "1", "--k", "3", "--fiber", "1"},
             {"tits-check", "--r", "1", "--k", "3"},
             {"ext-dim", "--r", "2", "--k", "2", "--char-group", "HomL"},
         }) {
        Run r = run(args);
        CHECK_MESSAGE(r.code == 0, args.front());
        CHECK_NOTHROW(parse(r));
    }
    CHECK(parse(run({"weyl", "--w", "[3,4,1,2]", "--x", "[2,1,4,3]"}))["bruhat_leq"] == true);
    CHECK(parse(run({"mult", "--w", "[3,4,1,2]", "--wp", "e"}))["m"] == 2);
    CHECK(parse(run({"cosets", "--r", "2", "--embed", "[2,1]"}))["embedded"] == "[3,4,1,2]");
}

TEST_CASE("block sets round trip through their own output")
{
    Run r = run({"jh", "--r", "1", "--k", "4"});
    auto j = parse(r);
    for (const auto& f : j["factors"]) {
        std::string s = f;
        CHECK(parse_block_set(s, 1, 4).str() == s);
    }
}

TEST_CASE("exit codes")
{
    Run bad = run({"kl", "--x", "[1,1]", "--w", "[2,1]"});
    CHECK(bad.code == 2);
    CHECK(parse(bad).contains("error"));
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"kl", "--x", "e"}).code == 2);
    CHECK(run({"steinberg-mult", "--r", "1", "--k", "7"}).code == 2);
    Run big = run({"kl", "--x", "e", "--w", "[13,12,11,10,9,8,7,6,5,4,3,2,1]", "--bound", "13"});
    CHECK(big.code == 3);
    CHECK(run({"weyl", "--n", "10", "--parabolic", "-"}).code == 3);
}

TEST_CASE("selftest verb")
{
    Run ok = run({"selftest", "--level", "quick"});
    CHECK(ok.code == 0);
    CHECK(parse(ok)["ok"] == true);
    Run bad = run({"selftest", "--level", "quick", "--inject-fault"});
    CHECK(bad.code == 1);
    CHECK(parse(bad)["ok"] == false);
    CHECK(run({"kl", "--x", "e", "--w", "[3,4,1,2]"}).out == "{\"coeffs\":[1,1]}\n");
}
