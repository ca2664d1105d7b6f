#include "cli_app.hpp"

#include <json.hpp>

#include <doctest.h>

#include <sstream>

using nlohmann::json;
using singlet::cli::run_cli;

namespace
{

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("chars for the vacuum module")
    {
        const Run r = run({"chars", "--p", "2", "--atyp", "1,1", "--cutoff", "3"});
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["p"] == 2);
        CHECK(j["label"] == "M(1,1)");
        CHECK(j["terms"][0]["q"] == "1/12");
        // Terms come out sorted by q-exponent.
        CHECK(j["terms"][1]["q"] == "13/12");
    }

    TEST_CASE("chars for a typical module")
    {
        const Run r = run({"chars", "--p", "2", "--typ", "1/2", "--output", "csv"});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("q,t,val\n-1/96,-1/1,1/1\n", 0) == 0);
    }

    TEST_CASE("invalid labels exit 2 without output")
    {
        for (const auto &args : std::vector<std::vector<std::string>>{
                 {"chars", "--p", "2", "--atyp", "1,0"},
                 {"chars", "--p", "2", "--atyp", "1,3"},
                 {"chars", "--p", "2", "--atyp", "1"},
                 {"chars", "--p", "2"},
                 {"chars", "--p", "1", "--atyp", "1,1"},
                 {"chars", "--typ", "1/2", "--tau", "-1i"},
                 {"chars", "--typ", "1/2", "--output", "xml"},
                 {"verify", "--suite", "nope"},
                 {"verify", "--suite", "qdim", "--eps", "0.2"},
                 {"frobnicate"},
             }) {
            const Run r = run(args);
            CAPTURE(args.front());
            CHECK(r.code == 2);
            CHECK(r.out.empty());
            CHECK_FALSE(r.err.empty());
        }
    }

    TEST_CASE("fuse worked instance")
    {
        const std::string m12 = R"({"atyp":[{"r":1,"s":2,"c":1}]})";
        const Run r = run({"fuse", "--p", "2", m12, m12});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out) == json::parse(R"({"typ":[],"atyp":[{"r":0,"s":1,"c":1},{"r":1,"s":1,"c":2},{"r":2,"s":1,"c":1}]})"));
    }

    TEST_CASE("fuse unit echoes input and canonicalizes typical collisions")
    {
        const std::string x = R"({"typ":[{"m":"1/3","c":2}],"atyp":[{"r":-1,"s":2,"c":1}]})";
        const Run unit = run({"fuse", "--p", "3", R"({"atyp":[{"r":1,"s":1,"c":1}]})", x});
        REQUIRE(unit.code == 0);
        CHECK(json::parse(unit.out) == json::parse(R"({"typ":[{"m":"1/3","c":2}],"atyp":[{"r":-1,"s":2,"c":1}]})"));

        const std::string half = R"({"typ":[{"m":"1/2","c":1}]})";
        const Run sq = run({"fuse", "--p", "2", "--output", "text", half, half});
        CHECK(sq.out == "M(1,2) + M(2,2)\n");
        CHECK(run({"fuse", "{", half}).code == 2);
        CHECK(run({"fuse", R"({"atyp":[{"r":1}]})", half}).code == 2);
    }

    TEST_CASE("qdim output")
    {
        const Run r = run({"qdim", "--p", "2", "--atyp", "1,2"});
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["at_one"] == "2/1");
        CHECK(j["laurent"].size() == 2);
    }

    TEST_CASE("theta evaluation and law check")
    {
        const Run value = run({"theta", "--u", "0.1i", "--eps", "-0.25"});
        REQUIRE(value.code == 0);
        CHECK(json::parse(value.out)["value"] == "0.15186724745861252+0i");
        const Run law = run({"theta", "--law", "S_false", "--eps", "0.1", "--tau", "0.3+0.8i"});
        CHECK(law.code == 0);
        CHECK(json::parse(law.out)["pass"] == true);
        CHECK(run({"theta", "--law", "bogus"}).code == 2);
    }

    TEST_CASE("verify is deterministic and reports failures")
    {
        const Run a = run({"verify", "--suite", "ring", "--seed", "7"});
        const Run b = run({"verify", "--suite", "ring", "--seed", "7"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        std::istringstream lines(a.out);
        std::string line;
        int count = 0;
        while (std::getline(lines, line)) {
            CHECK(json::parse(line)["pass"] == true);
            ++count;
        }
        CHECK(count == 4);

        const Run theta = run({"verify", "--suite", "theta", "--p", "2"});
        CHECK(theta.code == 0);

        const Run tight = run({"verify", "--suite", "theta", "--tol", "1e-30"});
        CHECK(tight.code == 1);
        const json first = json::parse(tight.out.substr(0, tight.out.find('\n')));
        CHECK(first["pass"] == false);
        CHECK(first.contains("rel_residual"));
    }
}
