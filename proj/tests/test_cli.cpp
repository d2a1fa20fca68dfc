#include "wordcx/cli.hpp"
#include "wordcx/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wordcx;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "wordcx_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

const std::string champernowne = R"({"kind":"champernowne"})";
const std::string dekking = R"({"kind":"morphic","preset":"dekking"})";
const std::string tau = R"({"kind":"block_coded","base":{"kind":"morphic","preset":"dekking"},"code":{"1":[1,2],"0":[0,3]}})";

} // namespace

TEST_CASE("generate")
{
    CHECK(cli({"generate", "--word", champernowne, "--n", "12"}).out == "0\n1\n1\n0\n1\n1\n1\n0\n0\n1\n0\n1\n");
    CHECK(cli({"generate", "--word", R"({"kind":"periodic","pattern":[0,1]})", "--n", "4"}).out == "0\n1\n0\n1\n");
    CHECK(cli({"generate", "--word", dekking, "--n", "7"}).out == "0\n1\n1\n0\n0\n0\n1\n");
    CHECK(cli({"generate", "--word", R"({"kind":"periodic","pattern":[[1,-1]]})", "--n", "2"}).out == "1 -1\n1 -1\n");
}

TEST_CASE("generated words round-trip through the explicit kind")
{
    auto file = scratch("tau.json");
    auto gen = cli({"generate", "--word", tau, "--n", "3000", "--format", "json", "--out", file.string()});
    REQUIRE(gen.code == 0);
    for (const std::string mode : {"additive", "abelian"}) {
        auto a = cli({"complexity", "--word", tau, "--n", "3000", "--nmax", "64", "--mode", mode, "--format", "csv"});
        auto b = cli({"complexity", "--word", file.string(), "--n", "3000", "--nmax", "64", "--mode", mode,
                      "--format", "csv"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("complexity")
{
    auto r = cli({"complexity", "--word", champernowne, "--n", "65536", "--nmax", "10", "--mode", "abelian"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(j.at("profile").at("rows").at(n - 1).at("size") == n + 1);
    CHECK(j.at("verdicts").at("passed") == true);

    auto constant = cli({"complexity", "--word", R"({"kind":"periodic","pattern":[7]})", "--n", "100",
                         "--nmax", "20", "--format", "csv"});
    CHECK(constant.code == 0);
    std::istringstream rows(constant.out);
    std::string line;
    std::getline(rows, line);
    CHECK(line == "n,size,min_value,max_value");
    for (int n = 1; std::getline(rows, line); ++n)
        CHECK(line == std::to_string(n) + ",1," + std::to_string(7 * n) + "," + std::to_string(7 * n));

    auto mu = scratch("mu.json");
    write(mu, R"({"images":{"0":[1,0],"1":[0,2]}})");
    auto custom = cli({"complexity", "--word", champernowne, "--n", "500", "--nmax", "10", "--mode",
                       "mu:" + mu.string()});
    CHECK(custom.code == 0);
    CHECK(Json::parse(custom.out).at("mu") == "custom");
}

TEST_CASE("find-power")
{
    auto r = cli({"find-power", "--word", R"({"kind":"periodic","pattern":[0,1]})", "--k", "4"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("t") == 0);
    CHECK(j.at("s") == 2);
    CHECK(j.at("k") == 4);
    CHECK(j.at("value") == Json::parse("[1]"));
    CHECK(j.at("verified") == true);

    auto none = cli({"find-power", "--word", dekking, "--mode", "abelian", "--k", "4", "--n", "10000"});
    CHECK(none.code == 0);
    auto n = Json::parse(none.out);
    CHECK(n.at("status") == "not_found");
    CHECK(n.at("limits").at("n") == 10000);

    auto mu = scratch("zero.json");
    write(mu, R"({"images":{"0":[0],"1":[0]}})");
    auto z = Json::parse(cli({"find-power", "--word", champernowne, "--mode", "mu:" + mu.string(), "--k", "3"}).out);
    CHECK(z.at("t") == 0);
    CHECK(z.at("s") == 1);
    CHECK(z.at("value") == Json::parse("[0]"));

    auto v = Json::parse(cli({"find-power", "--word", tau, "--k", "5", "--method", "vdw", "--n", "5000"}).out);
    CHECK(v.at("status") == "found");
    CHECK(v.at("method") == "vdw");

    auto l = Json::parse(cli({"find-power", "--word", tau, "--k", "3", "--limits", R"({"n":50,"s_max":1})"}).out);
    CHECK(l.at("limits").at("s_max") == 1);
}

TEST_CASE("retry exhaustion exits with 1")
{
    auto r = cli({"find-power", "--word", R"({"kind":"periodic","pattern":[0,1,1]})", "--k", "2", "--method",
                  "vdw", "--modulus", "1", "--limits", R"({"retry_cap":0})"});
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out).at("status") == "retry_exhausted");
}

TEST_CASE("simultaneous")
{
    auto r = cli({"simultaneous", "--word", R"({"kind":"periodic","pattern":[0,1]})", "--word",
                  R"({"kind":"periodic","pattern":[0,0,1]})", "--k", "2", "--n", "2000"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("status") == "found");
    CHECK(j.at("value").size() == 2);
}

TEST_CASE("search and resume")
{
    auto one = Json::parse(cli({"search", "--alphabet", "0"}).out);
    CHECK(one.at("length") == 1);
    auto two = Json::parse(cli({"search", "--alphabet", "0,1"}).out);
    CHECK(two.at("exhausted") == true);
    CHECK(two.at("longest") == Json::parse("[0,1,0]"));

    auto five = Json::parse(cli({"search", "--alphabet", "[0,1,2,3,4]", "--max-nodes", "2000"}).out);
    CHECK(five.at("exhausted") == false);

    auto full = Json::parse(cli({"search", "--alphabet", "0,2,3"}).out);
    auto cp = scratch("search.cp");
    std::filesystem::remove(cp);
    Json last;
    for (int i = 0; i < 10000; ++i) {
        last = Json::parse(cli({"search", "--alphabet", "0,2,3", "--max-nodes", "3", "--checkpoint", cp.string()}).out);
        if (!std::filesystem::exists(cp))
            break;
    }
    CHECK(last.at("exhausted") == true);
    CHECK(last.at("nodes") == full.at("nodes"));
    CHECK(last.at("longest") == full.at("longest"));

    write(cp, "not json");
    CHECK(cli({"search", "--alphabet", "0,1", "--checkpoint", cp.string()}).code == 2);
    std::filesystem::remove(cp);
}

TEST_CASE("exit codes for bad usage")
{
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"generate", "--n", "4"}).code == 2);
    CHECK(cli({"generate", "--word", "{\"kind\":\"nope\"}", "--n", "4"}).code == 2);
    CHECK(cli({"generate", "--word", champernowne, "--n", "0"}).code == 2);
    CHECK(cli({"find-power", "--word", champernowne, "--k", "1"}).code == 2);
    CHECK(cli({"find-power", "--word", champernowne, "--method", "magic"}).code == 2);
    CHECK(cli({"find-power", "--word", champernowne, "--modulus", "two"}).code == 2);
    CHECK(cli({"complexity", "--word", champernowne, "--mode", "mu:/nonexistent.json"}).code == 2);
    CHECK(cli({"search", "--alphabet", "0,x"}).code == 2);
    CHECK(cli({"generate", "--word", R"({"kind":"explicit","letters":[1,2]})", "--n", "3"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("output is deterministic")
{
    std::vector<std::string> args{"find-power", "--word", tau, "--k", "4", "--method", "vdw", "--n", "3000"};
    CHECK(cli(args).out == cli(args).out);
    std::vector<std::string> cx{"complexity", "--word", champernowne, "--n", "4000", "--nmax", "64"};
    CHECK(cli(cx).out == cli(cx).out);
}

TEST_CASE("verify")
{
    auto quick = cli({"verify", "--quick"});
    CHECK(quick.code == 0);
    CHECK(quick.out.find("FAIL") == std::string::npos);
    CHECK(quick.out.find("11/11 criteria passed") != std::string::npos);
    CHECK(quick.out == cli({"verify", "--quick"}).out);

    // 0 -> 01 in place of 0 -> 011 breaks the missing-abelian-4th-power property.
    auto broken = cli({"verify", "--quick", "--dekking", R"({"kind":"morphic","rules":{"0":[0,1],"1":[0,0,0,1]},"seed":0})"});
    CHECK(broken.code == 1);
    CHECK(broken.out.find("FAIL [3]") != std::string::npos);
}
