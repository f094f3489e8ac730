#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include <polycauchy/cli.hpp>

using namespace polycauchy;

namespace
{

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli_dispatch(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("number")
{
    CHECK(run({"number", "--family", "polycauchy", "--n", "2", "--k", "1"}).out == "-1/6\n");
    CHECK(run({"number", "--family", "cauchy", "--n", "3"}).out == "1/4\n");
    CHECK(run({"number", "--family", "bernoulli", "--n", "12"}).out == "-691/2730\n");
    CHECK(run({"number", "--family", "bernoulli", "--n", "1", "--r", "2"}).out == "-1\n");
    CHECK(run({"number", "--family", "norlund", "--n", "2"}).out == "5/6\n");
    CHECK(run({"number", "--family", "stirling1", "--n", "4", "--m", "2"}).out == "11\n");
    CHECK(run({"number", "--family", "tnum", "--n", "1", "--r", "2", "--k", "1"}).out == "3/2\n");
    CHECK(run({"number", "--family", "polycauchy", "--n", "1", "--k", "-3"}).out == "8\n");
}

TEST_CASE("number usage errors")
{
    const auto missing_k = run({"number", "--family", "polycauchy", "--n", "2"});
    CHECK(missing_k.status == 2);
    CHECK(missing_k.err.find("--k") != std::string::npos);
    CHECK(run({"number", "--family", "nope", "--n", "2"}).status == 2);
    CHECK(run({"number", "--family", "cauchy"}).status == 2);
    CHECK(run({"number", "--family", "polycauchy", "--n", "2", "--k", "17"}).status == 2);
    CHECK(run({"number", "--family", "cauchy", "--n", "-1"}).status == 2);
    CHECK(run({"number", "--family", "cauchy", "--n", "abc"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    const auto help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("poly")
{
    CHECK(run({"poly", "--n", "3", "--k", "1"}).out == "-x^3 - 3/2*x^2 + 1/4\n");
    CHECK(run({"poly", "--n", "1", "--k", "0", "--basis", "rising"}).out == "0: 1\n1: -1\n");
    const auto bern = run({"poly", "--n", "2", "--k", "1", "--basis", "bernoulli", "--r", "1"});
    CHECK(bern.status == 0);
    CHECK(bern.out.find("2: 1\n") != std::string::npos);
    CHECK(run({"poly", "--n", "2", "--k", "1", "--basis", "frobenius", "--r", "1", "--lambda", "-1"}).status == 0);
    CHECK(run({"poly", "--n", "2", "--k", "1", "--basis", "frobenius", "--r", "1", "--lambda", "1"}).status == 2);
    CHECK(run({"poly", "--n", "2", "--k", "1", "--basis", "frobenius", "--r", "1", "--lambda", "x"}).status == 2);
    CHECK(run({"poly", "--n", "2", "--k", "1", "--basis", "bernoulli"}).status == 2);
    CHECK(run({"poly", "--n", "2"}).status == 2);
}

TEST_CASE("table")
{
    CHECK(run({"table", "--family", "cauchy", "--rows", "4"}).out == "n,value\n0,1\n1,1/2\n2,-1/6\n3,1/4\n");
    const auto j = nlohmann::json::parse(
        run({"table", "--family", "polycauchy", "--k", "2", "--rows", "3", "--format", "json"}).out);
    CHECK(j["family"] == "polycauchy");
    CHECK(j["params"]["k"] == 2);
    CHECK(j["values"] == nlohmann::json::array({"1", "1/4", "-5/36"}));
    CHECK(run({"table", "--family", "cauchy", "--rows", "0"}).out == "n,value\n");
    CHECK(run({"table", "--family", "cauchy", "--rows", "3", "--format", "xml"}).status == 2);
}

TEST_CASE("series")
{
    CHECK(run({"series", "lif(0; t)", "--order", "3", "--egf"}).out == "1 + t + t^2 + t^3\n");
    CHECK(run({"series", "t/log1p(t)", "--order", "4"}).out == "1 + 1/2*t - 1/12*t^2 + 1/24*t^3 - 19/720*t^4\n");
    const auto j = nlohmann::json::parse(run({"series", "t/log1p(t)", "--order", "4", "--egf", "--format", "json"}).out);
    CHECK(j["order_bound"] == 4);
    CHECK(j["egf"] == true);
    CHECK(j["coefficients"][4] == nlohmann::json::array({"-19/30"}));
    const auto poly = run({"series", "exp(x*t)", "--order", "2", "--egf"});
    CHECK(poly.out == "1 + x*t + x^2*t^2\n");

    const auto bad = run({"series", "1 + foo", "--order", "3"});
    CHECK(bad.status == 2);
    CHECK(bad.err == "error: unknown identifier 'foo'\n  1 + foo\n      ^^^\n");
    CHECK(run({"series", "1/t", "--order", "3"}).status == 2);
    CHECK(run({"series", "t", "--order", "65"}).status == 2);
    CHECK(run({"series", "t"}).status == 2);
}

TEST_CASE("verify")
{
    const auto ok = run({"verify", "--only", "T3", "--nmax", "5", "--report", "json"});
    CHECK(ok.status == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["failed"] == 0);
    CHECK(j["total"] == 30);

    const auto text = run({"verify", "--only", "T3,E67", "--nmax", "3", "--kmin", "0", "--kmax", "1"});
    CHECK(text.status == 0);
    CHECK(text.out.find("PASS T3 n=0 k=0") != std::string::npos);
    CHECK(text.out.find("PASS E67 n=3 k=1") != std::string::npos);
    CHECK(text.out.find("failed: 0") != std::string::npos);

    const auto flipped = run({"verify", "--only", "E55_LIF1", "--nmax", "3", "--inject-sign-flip"});
    CHECK(flipped.status == 1);
    CHECK(flipped.out.find("FAIL E55_LIF1") != std::string::npos);

    CHECK(run({"verify", "--only", "T99"}).status == 2);
    CHECK(run({"verify", "--nmax", "65"}).status == 2);
    CHECK(run({"verify", "--kmin", "3", "--kmax", "1"}).status == 2);
    CHECK(run({"verify", "--report", "yaml"}).status == 2);
}
