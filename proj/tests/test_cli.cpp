#include "commands.hpp"
#include "gfc/serialization.hpp"

#include <doctest.h>

#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = gfc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate json") {
    auto r = run({"enumerate", "-p", "2", "-n", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = gfc::json::parse(r.out);
    CHECK(j["genus"] == 5);
    CHECK(j["ranks"][0]["count"] == 10);
    CHECK(j["ranks"][1]["count"] == 10);
    CHECK(j["ranks"][1]["quotient_genus"] == 2);
    CHECK(j["ranks"][2]["count"] == 0);
}

TEST_CASE("quotient") {
    auto r = run({"quotient", "-p", "2", "-n", "4", "--k", "a1*a2", "--lambda", "3", "7", "--samples", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quotient genus 3") != std::string::npos);
    auto j = run({"quotient", "-p", "3", "-n", "3", "--k", "a1*a2^2", "--lambda", "2,1", "--format", "json"});
    REQUIRE(j.code == 0);
    CHECK(gfc::json::parse(j.out)["verification"]["pass"] == true);
}

TEST_CASE("classify footer") {
    auto r = run({"classify", "-p", "2", "-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hyperelliptic-Z2^3: 10, non-hyperelliptic-Z2^3: 5") != std::string::npos);
    CHECK(r.out.find("curves: 20") != std::string::npos);
}

TEST_CASE("moduli") {
    auto r = run({"moduli", "-n", "4", "--lambda", "3", "7", "--delta", "1/3", "7/3", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = gfc::json::parse(r.out);
    CHECK(j["orbit_size"] == 120);
    CHECK(j["exact"] == true);
    CHECK(j["equivalent"] == true);
    auto neg = run({"moduli", "-n", "3", "--lambda", "-1"});
    CHECK(neg.code == 0);
    CHECK(neg.out.find("orbit size 3") != std::string::npos);
}

TEST_CASE("humbert demo and verify") {
    CHECK(run({"humbert-demo", "--lambda", "3", "7"}).code == 0);
    CHECK(run({"verify", "-p", "2", "-n", "5", "--samples", "10"}).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == gfc::cli::kInvalid);
    CHECK(run({"enumerate", "-p", "4", "-n", "3"}).code == gfc::cli::kInvalid);
    CHECK(run({"quotient", "-p", "2", "-n", "4", "--lambda", "3", "3", "--k", "a1*a2"}).code == gfc::cli::kInvalid);
    auto nf = run({"quotient", "-p", "2", "-n", "4", "--k", "a1*a2,a3*a4"});
    CHECK(nf.code == gfc::cli::kNotFree);
    CHECK(nf.err.find("witness") != std::string::npos);
    CHECK(run({"moduli", "-n", "9"}).code == gfc::cli::kResource);
    CHECK(run({"enumerate", "-p", "2", "-n", "4", "--format", "xml"}).code == gfc::cli::kInvalid);
}

}
