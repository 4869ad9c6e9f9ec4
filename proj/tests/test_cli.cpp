#include "commands.hpp"

#include "derivsamp/error.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <tuple>

using namespace derivsamp;
using namespace derivsamp::cli;

namespace {

std::pair<int, std::string> run_cfg(RunConfig cfg) {
    std::ostringstream out, err;
    const int rc = run(cfg, out, err);
    return {rc, out.str()};
}

RunConfig make(std::string sub) {
    RunConfig c;
    c.subcommand = std::move(sub);
    return c;
}

}  // namespace

TEST_CASE("W literals") {
    CHECK(parse_w("4") == 4.0);
    CHECK(parse_w("2.5") == 2.5);
    CHECK(parse_w("sqrt(7)") == std::sqrt(7.0));
    CHECK(parse_w("3*sqrt(7)") == 3 * std::sqrt(7.0));
    CHECK(parse_w(" 10 * sqrt(7) ") == 10 * std::sqrt(7.0));
    CHECK_THROWS_AS((void)parse_w("3sqrt(7)"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_w("-1"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_w("x"), InvalidArgument);
}

TEST_CASE("every CSV starts with the run header") {
    const auto [rc, out] = run_cfg(make("tables"));
    CHECK(rc == kOk);
    CHECK(out.rfind("# derivsamp v1,subcommand=tables,", 0) == 0);
    CHECK(out.find("\n1,7,4,1,-154,666,-154,1\n") != std::string::npos);
    CHECK(out.find("\n2,3,1,1,-1\n") != std::string::npos);
    CHECK(out.find("\n1,3,0,1\n") != std::string::npos);
}

TEST_CASE("check exit codes") {
    RunConfig c = make("check");
    CHECK(run_cfg(c).first == kOk);
    c.m = 4;
    CHECK(run_cfg(c).first == kNegative);
    c.m = 5;
    c.a = "1/2";
    const auto [rc, out] = run_cfg(c);
    CHECK(rc == kNegative);
    CHECK(out.find("cis,0") != std::string::npos);
    c.m = 2;
    CHECK(run_cfg(c).first == kUsage);
    c.subcommand = "frobnicate";
    CHECK(run_cfg(c).first == kUsage);
}

TEST_CASE("approx refuses a W that samples a jump") {
    RunConfig c = make("approx");
    c.signal = "f3";
    c.W = {"4"};
    CHECK(run_cfg(c).first == kUsage);
    c.W = {"3*sqrt(7)"};
    CHECK(run_cfg(c).first == kOk);
}

TEST_CASE("approx and tau report fits") {
    RunConfig c = make("approx");
    c.W = {"4", "8", "16", "32"};
    auto [rc, out] = run_cfg(c);
    CHECK(rc == kOk);
    CHECK(out.find("W,error,log10W,log10err\n") != std::string::npos);
    CHECK(out.find("# fit,rate=") != std::string::npos);
    RunConfig t = make("tau");
    t.signal = "f3";
    t.r = 1;
    std::tie(rc, out) = run_cfg(t);
    CHECK(rc == kOk);
    CHECK(out.find("# fit,exponent=") != std::string::npos);
}

TEST_CASE("scan always succeeds and bounds reports constants") {
    RunConfig s = make("scan");
    s.m_max = 6;
    s.rho_max = 3;
    CHECK(run_cfg(s).first == kOk);
    RunConfig b = make("bounds");
    b.trials = 10;
    const auto [rc, out] = run_cfg(b);
    CHECK(rc == kOk);
    CHECK(out.find("violations,0") != std::string::npos);
}

TEST_CASE("identical configurations give identical bytes") {
    RunConfig c = make("kernel-dump");
    c.m = 4;
    c.a = "1/2";
    CHECK(run_cfg(c).second == run_cfg(c).second);
}
