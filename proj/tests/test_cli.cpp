// Drives the installed CLI binary end to end: CSV round-trips, the fig1
// golden regression, JSON envelopes, and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "rmt/table.hpp"

namespace {
std::string g_cli;
std::string g_golden;

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string tmp = "/tmp/rmt_cli_out_XXXXXX";
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int rc = pclose(pipe);
    (void)tmp;
    return {WEXITSTATUS(rc), out};
}
} // namespace

TEST_CASE("density table normalizes and round-trips") {
    RunResult r = run_cli("density --ensemble gue --n 8 --scaling bulk --grid -1:1:201");
    REQUIRE(r.status == 0);
    std::istringstream in(r.out);
    rmt::DensityTable t = rmt::DensityTable::from_csv(in);
    REQUIRE(t.rows() == 201);
    // trapezoid integral over (-1,1) carries most of the mass at N = 8; the
    // soft-edge tails account for the remainder
    CHECK(t.trapezoid_exact() == doctest::Approx(8.0).epsilon(0.02));
    // bit-exact round-trip at 17 significant digits
    std::string again = t.to_csv();
    std::istringstream in2(again);
    rmt::DensityTable t2 = rmt::DensityTable::from_csv(in2);
    for (std::size_t i = 0; i < t.rows(); ++i) {
        CHECK(t.abscissae[i] == t2.abscissae[i]);
        CHECK(t.exact[i] == t2.exact[i]);
    }
}

TEST_CASE("deterministic output for a fixed config") {
    std::string args = "mc --ensemble gue --n 6 --samples 50 --seed 7 --bins 12";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("x,count,density,stderr", 0) == 0);
}

TEST_CASE("fig1 reproduces the golden table to 1e-12") {
    RunResult r = run_cli("fig1");
    REQUIRE(r.status == 0);
    std::ifstream gf(g_golden + "/fig1.csv");
    REQUIRE(gf.good());
    std::istringstream fresh_in(r.out);
    rmt::DensityTable fresh = rmt::DensityTable::from_csv(fresh_in);
    rmt::DensityTable golden = rmt::DensityTable::from_csv(gf);
    REQUIRE(fresh.rows() == 161);
    REQUIRE(golden.rows() == 161);
    for (std::size_t i = 0; i < fresh.rows(); ++i) {
        CHECK(std::fabs(fresh.exact[i] - golden.exact[i]) < 1e-12);
        CHECK(std::fabs(fresh.column("asymptotic")[i] -
                        golden.column("asymptotic")[i]) < 1e-12);
    }
}

TEST_CASE("moments command") {
    RunResult r = run_cli("moments --ensemble goe --n 8 --a x2 --format json");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    // (N+1)/4 = 2.25
    CHECK(double(j["results"]["statistic"]) == doctest::Approx(2.25).epsilon(1e-6));
    CHECK(j.contains("tool_version"));
    CHECK(j["warnings"].is_array());
}

TEST_CASE("match-report emits the JSON schema") {
    RunResult r = run_cli("match-report --ensemble gue --n 64 --format json");
    REQUIRE(r.status == 0);
    for (const char* key : {"ensemble", "xi_grid", "n_grid", "residuals", "fits",
                            "known_tensions"})
        CHECK(r.out.find(key) != std::string::npos);
}

TEST_CASE("validation failures exit with status 2") {
    CHECK(run_cli("density --ensemble goe --n 5").status == 2);
    CHECK(run_cli("density --ensemble lue --n 4 --alpha -2").status == 2);
    CHECK(run_cli("density --ensemble gue --n 4 --grid 1:0:10").status == 2);
    CHECK(run_cli("mc --ensemble lue --n 4 --alpha 0.3 --samples 5").status == 2);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <cli-binary> <golden-dir>\n");
        return 1;
    }
    g_cli = argv[1];
    g_golden = argv[2];
    doctest::Context ctx;
    return ctx.run();
}
