#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "exact.hpp"
#include "ldaha/cli.hpp"
#include "ldaha/io.hpp"

using namespace ldaha;
using json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "ldaha");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

std::string desk_file() {
    return write_temp("P0.json", R"({"d": 4, "q": [0.5, 0], "s": [5, 0], "sstar": [3, 0],
                                    "r1": [0.66666666666666663, 0], "theta0": [0, 0], "theta0star": [0, 0]})");
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

// h* solves c_1 = 1 with (h, s*) replaced by (h*, s) in the closed form of c_1.
exact::Q desk_hstar() {
    using exact::pow;
    const exact::Desk e;
    const exact::Q c1_over_h = (1 - e.q) * (1 - e.s * pow(e.q, e.d + 2)) * (e.r1 - e.s * e.q) * (e.r2 - e.s * e.q) /
                               (e.s * pow(e.q, e.d) * (1 - e.s * e.q * e.q) * (1 - e.s * pow(e.q, 3)));
    return 1 / c1_over_h;
}

class EnvTol {
  public:
    explicit EnvTol(const char *value) { setenv("LDAHA_TOL", value, 1); }
    ~EnvTol() { unsetenv("LDAHA_TOL"); }
};

}  // namespace

TEST(Cli, VerifyDeskPointPasses) {
    const Result r = run_cli({"verify", "--params", desk_file()});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    const auto ls = lines(r.out);
    ASSERT_GT(ls.size(), 100u);
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) EXPECT_EQ(ls[i].rfind("PASS", 0), 0u) << ls[i];
    EXPECT_NE(ls.back().find("checks passed"), std::string::npos);
}

TEST(Cli, VerifyFailsWithImpossibleTolerance) {
    const Result r = run_cli({"verify", "--params", desk_file(), "--tol", "1e-30"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, EnvironmentToleranceAndOverride) {
    {
        EnvTol env("1e-30");
        EXPECT_EQ(run_cli({"verify", "--params", desk_file()}).code, 1);
        EXPECT_EQ(run_cli({"verify", "--params", desk_file(), "--tol", "1e-9"}).code, 0);
    }
    {
        EnvTol env("not-a-number");
        EXPECT_EQ(run_cli({"verify", "--params", desk_file()}).code, 2);
    }
}

TEST(Cli, EmitAstarInCIsDiagonalWithDualEigenvalues) {
    const Result r = run_cli({"emit", "--op", "Astar", "--basis", "C", "--params", desk_file()});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.begin().key(), "rows");
    const CMatrix m = matrix_from_json(j);
    ASSERT_EQ(m.rows(), 8u);
    ASSERT_EQ(m.cols(), 8u);

    const exact::Desk e;
    const exact::Q hs = desk_hstar();
    // C_i^- carries theta*_i, C_i^+ carries theta*_{i+1}: pattern (1, 2, 2, 2, 1).
    const int index[8] = {0, 1, 1, 2, 2, 3, 3, 4};
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) {
            if (a != b) {
                EXPECT_EQ(m(a, b), CScalar(0.0)) << a << "," << b;
                continue;
            }
            const int i = index[a];
            const exact::Q want = hs * (1 - exact::pow(e.q, i)) * (1 - e.ss * exact::pow(e.q, i + 1)) / exact::pow(e.q, i);
            EXPECT_NEAR(std::abs(m(a, a) - exact::to_c(want)), 0.0, 1e-12 * (1 + std::abs(exact::to_double(want))))
                << "theta*_" << i;
        }
}

TEST(Cli, EmitTransitionCsvRoundTrips) {
    const std::string out = ::testing::TempDir() + "trans.csv";
    const Result r = run_cli({"emit", "--from", "C", "--to", "Btilde", "--format", "csv", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(out);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const CMatrix got = matrix_from_csv(text);
    const CMatrix want = transition_matrix(derive_inputs(desk_point()), BasisId::C, BasisId::Btilde);
    ASSERT_EQ(got.rows(), want.rows());
    EXPECT_EQ(got.entries(), want.entries());
}

TEST(Cli, EmitUsageErrors) {
    EXPECT_EQ(run_cli({"emit"}).code, 2);
    EXPECT_EQ(run_cli({"emit", "--op", "A"}).code, 2);
    EXPECT_EQ(run_cli({"emit", "--op", "Bogus", "--basis", "C"}).code, 2);
    EXPECT_EQ(run_cli({"emit", "--op", "A", "--basis", "Nowhere"}).code, 2);
    EXPECT_EQ(run_cli({"emit", "--from", "C", "--to", "C"}).code, 2);
    EXPECT_EQ(run_cli({"emit", "--op", "A", "--basis", "C", "--from", "C", "--to", "B"}).code, 2);
    EXPECT_EQ(run_cli({"emit", "--op", "A", "--basis", "C", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--params", ::testing::TempDir() + "missing.json"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, AppendixEmitsT1AtZeroAsFour) {
    const Result r = run_cli({"appendix-d4", "--params", desk_file()});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["matrices"].size(), 76u);
    bool found = false;
    for (const auto &m : j["matrices"]) {
        if (m["name"] != "t1(0)") continue;
        found = true;
        const CMatrix t = matrix_from_json(m["matrix"]);
        ASSERT_EQ(t.rows(), 1u);
        ASSERT_EQ(t.cols(), 1u);
        EXPECT_NEAR(t(0, 0).real(), 4.0, 1e-12);
        EXPECT_NEAR(t(0, 0).imag(), 0.0, 1e-12);
    }
    EXPECT_TRUE(found);
}

TEST(Cli, AppendixNeedsDiameterFour) {
    const std::string five = write_temp("d5.json", R"({"d": 5, "q": 0.6, "s": 2, "sstar": 3, "r1": 0.7})");
    EXPECT_EQ(run_cli({"appendix-d4", "--params", five}).code, 2);
    EXPECT_EQ(run_cli({"appendix-d4", "--d", "5"}).code, 2);
    EXPECT_EQ(run_cli({"appendix-d4", "--seed", "3", "--format", "csv"}).code, 0);
}

TEST(Cli, ValidateFlagsBadParameters) {
    const std::string bad = write_temp("q1.json", R"({"d": 4, "q": 1, "s": 5, "sstar": 3, "r1": 0.5})");
    const Result r = run_cli({"validate", "--params", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("invalid"), std::string::npos);
    const Result ok = run_cli({"validate", "--params", desk_file(), "--format", "json"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(json::parse(ok.out)["report"]["passed"].get<bool>());
}

TEST(Cli, SweepIsDeterministicAcrossWorkerCounts) {
    const Result a = run_cli({"sweep", "--n", "6", "--seed", "40", "--threads", "1"});
    const Result b = run_cli({"sweep", "--n", "6", "--seed", "40", "--threads", "3"});
    const Result c = run_cli({"sweep", "--n", "6", "--seed", "40", "--threads", "1"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_NE(a.out.find("6 samples, 0 failing checks"), std::string::npos);
}

TEST(Cli, SweepCyclesDiameters) {
    const Result r = run_cli({"sweep", "--n", "2", "--d", "5", "--tol", "1e-30"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("(d=5 seed 0)"), std::string::npos);
    EXPECT_NE(r.out.find("(d=5 seed 1)"), std::string::npos);
    EXPECT_EQ(r.out.find("(d=3"), std::string::npos);
}
