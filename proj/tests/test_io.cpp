#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "ldaha/io.hpp"
#include "ldaha/module_w.hpp"

using namespace ldaha;
using json = nlohmann::ordered_json;

namespace {

std::string temp_path(const std::string &name) { return ::testing::TempDir() + name; }

void write_file(const std::string &path, const std::string &text) { std::ofstream(path) << text; }

}  // namespace

TEST(Scalar, NumberOrPair) {
    EXPECT_EQ(scalar_from_json(json(2.5)), CScalar(2.5));
    EXPECT_EQ(scalar_from_json(json::parse("[1, -3]")), CScalar(1, -3));
    EXPECT_THROW(scalar_from_json(json::parse("[1, 2, 3]")), ParseError);
    EXPECT_THROW(scalar_from_json(json("x")), ParseError);
}

TEST(Params, DeskPointFileDerivesR2) {
    const std::string path = temp_path("desk.json");
    write_file(path, R"({"d": 4, "q": [0.5, 0], "s": 5, "sstar": 3, "r1": [0.6666666666666666, 0],
                        "theta0": 0, "theta0star": 0, "r2": 99})");
    const QRacahParams p = load_params(path);
    EXPECT_EQ(p.d, 4);
    // r2 = s s* q^{d+1} / r1 = 15/32 * 3/2; the stray "r2" key is not read.
    EXPECT_NEAR(std::abs(p.r2 - 45.0 / 64.0), 0.0, 1e-15);
    EXPECT_TRUE(validate(p).passed);
}

TEST(Params, ThetasDefaultToZero) {
    const QRacahParams p = params_from_json(json::parse(R"({"d": 5, "q": 0.6, "s": 2, "sstar": 3, "r1": 0.7})"));
    EXPECT_EQ(p.theta0, CScalar(0.0));
    EXPECT_EQ(p.theta0star, CScalar(0.0));
}

TEST(Params, RoundTrip) {
    const QRacahParams a = make_params(5, CScalar(0.4, 0.3), CScalar(2, 1), CScalar(-3, 0.5), CScalar(0.6, -0.8),
                                       CScalar(1, 1), CScalar(-2, 0));
    const QRacahParams b = params_from_json(json::parse(params_to_json(a).dump()));
    EXPECT_EQ(b.d, a.d);
    for (auto m : {&QRacahParams::q, &QRacahParams::s, &QRacahParams::sstar, &QRacahParams::r1, &QRacahParams::r2,
                   &QRacahParams::theta0, &QRacahParams::theta0star, &QRacahParams::r2_half})
        EXPECT_EQ(b.*m, a.*m);
}

TEST(Params, Errors) {
    EXPECT_THROW(params_from_json(json::parse(R"({"q": 0.5, "s": 5, "sstar": 3, "r1": 1})")), ParseError);
    EXPECT_THROW(params_from_json(json::parse(R"({"d": 4.5, "q": 0.5, "s": 5, "sstar": 3, "r1": 1})")), ParseError);
    EXPECT_THROW(params_from_json(json::parse(R"({"d": 2, "q": 0.5, "s": 5, "sstar": 3, "r1": 1})")), ParseError);
    EXPECT_THROW(params_from_json(json::parse("[1, 2]")), ParseError);
    EXPECT_THROW(load_params(temp_path("does-not-exist.json")), ParseError);
    const std::string bad = temp_path("bad.json");
    write_file(bad, "{\"d\": 4,");
    EXPECT_THROW(load_params(bad), ParseError);
}

TEST(MatrixJson, Layout) {
    const CMatrix m{{CScalar(1, 2), -3.0}};
    const json j = matrix_to_json(m);
    EXPECT_EQ(j["rows"], 1);
    EXPECT_EQ(j["cols"], 2);
    EXPECT_EQ(j["entries"], json::parse("[[1.0, 2.0], [-3.0, 0.0]]"));
}

TEST(MatrixJson, RoundTripIsExact) {
    const CMatrix m = operator_matrix(derive_inputs(desk_point()), OperatorId::A, BasisId::B);
    const CMatrix back = matrix_from_json(json::parse(matrix_to_json(m).dump()));
    ASSERT_EQ(back.rows(), m.rows());
    EXPECT_EQ(back.entries(), m.entries());
}

TEST(MatrixJson, RejectsWrongEntryCount) {
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows": 2, "cols": 2, "entries": [[1, 0]]})")), ParseError);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows": 1})")), ParseError);
}

TEST(MatrixCsv, CellFormat) {
    const CMatrix m{{CScalar(1, -2), 0.1}, {CScalar(-0.5, 0.25), 4.0}};
    EXPECT_EQ(matrix_to_csv(m), "1-2i,0.10000000000000001+0i\n-0.5+0.25i,4+0i\n");
}

TEST(MatrixCsv, RoundTripIsBitExact) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    std::vector<CScalar> e{CScalar(-0.0, -0.0), CScalar(5e-324, -1.7976931348623157e308)};
    while (e.size() < 30) e.emplace_back(std::ldexp(mant(rng), expo(rng)), std::ldexp(mant(rng), expo(rng)));
    const CMatrix m(5, 6, e);
    const CMatrix back = matrix_from_csv(matrix_to_csv(m));
    ASSERT_EQ(back.rows(), 5u);
    ASSERT_EQ(back.cols(), 6u);
    for (std::size_t k = 0; k < e.size(); ++k) {
        EXPECT_EQ(std::bit_cast<std::uint64_t>(back.entries()[k].real()), std::bit_cast<std::uint64_t>(e[k].real()));
        EXPECT_EQ(std::bit_cast<std::uint64_t>(back.entries()[k].imag()), std::bit_cast<std::uint64_t>(e[k].imag()));
    }
}

TEST(MatrixCsv, Errors) {
    EXPECT_THROW(matrix_from_csv("1+0i,2+0i\n3+0i\n"), ParseError);
    EXPECT_THROW(matrix_from_csv("1+0j\n"), ParseError);
    EXPECT_THROW(matrix_from_csv("abc\n"), ParseError);
}

TEST(ParameterArrayJson, RoundTrip) {
    const ModuleInputs in = derive_inputs(desk_point());
    const json j = parameter_array_to_json(in.pa);
    for (const char *key : {"diam", "theta", "theta_star", "varphi", "phi"}) EXPECT_TRUE(j.contains(key)) << key;
    const ParameterArray back = parameter_array_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.diam, 4);
    EXPECT_EQ(back.theta, in.pa.theta);
    EXPECT_EQ(back.theta_star, in.pa.theta_star);
    EXPECT_EQ(back.varphi, in.pa.varphi);
    EXPECT_EQ(back.phi, in.pa.phi);
}

TEST(ParameterArrayJson, LengthMismatch) {
    EXPECT_THROW(parameter_array_from_json(json::parse(
                     R"({"diam": 2, "theta": [0, 1], "theta_star": [0, 1, 2], "varphi": [1, 1], "phi": [1, 1]})")),
                 ParseError);
}

TEST(CliqueScalarsJson, MirrorsFields) {
    const ModuleInputs in = derive_inputs(desk_point());
    const json j = clique_scalars_to_json(in.cs);
    EXPECT_EQ(j["d"], 4);
    EXPECT_EQ(j["N"].size(), 4u);
    EXPECT_EQ(j["eps"].size(), 3u);
    EXPECT_EQ(j["tau"].size(), 4u);
    EXPECT_EQ(scalar_from_json(j["Csize"]), in.cs.Csize);
}

TEST(ValidationReportJson, CarriesEveryCheck) {
    const ValidationReport r = validate(make_params(4, 1.0, 5.0, 3.0, 2.0 / 3.0));
    const json j = validation_report_to_json(r);
    EXPECT_FALSE(j["passed"].get<bool>());
    EXPECT_EQ(j["checks"].size(), r.checks.size());
}
