#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "teichcurve/bers_map.hpp"
#include "teichcurve/cli.hpp"

namespace teichcurve::cli {
namespace {

namespace fs = std::filesystem;
using teichcurve::testing::C;
using teichcurve::testing::pi;

const std::string kData = TEICHCURVE_TEST_DATA;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("teichcurve_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = (dir_ / name).string();
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
  static std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string moebius_csv(C w, int count) {
  return format_map_csv(sample_moebius(MoebiusDisc(w), count).samples());
}

TEST_F(CliTest, RatioCheckPasses) {
  const auto r = invoke({"ratio-check", "--coeffs", kData + "/alpha_1_2i_0_5.json"});
  EXPECT_EQ(r.code, kPass) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "PASS");
  EXPECT_EQ(doc["input_digest"].size(), 1u);
  EXPECT_NEAR(doc["results"]["ratio"].get<double>(), 2.0 * pi / 3.0, 1e-12);
}

TEST_F(CliTest, RatioCheckZeroIsDegenerate) {
  EXPECT_EQ(invoke({"ratio-check", "--coeffs", kData + "/zero.json"}).code, kDegenerateInput);
}

TEST_F(CliTest, RatioCheckFailsAtImpossibleTolerance) {
  const auto r = invoke({"ratio-check", "--coeffs", kData + "/alpha_1_2i_0_5.json", "--quad-tol", "1e-30"});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "FAIL");
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(invoke({}).code, kInputError);
  EXPECT_EQ(invoke({"ratio-check"}).code, kInputError);
  EXPECT_EQ(invoke({"ratio-check", "--coeffs", path("missing.json")}).code, kInputError);
  EXPECT_EQ(invoke({"ratio-check", "--coeffs", write("bad.json", "{\"model\": 3}")}).code, kInputError);
  EXPECT_EQ(invoke({"derivative-map", "--coeffs", kData + "/alpha_1.json", "--target", "sphere"}).code,
            kInputError);
}

TEST_F(CliTest, DerivativeMapCircle) {
  const auto out = path("c.json");
  const auto r = invoke({"derivative-map", "--coeffs", kData + "/alpha_1_2i_0_5.json", "--out", out});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto file = parse_coeffs_file(read(out));
  EXPECT_EQ(file.model, "circle-field");
  EXPECT_EQ(file.start_index, -4);
  ASSERT_EQ(file.coefficients.size(), 9u);
  const auto expect = d0_P(CuspFormCoeffs({C(1.0, 0.0), C(0.0, 2.0), C{}, C(5.0, 0.0)}));
  for (int n = -4; n <= 4; ++n) EXPECT_EQ(file.coefficients[n + 4], expect.c(n));
}

TEST_F(CliTest, DerivativeMapCurve) {
  const auto out = path("b.json");
  const auto r = invoke(
      {"derivative-map", "--coeffs", kData + "/alpha_1_2i_0_5.json", "--target", "curve", "--out", out});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto file = parse_coeffs_file(read(out));
  EXPECT_EQ(file.model, "disc-taylor");
  EXPECT_EQ(file.start_index, 2);
  ASSERT_TRUE(file.a.has_value());
  EXPECT_NEAR(file.a->real(), -1.0 / (4.0 * pi * pi), 1e-17);
  ASSERT_EQ(file.coefficients.size(), 3u);
  EXPECT_NEAR(file.coefficients[0].imag(), -2.0 / (32.0 * pi * pi), 1e-17);
}

TEST_F(CliTest, VerifySuites) {
  for (const std::string suite : {"chain", "dbar", "moebius-match", "all"}) {
    const auto r = invoke({"verify", "--coeffs", kData + "/alpha_1_2i_0_5.json", "--suite", suite});
    EXPECT_EQ(r.code, kPass) << suite << "\n" << r.out;
  }
  EXPECT_EQ(invoke({"verify", "--coeffs", kData + "/alpha_1.json", "--suite", "nope"}).code, kInputError);
}

TEST_F(CliTest, ReportsAreByteIdentical) {
  const std::vector<std::string> args{"verify", "--coeffs", kData + "/alpha_1_2i_0_5.json", "--suite", "all"};
  const auto a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.out, b.out);
  const auto rep = path("r.json");
  auto with_report = args;
  with_report.insert(with_report.begin(), {"--report", rep});
  const auto c = invoke(with_report);
  EXPECT_EQ(read(rep), c.out);
}

TEST_F(CliTest, LiftModes) {
  const auto map = write("m.csv", moebius_csv(C(0.3, 0.0), 1000));
  const auto lifted = path("u.csv");
  ASSERT_EQ(invoke({"lift", "--map", map, "--out", lifted}).code, kPass);
  const auto u = parse_map_csv(read(lifted));
  ASSERT_EQ(u.size(), 1001u);
  EXPECT_EQ(u.back().y, 1.0);
  const auto down = path("d.csv");
  ASSERT_EQ(invoke({"lift", "--map", lifted, "--mode", "descend", "--out", down}).code, kPass);
  EXPECT_EQ(read(down), read(map));
  EXPECT_EQ(invoke({"lift", "--map", map, "--mode", "roundtrip"}).code, kPass);
}

TEST_F(CliTest, LiftErrors) {
  const auto sparse = write("s.csv", "x,y\n0,0\n0.5,0.6\n");
  EXPECT_EQ(invoke({"lift", "--map", sparse}).code, kBranchAmbiguity);
  const auto backwards = write("b.csv", "x,y\n0,0\n0.25,0.3\n0.5,0.2\n0.75,0.7\n");
  EXPECT_EQ(invoke({"lift", "--map", backwards}).code, kInputError);
  EXPECT_EQ(invoke({"lift", "--map", write("h.csv", "a,b\n0,0\n")}).code, kInputError);
  EXPECT_EQ(invoke({"lift", "--map", sparse, "--mode", "hom-check"}).code, kInputError);
}

TEST_F(CliTest, HomCheck) {
  const auto m1 = write("m1.csv", moebius_csv(C(0.2, 0.0), 10000));
  const auto m2 = write("m2.csv", moebius_csv(C(0.0, 0.1), 10000));
  const auto r = invoke({"lift", "--map", m1, "--map2", m2, "--mode", "hom-check"});
  EXPECT_EQ(r.code, kPass) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["input_digest"].size(), 2u);
}

TEST_F(CliTest, QsCheck) {
  const auto id = write("id.csv", "x,y\n0,0\n0.25,0.25\n0.5,0.5\n0.75,0.75\n");
  const auto r = invoke({"qs-check", "--map", id});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["results"]["qs_lower_bound"].get<double>(), 1.0, 1e-12);
  const auto line = write("line.csv", "x,y\n0,0\n0.5,0.25\n1,1\n");
  const auto l = invoke({"qs-check", "--map", line, "--model", "line", "--probes", "200"});
  ASSERT_EQ(l.code, kPass) << l.err;
  EXPECT_GT(nlohmann::json::parse(l.out)["results"]["qs_lower_bound"].get<double>(), 1.0);
  EXPECT_EQ(invoke({"qs-check", "--map", id, "--probes", "0"}).code, kInputError);
}

TEST(Format, Doubles) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.33333333333333331");
}

TEST(Format, Sha256) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(CoeffsFileIo, RoundTripProperty) {
  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int trial = 0; trial < 100; ++trial) {
    CoeffsFile f;
    f.model = trial % 2 ? "uhp-cusp" : "disc-taylor";
    f.start_index = trial % 2 ? 1 : 2;
    for (int k = 0; k <= trial % 17; ++k) f.coefficients.emplace_back(u(rng), u(rng) * 1e-200);
    if (trial % 4 == 0) f.a = C(u(rng), u(rng));
    const auto back = parse_coeffs_file(format_coeffs_file(f));
    EXPECT_EQ(back.model, f.model);
    EXPECT_EQ(back.start_index, f.start_index);
    EXPECT_EQ(back.coefficients, f.coefficients);
    EXPECT_EQ(back.a, f.a);
  }
}

TEST(CoeffsFileIo, Rejects) {
  EXPECT_THROW(parse_coeffs_file("not json"), ParseError);
  EXPECT_THROW(parse_coeffs_file(R"({"model": "uhp-cusp"})"), ParseError);
  EXPECT_THROW(parse_coeffs_file(R"({"model": "uhp-cusp", "start_index": 2, "coefficients": []})"), ParseError);
  EXPECT_THROW(parse_coeffs_file(R"({"model": "uhp-cusp", "coefficients": [[1]]})"), ParseError);
  EXPECT_THROW(parse_coeffs_file(R"({"model": "torus", "coefficients": []})"), ParseError);
  EXPECT_THROW(to_cusp_form(parse_coeffs_file(R"({"model": "disc-taylor", "coefficients": []})")), ParseError);
}

TEST(MapCsv, RoundTripAndErrors) {
  const std::vector<MapSample> s{{0.0, 0.0}, {0.1, 0.30000000000000004}, {0.7, 0.9}};
  const auto back = parse_map_csv(format_map_csv(s));
  ASSERT_EQ(back.size(), s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    EXPECT_EQ(back[k].x, s[k].x);
    EXPECT_EQ(back[k].y, s[k].y);
  }
  EXPECT_THROW(parse_map_csv(""), ParseError);
  EXPECT_THROW(parse_map_csv("x,y\n0;0\n"), ParseError);
  EXPECT_THROW(parse_map_csv("x,y\n0,0abc\n"), ParseError);
}

}  // namespace
}  // namespace teichcurve::cli
