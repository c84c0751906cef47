#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cevian/median.hpp"
#include "cevian/parse.hpp"
#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "cevian");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cevian::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ApplyExactFigureOne) {
  const CliRun r = run({"apply", "S[p=4/5,q=(2+4i)/3]", "(0,1,(7+8i)/10)", "--exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(93/3050 + 542/1525*i, 201/305 - 46/305*i, 1541/1525 + 908/1525*i)\n");
}

TEST(Cli, ApplyIdentityEchoes) {
  const CliRun r = run({"apply", "S[eta=1,eta'=1]", "(1/3, -2i, w)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1/3, -2*i, w)\n");
}

TEST(Cli, ApplyMedianMatchesLibrary) {
  const CliRun r = run({"apply", "M[02/01][p=4/5,q=(2+4i)/3]", "(0,1,(7+8i)/10)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["backend"], "exact");
  const auto d = cevian::parse_triple("(0,1,(7+8i)/10)");
  const cevian::PQPair<cevian::Cyc12> pq{cevian::Rational(4, 5), cevian::parse_cyc12("(2+4i)/3")};
  const auto expected = cevian::median_oracle(cevian::MedianLabel::parse("02/01"), d, cevian::from_pq(pq)(d));
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(cevian::parse_cyc12(j["triple"][k].get<std::string>()), expected[k]);
  }
}

TEST(Cli, ApplyApproxJson) {
  const CliRun r = run({"apply", "S[p=4/5,q=(2+4i)/3]", "(0,1,(7+8i)/10)", "--approx", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["triple"][0][0].get<double>(), 93.0 / 3050.0, 1e-15);
  EXPECT_NEAR(j["triple"][0][1].get<double>(), 542.0 / 1525.0, 1e-15);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"apply", "S[p=1"}).code, 2);
  const CliRun r = run({"apply", "S[p=1", "(0,1,2)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 5"), std::string::npos);
  EXPECT_EQ(run({"apply", "S[p=1,q=1]", "(0,1,2)"}).code, 2);
  EXPECT_EQ(run({"apply", "S[p=0,q=0]", "(0,1,2)", "--exact", "--approx"}).code, 2);
  EXPECT_EQ(run({"figure", "fig12"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Convert) {
  const CliRun r = run({"convert", "H[s=2]", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["alpha"], "4/3");
  EXPECT_EQ(j["beta"], "-2/3");
  EXPECT_EQ(j["gamma"], "1/3");
  EXPECT_EQ(j["p"], "4/5");
  EXPECT_EQ(j["q"], "2");
  EXPECT_EQ(j["commutes_with_real_affine"], true);
  const CliRun id = run({"convert", "S[eta=1,eta'=1]", "--format", "json"});
  EXPECT_TRUE(nlohmann::json::parse(id.out).contains("pq_error"));
}

TEST(Cli, MedianReport) {
  const CliRun r = run({"median", "00/01", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["fixed_point"]["kind"], "routh");
  EXPECT_EQ(j["fixed_point"]["pq"][0][0], "4/5");
  EXPECT_EQ(j["fixed_point"]["pq"][0][1], "2/3");
  const CliRun t = run({"median", "11/02", "--p", "1/3", "--q", "1/5", "--triple", "(0,1,i)"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("canonical 00/01 (point symmetric)"), std::string::npos);
  EXPECT_NE(t.out.find("triple ("), std::string::npos);
  EXPECT_EQ(run({"median", "00/00"}).code, 2);
  EXPECT_EQ(run({"median", "00/01", "--p", "1"}).code, 2);
}

TEST(Cli, Shape) {
  const CliRun r = run({"shape", "(1, w, w^2)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["shape"], "0");
  EXPECT_EQ(j["orientation_positive"], true);
  const CliRun inf = run({"shape", "(1, w^2, w)", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(inf.out)["shape"], "inf");
  const CliRun flat = run({"shape", "(0, i, -i)", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(flat.out)["class"], "degenerate-distinct");
}

TEST(Cli, OrbitOutputs) {
  const CliRun csv = run({"orbit", "steiner", "--samples", "6"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "t,vertex,re,im");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 1 + 18);
  const CliRun json = run({"orbit", "figure8", "--samples", "30", "--format", "json"});
  ASSERT_EQ(json.code, 0);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["class"], "descending");
  EXPECT_LE(j["tracing_residual"].get<double>(), 1e-10);
  const CliRun shape = run({"orbit", "smn", "--m", "2", "--n", "1", "--samples", "3", "--shape"});
  EXPECT_EQ(shape.out.substr(0, shape.out.find('\n')), "t,re,im");
  const CliRun svg = run({"orbit", "median-orbit", "--x", "1", "--format", "svg", "--samples", "12"});
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  const CliRun custom = run({"orbit", "custom", "--eta", "1:-2, -2:1, 0:w", "--eta-prime", "-1:2, 2:1, 0:w^2",
                          "--base", "(0,4,3+i)", "--label", "01/01", "--format", "json", "--samples", "30"});
  ASSERT_EQ(custom.code, 0);
  EXPECT_EQ(nlohmann::json::parse(custom.out)["class"], "descending");
  const CliRun lift = run({"orbit", "lift", "--gamma", "1:2", "--eps", "1", "--format", "json", "--samples", "9"});
  ASSERT_EQ(lift.code, 0);
  EXPECT_EQ(nlohmann::json::parse(lift.out)["class"], "ascending");
  EXPECT_EQ(run({"orbit", "lift", "--gamma", "2:1"}).code, 2);
  EXPECT_EQ(run({"orbit", "custom"}).code, 2);
}

TEST(Cli, OrbitIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"orbit", "figure8", "--samples", "99", "--format", "svg"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, VerifySuites) {
  const CliRun r = run({"verify", "fixedpoints"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  const CliRun ids = run({"verify", "identities", "--seed", "1", "--count", "5"});
  EXPECT_EQ(ids.code, 0);
  EXPECT_EQ(ids.out, run({"verify", "identities", "--seed", "1", "--count", "5"}).out);
  EXPECT_EQ(run({"verify", "table1", "--seed", "18446744073709551615", "--count", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "bclift", "--count", "5", "--format", "text"}).code, 0);
  EXPECT_EQ(run({"verify", "hajja", "--count", "5"}).code, 0);
  EXPECT_EQ(run({"verify", "nothing"}).code, 2);
}

TEST(Cli, FigureWritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "cevian_cli_figure_test";
  std::filesystem::remove_all(dir);
  const CliRun r = run({"figure", "fig6", "--out", dir.string(), "--samples", "30"});
  ASSERT_EQ(r.code, 0);
  for (const char* name : {"fig6a.csv", "fig6a.svg", "fig6b.csv", "fig6b.svg"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / name)) << name;
  }
  const CliRun five = run({"figure", "fig5", "--out", dir.string()});
  ASSERT_EQ(five.code, 0);
  std::ifstream f(dir / "fig5.csv");
  std::string line;
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  EXPECT_EQ(rows, 1 + 17 * 3);
  std::filesystem::remove_all(dir);
}
