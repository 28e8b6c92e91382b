#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cli.hpp"
#include "hofstadter/gap_table.hpp"

namespace hofstadter::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hofstadter_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CliTest, SpectrumHalfFlux) {
  const auto r = invoke({"spectrum", "1", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("edges -2.82842712475 0 0 2.82842712475\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, SpectrumUnitFlux) {
  const auto r = invoke({"spectrum", "1", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("edges -4 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("gap lo hi width\n"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.find("gap lo hi width\n")), "gap lo hi width\n");
}

TEST_F(CliTest, SpectrumRejectsNonCoprime) {
  const auto r = invoke({"spectrum", "2", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("p and q must be coprime"), std::string::npos);
}

TEST_F(CliTest, Labels) {
  const auto tb = invoke({"labels", "2", "5", "--regime", "tb"});
  EXPECT_EQ(tb.code, 0);
  EXPECT_NE(tb.out.find("1 -2 "), std::string::npos);
  EXPECT_NE(tb.out.find("2 1 "), std::string::npos);
  EXPECT_NE(tb.out.find("3 -1 "), std::string::npos);
  EXPECT_NE(tb.out.find("4 2 "), std::string::npos);

  const auto landau = invoke({"labels", "1", "3", "--regime", "landau"});
  EXPECT_EQ(landau.code, 0);
  EXPECT_NE(landau.out.find("1 0 "), std::string::npos);
  EXPECT_NE(landau.out.find("2 0 "), std::string::npos);

  const auto empty = invoke({"labels", "1", "1", "--regime", "tb"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "flux 1/1 regime tb\nj sigma width ambiguous\n");

  EXPECT_EQ(invoke({"labels", "1", "3", "--regime", "hall"}).code, 2);
  EXPECT_EQ(invoke({"labels", "0", "1", "--regime", "landau"}).code, 2);
}

TEST_F(CliTest, ButterflyMatchesGoldenAndIsDeterministic) {
  const std::filesystem::path golden = HOFSTADTER_GOLDEN_DIR;
  const auto tb_path = (dir_ / "b.ppm").string();
  const auto r = invoke({"butterfly", "--regime", "tb", "--qmax", "10", "--width", "64", "--height", "64",
                         "--format", "ppm", "--out", tb_path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("rendered"), std::string::npos);
  EXPECT_EQ(read_file(tb_path), read_file(golden / "tb_q10_64x64.ppm"));

  const auto landau_path = (dir_ / "l.ppm").string();
  ASSERT_EQ(invoke({"butterfly", "--regime", "landau", "--qmax", "10", "--width", "64", "--height", "64",
                    "--format", "ppm", "--out", landau_path, "--threads", "4"})
                .code,
            0);
  EXPECT_EQ(read_file(landau_path), read_file(golden / "landau_q10_64x64.ppm"));
  EXPECT_NE(read_file(landau_path), read_file(tb_path));
}

TEST_F(CliTest, ButterflyOtherFormats) {
  for (const std::string fmt : {"png", "svg"}) {
    const auto path = (dir_ / ("b." + fmt)).string();
    EXPECT_EQ(invoke({"butterfly", "--qmax", "5", "--width", "16", "--height", "16", "--format", fmt, "--out", path})
                  .code,
              0);
    EXPECT_GT(std::filesystem::file_size(path), 0u);
  }
}

TEST_F(CliTest, ButterflyErrors) {
  const auto path = (dir_ / "x.ppm").string();
  EXPECT_EQ(invoke({"butterfly", "--qmax", "0", "--out", path}).code, 2);
  EXPECT_EQ(invoke({"butterfly", "--width", "1", "--out", path}).code, 2);
  EXPECT_EQ(invoke({"butterfly", "--emin", "3", "--emax", "1", "--out", path}).code, 2);
  EXPECT_EQ(invoke({"butterfly", "--format", "gif", "--out", path}).code, 2);
  EXPECT_EQ(invoke({"butterfly", "--regime", "x", "--out", path}).code, 2);
  EXPECT_EQ(invoke({"butterfly", "--bogus", "--out", path}).code, 2);
  EXPECT_EQ(invoke({"butterfly"}).code, 2);
  const auto io = invoke({"butterfly", "--qmax", "3", "--width", "8", "--height", "8", "--out",
                          "/nonexistent-dir/for/sure/x.ppm"});
  EXPECT_EQ(io.code, 1);
  EXPECT_NE(io.err.find("/nonexistent-dir/for/sure/x.ppm"), std::string::npos);
}

TEST_F(CliTest, ExportCsvAndJson) {
  const auto csv = (dir_ / "gaps.csv").string();
  const auto json = (dir_ / "gaps.json").string();
  ASSERT_EQ(invoke({"export", "--qmax", "3", "--out", csv}).code, 0);
  ASSERT_EQ(invoke({"export", "--qmax", "3", "--out", json}).code, 0);
  const auto rows = parse_gap_table_csv(read_file(csv));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows, parse_gap_table_json(read_file(json)));
  const std::string text = read_file(csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), kGapCsvHeader);
  EXPECT_NE(text.find("\n1,2,1,0,0,0,1,"), std::string::npos);
  EXPECT_NE(text.find("\n1,3,1,"), std::string::npos);
  EXPECT_EQ(invoke({"export", "--qmax", "3", "--out", (dir_ / "gaps.txt").string()}).code, 2);
  EXPECT_EQ(invoke({"export", "--qmax", "0", "--out", csv}).code, 2);
}

TEST_F(CliTest, Verify) {
  const auto third = invoke({"verify", "1", "3", "--grid", "30"});
  EXPECT_EQ(third.code, 0);
  EXPECT_NE(third.out.find("verdict PASS"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "2", "5", "--grid", "30"}).code, 0);
  EXPECT_EQ(invoke({"verify", "1", "2", "--grid", "30"}).code, 4);
  EXPECT_EQ(invoke({"verify", "1", "2", "--grid", "30", "--composite"}).code, 0);
  EXPECT_EQ(invoke({"verify", "2", "6", "--grid", "30"}).code, 2);
  EXPECT_EQ(invoke({"verify", "1", "3", "--grid", "5"}).code, 2);
}

TEST_F(CliTest, OutputIsPureFunctionOfArguments) {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"spectrum", "3", "7"}, std::vector<std::string>{"labels", "4", "5", "--regime", "landau"},
        std::vector<std::string>{"verify", "3", "7", "--grid", "20"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

TEST_F(CliTest, UsageAndHelp) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("butterfly"), std::string::npos);
}

}  // namespace
}  // namespace hofstadter::cli
