#include <regex>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace achset::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "achset");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, KakeyaListsEvenIndicesForGn) {
  const auto r = invoke({"kakeya", "--series", "gn", "--horizon", "40"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["schema"], 1);
  std::vector<std::size_t> evens;
  for (std::size_t i = 2; i <= 40; i += 2) evens.push_back(i);
  EXPECT_EQ(j["K"].get<std::vector<std::size_t>>(), evens);
  EXPECT_EQ(j["density_Kc"]["ratio_at_horizon"], "1/2");
}

TEST(Cli, KakeyaCsv) {
  const auto r = invoke({"kakeya", "--series", "ws", "--horizon", "10", "--report", "csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,card,ratio");
  EXPECT_NE(r.out.find("\n10,8,4/5\n"), std::string::npos);
}

TEST(Cli, MmVerifyPasses) {
  const auto r = invoke({"mm-verify", "--groups", "1,3", "--tail", "const:5", "--k", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = parse(r);
  EXPECT_TRUE(j["all_pass"].get<bool>());
  EXPECT_EQ(j["series"], "mm(groups=1,3;tail=const:5)");
}

TEST(Cli, MmVerifyOnChosenSchedule) {
  const auto r = invoke({"mm-verify", "--tail", "schedule:identity", "--k", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(parse(r)["all_pass"].get<bool>());
}

TEST(Cli, ClassifyGn) {
  const auto r = invoke({"classify", "--series", "gn", "--depth", "12"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["verdict"], "CantorvalConsistent");
  EXPECT_EQ(j["gap_witness"], nlohmann::json::array({"5/12", "1/2"}));
  EXPECT_EQ(j["delta_trace"].size(), 13u);
}

TEST(Cli, BoundaryReport) {
  const auto r = invoke({"boundary", "--groups", "1,3,5", "--tail", "const:5", "--kmax", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = parse(r);
  EXPECT_TRUE(j["all_pass"].get<bool>());
  EXPECT_EQ(j["census"][0]["gap_count"], "2");
  EXPECT_EQ(j["census"][1]["gap_count"], "24");
  EXPECT_TRUE(j["census"][2]["cross_check"]["matches"].get<bool>());
  EXPECT_FALSE(j["census"][3].contains("cross_check"));
  EXPECT_TRUE(j["telescoping"]["holds"].get<bool>());
  EXPECT_EQ(j["residual_trace"].size(), 5u);

  const auto csv = invoke({"boundary", "--groups", "1,3", "--kmax", "2", "--report", "csv"});
  ASSERT_EQ(csv.code, kOk) << csv.err;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);
}

TEST(Cli, RenderRows) {
  const auto r = invoke({"render", "--series", "gn", "--depths", "0,2,4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::regex row("<g class=\"row\" data-depth=\"(\\d+)\" data-components=\"(\\d+)\">");
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), row); it != std::sregex_iterator(); ++it) {
    rows.emplace_back((*it)[1], (*it)[2]);
  }
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], std::make_pair(std::string("0"), std::string("1")));
  EXPECT_EQ(rows[1], std::make_pair(std::string("2"), std::string("3")));
  // row 0 spans the whole strip [0, 5/3]
  EXPECT_NE(r.out.find("<rect x=\"60.000\" y=\"24\" width=\"680.000\""), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"boundary", "--groups", "2,1", "--tail", "periodic:2,1", "--kmax", "3"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> svg{"render", "--series", "bexample", "--depths", "0,3,6"};
  EXPECT_EQ(invoke(svg).out, invoke(svg).out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"kakeya", "--series", "nope"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"kakeya", "--series", "geometric", "--ratio", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"classify", "--series", "geometric", "--ratio", "1/3", "--depth", "12", "--cap", "100"}).code,
            kCapExceeded);
  EXPECT_EQ(invoke({"boundary", "--tail", "schedule:identity", "--kmax", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"mm-verify", "--series", "gn"}).code, kUsage);
  EXPECT_EQ(invoke({"classify", "--report", "csv"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, EnvironmentCap) {
  ::setenv("ACHSET_ENUM_CAP", "100", 1);
  const int capped = invoke({"classify", "--series", "geometric", "--ratio", "1/3", "--depth", "12"}).code;
  ::setenv("ACHSET_ENUM_CAP", "zero", 1);
  const int bad = invoke({"classify", "--series", "gn", "--depth", "2"}).code;
  ::unsetenv("ACHSET_ENUM_CAP");
  EXPECT_EQ(capped, kCapExceeded);
  EXPECT_EQ(bad, kUsage);
}

}  // namespace
}  // namespace achset::cli
