#include "cli.hpp"

#include <sstream>

#include "gtest/gtest.h"

namespace euler_adic::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "euler-adic");
  std::ostringstream out, err;
  const int code = run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"nonsense"}).code, kUsage);
  EXPECT_EQ(invoke({"dim", "--cylinder", "L1"}).code, kUsage);
  EXPECT_EQ(invoke({"dim", "--cylinder", "L3", "--n", "4", "--k", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"dim", "--cylinder", "L1", "--n", "4", "--k", "5"}).code, kUsage);
  EXPECT_EQ(invoke({"sample", "--m", "4"}).code, kUsage);
  EXPECT_EQ(invoke({"walk", "--steps", "10"}).code, kUsage);
  EXPECT_EQ(invoke({"perm2path", "1224"}).code, kUsage);
  EXPECT_EQ(invoke({"eulerian", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, Eulerian) {
  const Result r = invoke({"eulerian", "--max-n", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1\n1 1\n1 4 1\n1 11 11 1\n1 26 66 26 1\n1 57 302 302 57 1\n");

  const Result j = invoke({"eulerian", "--max-n", "3", "--format", "json"});
  EXPECT_EQ(j.code, kOk);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["rows"][0], nlohmann::json::array({"1"}));
  EXPECT_EQ(doc["rows"][3][1], "11");
  EXPECT_TRUE(doc["row_sums_ok"].get<bool>());

  const Result csv = invoke({"eulerian", "--max-n", "1", "--format", "csv"});
  EXPECT_EQ(csv.out, "n,k,A\n0,0,1\n1,0,1\n1,1,1\n");
}

TEST(Cli, Codec) {
  Result r = invoke({"path2perm", "L1,R1,R1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "2341\n");
  r = invoke({"perm2path", "2341"});
  EXPECT_EQ(r.out, "L1,R1,R1\n");
  r = invoke({"perm2path", "1"});
  EXPECT_EQ(r.out, "-\n");
  r = invoke({"path2perm", "-"});
  EXPECT_EQ(r.out, "1\n");
  r = invoke({"perm2path", "1,2,3,4,5,6,7,8,9,10"});
  EXPECT_EQ(r.out, "R1,R1,R1,R1,R1,R1,R1,R1,R1\n");
}

TEST(Cli, DimFlagsTheLiteralVariant) {
  const Result r = invoke({"dim", "--cylinder", "L1", "--n", "2", "--k", "1", "--format", "json"});
  EXPECT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["formula_slot_corrected"], "2");
  EXPECT_EQ(doc["formula_literal"], "3");
  EXPECT_TRUE(doc["literal_flagged"].get<bool>());
  EXPECT_EQ(doc["oracle_graph"], "2");
  EXPECT_EQ(doc["oracle_permutation"], "2");
  EXPECT_EQ(doc["status"], "ok");

  const Result t = invoke({"dim", "--cylinder", "2341", "--n", "8", "--k", "4"});
  EXPECT_EQ(t.code, kOk);
  EXPECT_NE(t.out.find("ok\n"), std::string::npos);

  const Result big = invoke({"dim", "--cylinder", "213", "--n", "30", "--k", "15", "--variant", "slot"});
  EXPECT_EQ(big.code, kOk);
  EXPECT_NE(big.err.find("skipped"), std::string::npos);
}

TEST(Cli, Ratio) {
  const Result same = invoke({"ratio", "--cylinder-a", "213", "--cylinder-b", "132", "--n", "10,20"});
  EXPECT_EQ(same.code, kOk);
  std::istringstream lines(same.out);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "n,k,dim_F,dim_Fprime,ratio_num,ratio_den,abs_dev");
  std::getline(lines, row);
  EXPECT_EQ(row.substr(0, 5), "10,5,");
  EXPECT_EQ(row.substr(row.size() - 6), ",1,1,0");

  const Result j = invoke({"ratio", "--cylinder-a", "213", "--cylinder-b", "123", "--n", "10,20,40",
                           "--format", "json"});
  ASSERT_EQ(j.code, kOk);
  const auto rows = nlohmann::json::parse(j.out)["rows"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_GT(rows[0]["abs_dev_approx"].get<double>(), rows[1]["abs_dev_approx"].get<double>());
  EXPECT_GT(rows[1]["abs_dev_approx"].get<double>(), rows[2]["abs_dev_approx"].get<double>());

  const Result zero = invoke({"ratio", "--cylinder-a", "L1", "--cylinder-b", "R1", "--n", "3", "--k", "0"});
  EXPECT_EQ(zero.code, kOk);
  EXPECT_NE(zero.out.find("3,0,1,0,,,"), std::string::npos);
  EXPECT_EQ(invoke({"ratio", "--cylinder-a", "L1", "--cylinder-b", "R1", "--n", "3,4", "--k", "0"}).code,
            kUsage);
}

TEST(Cli, Sample) {
  const std::vector<const char*> args{"sample", "--m", "4", "--samples", "24000", "--seed", "11",
                                      "--format", "json"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["cells"].size(), 24u);
  EXPECT_EQ(doc["cells"][0]["expected"], "1/24");
  EXPECT_EQ(doc["status"], "pass");

  const Result fr = invoke({"sample", "--spec", "finite-rank", "--m", "4", "--samples", "20000",
                            "--seed", "3"});
  EXPECT_EQ(fr.code, kOk) << fr.out;
}

TEST(Cli, Check) {
  Result r = invoke({"check", "--spec", "symmetric", "--depth", "7", "--kind", "invariance"});
  EXPECT_EQ(r.code, kOk);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(doc["depth"], 7);
  EXPECT_TRUE(doc["violations"].empty());

  r = invoke({"check", "--spec", "finite-rank", "--depth", "10"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 2u);

  r = invoke({"check", "--spec", "finite-rank", "--alphas", "1/4,1/7,1/8", "--depth", "3", "--kind",
              "invariance"});
  EXPECT_EQ(r.code, kCheckFailure);
  doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "fail");
  EXPECT_EQ(doc["violations"][0]["level"], 2);
  EXPECT_EQ(doc["violations"][0]["column"], 1);
  EXPECT_EQ(doc["violations"][0]["measures"], nlohmann::json::array({"3/28", "1/8"}));

  r = invoke({"check", "--spec", "finite-rank", "--alpha1", "1/5", "--depth", "8", "--format", "table"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("invariance (finite-rank, depth 8): pass"), std::string::npos);

  EXPECT_EQ(invoke({"check", "--spec", "finite-rank", "--alphas", "1/4,x"}).code, kUsage);
}

TEST(Cli, Walk) {
  const std::vector<const char*> args{"walk", "--mode", "negative", "--steps", "10000", "--seed", "9",
                                      "--format", "csv"};
  const Result a = invoke(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, invoke(args).out);
  EXPECT_EQ(a.out.rfind("step,choice,k_n\n1,", 0), 0u);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 10001);

  const Result j = invoke({"walk", "--mode", "positive", "--steps", "50", "--seed", "1", "--format", "json"});
  EXPECT_EQ(j.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(j.out)["steps"], 50);
}

}  // namespace
}  // namespace euler_adic::cli
