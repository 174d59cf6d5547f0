#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dp5/cli.hpp"

using namespace dp5;
using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dp5_test_" + name);
}

int run_binary(const std::string& args) {
  std::string cmd = std::string(DP5_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST(Cli, VerdictOnZeta25) {
  auto r = run({"verdict", "--model", "fixture:zeta25", "--h", "2,-15,0,10,0,0"});
  ASSERT_EQ(r.status, 0) << r.err;
  auto d = r.doc();
  EXPECT_EQ(d["verdict"], "obstruction_order_5");
  EXPECT_EQ(d["images"]["5"]["values"], json::array({2, 12, 22}));
  EXPECT_EQ(d["images"]["5"]["contains_zero"], false);
  EXPECT_EQ(d["paper_claim_comparison"]["status"], "agrees");
  EXPECT_EQ(d["h"], json::array({2, -15, 0, 10, 0, 0}));
}

TEST(Cli, CensusModEleven) {
  auto r = run({"census", "--model", "fixture:zeta11plus", "--modulus", "11"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.doc()["obstructing"], 228);
  EXPECT_EQ(r.doc()["total"], 1771560);
}

TEST(Cli, CensusOutputIndependentOfJobs) {
  auto a = run({"census", "--model", "fixture:zeta25", "--jobs", "1"}).doc();
  auto b = run({"census", "--model", "fixture:zeta25", "--jobs", "3"}).doc();
  for (auto* d : {&a, &b}) {
    d->erase("wall_time_ms");
    d->erase("workers");
  }
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["obstructing"], 176);
}

TEST(Cli, Cohomology) {
  auto r = run({"cohomology"});
  ASSERT_EQ(r.status, 0);
  auto d = r.doc();
  EXPECT_EQ(d["h1"]["divisors"], json::array({5}));
  EXPECT_EQ(d["petersen"]["aut_order"], 120);
  EXPECT_EQ(d["minus_one_classes"].size(), 10u);
  EXPECT_EQ(d["sigma"][0], json::array({2, 1, 1, 0, 1}));
}

TEST(Cli, FiberFlags) {
  auto d = run({"fiber", "--model", "fixture:zeta11plus", "--prime", "11", "--lines", "--singular"}).doc();
  EXPECT_EQ(d["point_count"], 133);
  EXPECT_EQ(d["classification"], "singular");
  EXPECT_EQ(d["lines"].size(), 1u);
  EXPECT_EQ(d["singular_points"].size(), 1u);
  auto brief = run({"fiber", "--model", "fixture:zeta11plus", "--prime", "23"}).doc();
  EXPECT_FALSE(brief.contains("lines"));
  EXPECT_EQ(brief["line_count"], 10);
}

TEST(Cli, SolubilityAndInvariants) {
  auto s = run({"solubility", "--model", "fixture:zeta11plus", "--h", "0,0,1,0,0,1"}).doc();
  EXPECT_EQ(s["locally_soluble"], false);
  EXPECT_EQ(s["failing_place"], "2");
  auto inv = run({"invariants", "--model", "fixture:zeta11plus", "--h", "0,1,0,-6,0,0"}).doc();
  EXPECT_EQ(inv["paths_agree"], true);
  EXPECT_EQ(inv["image"]["contains_zero"], true);
}

TEST(Cli, ConstructWritesLoadableModel) {
  auto path = temp_file("model.json");
  auto r = run({"construct", "--minpoly", "1,1,-4,-3,3,1", "--output", path.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto model = io::load_model(path.string());
  EXPECT_EQ(model.source, "constructed");
  EXPECT_EQ(model.quadrics.size(), 5u);
  auto f = run({"fiber", "--model", path.string(), "--prime", "23"}).doc();
  EXPECT_EQ(f["point_count"], 645);
  auto c = run({"census", "--model", path.string(), "--modulus", "11"}).doc();
  EXPECT_EQ(c["obstructing"], 228);
  std::filesystem::remove(path);
}

TEST(Cli, ModelRoundTrip) {
  for (const char* name : {"zeta11plus", "zeta25"}) {
    auto m = fixture(name);
    auto back = io::model_from_json(io::to_json(m));
    EXPECT_EQ(io::to_json(back), io::to_json(m));
    EXPECT_EQ(back.points.size(), 7u);
  }
  auto built = build_model(make_quintic_field({1, 1, -4, -3, 3, 1}));
  auto j = io::to_json(built);
  EXPECT_EQ(io::to_json(io::model_from_json(j)), j);
}

TEST(Cli, MalformedModelIsDomainError) {
  auto j = io::to_json(fixture("zeta11plus"));
  j["source"] = "constructed";
  j["quadrics"].erase(0);
  EXPECT_THROW(io::model_from_json(j), DomainError);
  j = io::to_json(fixture("zeta11plus"));
  j["l1"][0] = 7;
  EXPECT_THROW(io::model_from_json(j), DomainError);

  auto path = temp_file("broken.json");
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(run({"fiber", "--model", path.string(), "--prime", "2"}).status, 3);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"verdict", "--h", "1,2"}).status, 2);
  EXPECT_EQ(run({"verdict", "--model", "fixture:zeta7", "--h", "1,0,0,0,0,0"}).status, 2);
  EXPECT_EQ(run({"fiber", "--prime", "9"}).status, 2);
  EXPECT_EQ(run({"fiber", "--prime", "53"}).status, 3);
  EXPECT_EQ(run({"construct", "--minpoly", "1,0,0,0,0,-2"}).status, 3);
  EXPECT_EQ(run({"construct", "--minpoly", "2,0,0,0,0,-2"}).status, 3);
  EXPECT_EQ(run({"verdict", "--h", "2,0,0,0,0,2"}).status, 3);
  EXPECT_EQ(run({"fiber", "--model", "/nonexistent/model.json", "--prime", "2"}).status, 2);
  auto help = run({"--help"});
  EXPECT_EQ(help.status, 0);
  EXPECT_NE(help.out.find("verify-paper"), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(run_binary("cohomology"), 0);
  EXPECT_EQ(run_binary("verdict --h 1"), 2);
  EXPECT_EQ(run_binary("construct --minpoly 1,0,0,0,0,-2"), 3);
}

TEST(Cli, OutputIsDeterministic) {
  auto a = run({"verdict", "--model", "fixture:zeta11plus", "--h", "0,1,0,-6,0,0"}).out;
  auto b = run({"verdict", "--model", "fixture:zeta11plus", "--h", "0,1,0,-6,0,0"}).out;
  EXPECT_EQ(a, b);
}

TEST(Cli, VerifyClaimsFast) {
  auto r = run({"verify-paper", "--fast"});
  EXPECT_EQ(r.status, 0) << r.out;
  auto d = r.doc();
  EXPECT_EQ(d["summary"]["fail"], 0);
  EXPECT_EQ(d["summary"]["flagged"], 2);
  std::set<int> criteria;
  for (const auto& row : d["claims"]) criteria.insert(row["criterion"].get<int>());
  EXPECT_EQ(criteria.size(), 11u);
  bool found = false;
  for (const auto& row : d["claims"])
    if (row["claim"] == "flagged.zeta11plus.u1-6u3") {
      found = true;
      EXPECT_EQ(row["status"], "flagged");
      EXPECT_EQ(row["published"], "obstruction_order_5");
      EXPECT_EQ(row["computed"]["paths_agree"], true);
    }
  EXPECT_TRUE(found);
}
