#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "fgt/probes.hpp"
#include "fgt/verify.hpp"

using namespace fgt;
namespace fs = std::filesystem;

namespace {

Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(FGT_CLI) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST(Verify, EveryTableLoadsWithProvenance) {
  auto ids = table_ids();
  EXPECT_GE(ids.size(), 14u);
  for (const auto& id : ids) {
    auto data = load_expectations(id);
    EXPECT_EQ(data.at("table"), id);
    ASSERT_TRUE(data.at("rows").is_array());
    for (const auto& row : data["rows"]) {
      ASSERT_TRUE(row.contains("provenance")) << id;
      EXPECT_FALSE(row["provenance"].get<std::string>().empty()) << id;
      auto status = row.value("status", "checked");
      EXPECT_TRUE(status == "checked" || status == "informational" || status == "disputed") << id;
    }
  }
}

TEST(Verify, DeterministicModuloTiming) {
  for (const char* id : {"table10", "tableA4", "table2a"}) {
    auto a = verify_table(id);
    auto b = verify_table(id);
    EXPECT_EQ(strip_timing(a.json).dump(), strip_timing(b.json).dump()) << id;
  }
}

TEST(Verify, ReportShape) {
  auto r = verify_table("table1");
  const auto& j = r.json;
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"table", "title", "toolkit_version", "caps", "include_long_running",
                                            "rows", "summary", "pass", "seconds"}));
  EXPECT_EQ(j["toolkit_version"], kToolkitVersion);
  EXPECT_TRUE(r.pass);
}

TEST(Verify, DisputedRowsNeverFail) {
  auto r = verify_table("tableA4");
  EXPECT_TRUE(r.pass);
  bool saw_info = false;
  for (const auto& row : r.json["rows"])
    if (row["row"] == "p=31") {
      EXPECT_EQ(row["status"], "informational");
      saw_info = true;
    }
  EXPECT_TRUE(saw_info);
}

TEST(Verify, RowAndPrimeFilters) {
  VerifyOptions o;
  o.rows = {"x=16"};
  auto r = verify_table("table8", o);
  ASSERT_EQ(r.json["rows"].size(), 1u);
  EXPECT_EQ(r.json["rows"][0]["status"], "pass");
  VerifyOptions q;
  q.p = 7;
  for (const auto& row : verify_table("tableA4", q).json["rows"]) EXPECT_EQ(row["row"], "p=7");
}

TEST(Verify, LongRunningRowsAreSkippedByDefault) {
  auto r = verify_table("table8");
  EXPECT_EQ(r.json["summary"]["skipped"], 14);
}

TEST(Probes, NamesAndDefaultRun) {
  auto names = probe_names();
  ASSERT_EQ(names.size(), 2u);
  auto j = run_probe("conjecture-17", false, 100000);
  EXPECT_EQ(j["order"], 36992);
  EXPECT_EQ(j["conjectured_order"], 73984);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("build 'cyclic(4)' --json"), 0);
  EXPECT_EQ(run_cli("build 'cyclic(4' --json"), 2);
  EXPECT_EQ(run_cli("nosuchcommand"), 2);
  EXPECT_EQ(run_cli("solve roots --p 7 --t 3 --json"), 0);
  EXPECT_EQ(run_cli("verify table10 --json"), 0);
  EXPECT_EQ(run_cli("iso 'dihedral(4)' 'dicyclic(2)' --json"), 0);
}

TEST(Cli, FailingExpectationExitsOne) {
  fs::path dir = fs::temp_directory_path() / "fgt-verify-fail";
  fs::create_directories(dir);
  auto data = load_expectations("table10");
  data["rows"][0]["aut"]["order"] = 999;
  std::ofstream(dir / "table10.json") << data.dump(2);
  std::string env = "FGT_DATA_DIR=" + dir.string() + " ";
  std::string cmd = env + FGT_CLI + std::string(" verify table10 --json > /dev/null 2>&1");
  int rc = std::system(cmd.c_str());
  EXPECT_EQ(WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, 1);
  fs::remove_all(dir);
}

TEST(Verify, Table2aLawHoldsAtAnotherPrime) {
  VerifyOptions o;
  o.p = 5;
  auto r = verify_table("table2a", o);
  EXPECT_TRUE(r.pass);
  EXPECT_GE(r.json["summary"]["pass"].get<int>(), 30);
}
