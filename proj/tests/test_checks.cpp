#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsym/checks.hpp"
#include "qsym/errors.hpp"

using namespace qsym;

namespace {

RunConfig only(std::vector<std::string> ids) {
  RunConfig c;
  c.checks = std::move(ids);
  return c;
}

const std::vector<std::string> kRequired = {
    "incseq-oracle",      "incseq-generation",   "hopf-axioms",
    "cocycle-valid",      "s4tau-characters",    "double-twist",
    "klein-classification", "d4-classification", "characters-o2minus",
    "characters-so3minus", "characters-snplus",  "sign-table",
    "det-to-perm",        "rho-image",           "normalizer-24",
    "automorphisms-24",   "phi-well-defined",    "embedding-images-3",
    "generation-counterexample"};

}  // namespace

TEST(Checks, RegistryIsSortedAndComplete) {
  const auto& reg = registry();
  EXPECT_TRUE(std::is_sorted(reg.begin(), reg.end(),
                             [](const auto& a, const auto& b) { return a.id < b.id; }));
  for (const auto& id : kRequired)
    EXPECT_TRUE(std::any_of(reg.begin(), reg.end(), [&](const auto& c) { return c.id == id; })) << id;
  for (const auto& c : reg) EXPECT_FALSE(c.statement.empty()) << c.id;
}

TEST(Checks, ReportedMetrics) {
  const auto r = run(only({"characters-o2minus", "normalizer-24", "embedding-images-3"}));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].check_id, "characters-o2minus");
  EXPECT_EQ(r[0].status, CheckStatus::Pass);
  EXPECT_EQ(r[0].metrics.at("count"), 8);
  EXPECT_EQ(r[0].labels.at("group_type"), "D4");
  EXPECT_EQ(r[1].check_id, "embedding-images-3");
  EXPECT_EQ(r[1].metrics.at("distinct_images"), 3);
  EXPECT_EQ(r[1].metrics.at("image_order"), 8);
  EXPECT_EQ(r[2].check_id, "normalizer-24");
  EXPECT_EQ(r[2].metrics.at("count"), 24);
}

TEST(Checks, EveryRegisteredCheckPasses) {
  for (const auto& r : run(RunConfig{}))
    EXPECT_EQ(r.status, CheckStatus::Pass) << r.check_id << ": " << r.details;
}

TEST(Checks, ConfigurationErrors) {
  EXPECT_THROW(run(only({"no-such-check"})), UnknownCheck);
  EXPECT_THROW(run_check("no-such-check", RunConfig{}), UnknownCheck);
  RunConfig c = only({"incseq-oracle"});
  c.max_n = kMaxNCap + 1;
  EXPECT_THROW(run(c), InvalidArgument);
  c.max_n = 0;
  EXPECT_THROW(run(c), InvalidArgument);
}

TEST(Checks, DuplicatesCollapse) {
  const auto r = run(only({"sign-table", "sign-table", "det-to-perm"}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].check_id, "det-to-perm");
}

TEST(Checks, MaxNDrivesSweep) {
  RunConfig c = only({"incseq-oracle"});
  c.max_n = 3;
  // sum of 2^n for n <= 3
  EXPECT_EQ(run(c)[0].metrics.at("sequences_checked"), 15);
}

TEST(Checks, EmptyReports) {
  EXPECT_EQ(render_json({}), "[]\n");
  const std::string md = render_markdown({});
  EXPECT_EQ(md.find("##"), std::string::npos);
  EXPECT_EQ(md.rfind("# ", 0), 0u);
}

TEST(Checks, JsonShape) {
  const auto j = nlohmann::json::parse(render_json(run(only({"characters-o2minus"}))));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  const auto& o = j[0];
  std::vector<std::string> keys;
  for (auto it = o.begin(); it != o.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"check_id", "details", "duration_ms", "labels",
                                            "metrics", "status"}));
  EXPECT_EQ(o["status"], "pass");
  EXPECT_EQ(o["metrics"]["count"], 8);
  EXPECT_EQ(o["labels"]["group_type"], "D4");
  EXPECT_EQ(o["duration_ms"], 0);
}

TEST(Checks, FailedExpectationsSetStatus) {
  CheckContext ctx{RunConfig{}};
  ctx.expect(true, "fine");
  EXPECT_TRUE(ctx.failures().empty());
  ctx.expect(false, "broken");
  EXPECT_EQ(ctx.failures(), std::vector<std::string>{"broken"});
  CheckResult r;
  r.check_id = "x";
  r.status = CheckStatus::Fail;
  const auto j = nlohmann::json::parse(render_json({r}));
  EXPECT_EQ(j[0]["status"], "fail");
  EXPECT_NE(render_markdown({r}).find("**fail**"), std::string::npos);
  EXPECT_EQ(status_name(CheckStatus::Error), "error");
}

TEST(Checks, ReportsAreByteStableAndParallelMatchesSerial) {
  RunConfig serial = only({"all"});
  const auto a = run(serial);
  const auto b = run(serial);
  RunConfig par = serial;
  par.parallel = true;
  const auto c = run(par);
  EXPECT_EQ(render_json(a), render_json(b));
  EXPECT_EQ(render_json(a), render_json(c));
  EXPECT_EQ(render_markdown(a), render_markdown(c));
}

TEST(Checks, TimingsOnlyWhenRequested) {
  RunConfig c = only({"double-twist"});
  EXPECT_EQ(run(c)[0].duration_ms, 0);
  c.timings = true;
  EXPECT_GT(run(c)[0].duration_ms, 0);
}

TEST(Checks, WriteTextFile) {
  const std::string path = ::testing::TempDir() + "qsym_report.md";
  write_text_file(path, "abc\n");
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "abc\n");
  std::remove(path.c_str());
  EXPECT_THROW(write_text_file("/nonexistent-dir/x/y.md", "z"), Error);
}
