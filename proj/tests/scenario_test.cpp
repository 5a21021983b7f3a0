#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>

#include "paraverify/builtins.hpp"
#include "paraverify/report_io.hpp"

using namespace paraverify;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(PARAVERIFY_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("paraverify_" + std::to_string(::getpid()) + "_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

json builtin_doc(const std::string& name) { return json::parse(find_builtin(name)->document); }

std::string schema_message(const json& doc, ErrorKind kind = ErrorKind::schema) {
  try {
    compile_scenario(doc);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind);
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Registry, ListsAtLeastSixScenarios) {
  EXPECT_GE(builtin_scenarios().size(), 6u);
  for (const auto& b : builtin_scenarios()) EXPECT_EQ(builtin_scenario(b.name).name, b.name);
  EXPECT_THROW(builtin_scenario("nope"), Error);
}

TEST(Registry, EveryBuiltinRunsAndPasses) {
  for (const auto& b : builtin_scenarios()) {
    const Scenario s = builtin_scenario(b.name);
    const auto rep = run_scenario(s, VerifyConfig{});
    EXPECT_EQ(rep.errors(), 0) << b.name;
    EXPECT_TRUE(rep.passed()) << b.name << "\n" << report_to_text(rep);
  }
}

TEST(Registry, ExpectedVerdictsAreEnforced) {
  json doc = builtin_doc("example21");
  doc["expect"]["structure"] = "para_sasakian";
  const auto rep = run_scenario(compile_scenario(doc), VerifyConfig{});
  EXPECT_FALSE(rep.passed());
  EXPECT_EQ(rep.find("expect.structure")->status, Status::fail);
}

TEST(Schema, ErrorsNameTheField) {
  json doc = builtin_doc("example21");
  doc["metrics"][0]["entries"][0] = "x1^";
  EXPECT_NE(schema_message(doc, ErrorKind::parse).find("metrics[0].entries[0]"), std::string::npos);

  doc = builtin_doc("example21");
  doc["structure"].erase("xi");
  EXPECT_NE(schema_message(doc).find("structure.xi"), std::string::npos);

  doc = builtin_doc("example51");
  doc["immersion"]["source"] = "Q";
  EXPECT_NE(schema_message(doc).find("unknown chart 'Q'"), std::string::npos);

  doc = builtin_doc("example51");
  doc["immersion"]["components"].erase(0);
  EXPECT_NE(schema_message(doc).find("immersion.components"), std::string::npos);

  doc = builtin_doc("example51");
  doc["charts"][1]["box"][0] = json::array({-1, 2});
  EXPECT_NE(schema_message(doc).find("charts[1]"), std::string::npos);

  doc = builtin_doc("example21");
  doc["sampling"] = {{"n", "many"}};
  EXPECT_FALSE(schema_message(doc).empty());

  EXPECT_THROW(parse_scenario("{not json"), Error);
}

TEST(Reports, DeterministicAndRoundTripStable) {
  const auto path = temp_file("example21.json");
  const Scenario s = builtin_scenario("example21");
  write(path, s.document.dump(2));
  const Scenario back = load_scenario_file(path.string());
  VerifyConfig cfg;
  const auto a = report_to_json(run_scenario(s, cfg), cfg).dump();
  const auto b = report_to_json(run_scenario(s, cfg), cfg).dump();
  const auto c = report_to_json(run_scenario(back, cfg), cfg).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  std::filesystem::remove(path);
}

TEST(Reports, StageErrorsBecomeFailedChecks) {
  json doc = builtin_doc("synthetic_xi_normal");
  // A lightlike curve: its tangent is null in the flat ambient metric.
  doc["charts"][1] = {{"name", "N"}, {"coords", {"a"}}, {"box", {{-1, 1}}}};
  doc["immersion"]["components"] = {"a", 0, "a", 0, 0};
  doc.erase("expect");
  const auto rep = run_scenario(compile_scenario(doc), VerifyConfig{});
  EXPECT_GT(rep.errors(), 0);
  EXPECT_FALSE(rep.passed());
  const auto text = report_to_text(rep);
  EXPECT_NE(text.find("lightlike_tangent"), std::string::npos) << text;
}

TEST(Cli, ListAndRun) {
  const CliRun list = cli("list");
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("example51"), std::string::npos);

  const CliRun run = cli("run example21 --samples 20 --format json");
  EXPECT_EQ(run.code, 0) << run.out;
  const json rep = json::parse(run.out);
  EXPECT_EQ(rep["scenario"], "example21");
  EXPECT_EQ(rep["config"]["samples"], 20);
  EXPECT_TRUE(rep["passed"].get<bool>());

  EXPECT_EQ(cli("run example21 --format text").code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("run example21 --samples 0").code, 2);
  EXPECT_EQ(cli("run no_such_scenario").code, 2);
  EXPECT_EQ(cli("run example21 --format yaml").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);

  json doc = builtin_doc("example21");
  doc["christoffel_table"]["entries"][0]["value"] = "2/x1";
  const auto failing = temp_file("failing.json");
  write(failing, doc.dump());
  EXPECT_EQ(cli("run " + failing.string()).code, 1);

  const auto broken = temp_file("broken.json");
  write(broken, "{\"name\": 3}");
  const CliRun r = cli("run " + broken.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("name"), std::string::npos);
  std::filesystem::remove(failing);
  std::filesystem::remove(broken);
}

TEST(Cli, ExportReloadGivesIdenticalReport) {
  const auto path = temp_file("export.json");
  EXPECT_EQ(cli("export example21 -o " + path.string()).code, 0);
  const CliRun a = cli("run example21 --format json");
  const CliRun b = cli("run " + path.string() + " --format json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::filesystem::remove(path);
}
