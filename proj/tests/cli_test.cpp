#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "spinor/cli.hpp"

using Json = nlohmann::json;
using spinor::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell; returns the exit status.
int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, QuiverJsonHeights) {
  const auto r = call({"quiver", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "quiver");
  EXPECT_EQ(j["r"], 6);
  EXPECT_EQ(j["heights"], Json({5, 4, 3, 3, 2, 1}));
  EXPECT_EQ(j["word"], Json({4, 2, 1, 3, 2, 4}));
  EXPECT_EQ(j["vertices"].size(), 6u);
}

TEST(Cli, QuiverDotAndText) {
  const auto dot = call({"quiver", "--n", "5", "--format", "dot"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph BS {", 0), 0u);
  const auto text = call({"quiver", "--n", "5", "--format", "text"});
  ASSERT_EQ(text.code, 0);
  EXPECT_FALSE(text.out.empty());
}

TEST(Cli, VerifyPassesAndNamesChecks) {
  for (int n = 3; n <= 7; ++n) {
    const auto r = call({"verify", "--n", std::to_string(n)});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = Json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    bool found = false;
    for (const auto& c : j["checks"]) {
      EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
      found = found || c["name"] == "word-represents-w0bar";
    }
    EXPECT_TRUE(found);
  }
}

TEST(Cli, ClassesExtremal) {
  const auto r = call({"classes", "--n", "5", "--d", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["max_dim"], 45);
  EXPECT_EQ(j["bound"], 45);
  EXPECT_EQ(j["expected_dim"], 48);
  EXPECT_TRUE(j["unique"].get<bool>());
  EXPECT_EQ(j["argmax"], Json({4, 1, 1, 0, 0, 0, 0, 0, 0, 0}));

  const auto small = Json::parse(call({"classes", "--n", "4", "--d", "3"}).out);
  EXPECT_EQ(small["count"], 6);
  EXPECT_EQ(small["classes"].size(), 6u);

  const auto below = Json::parse(call({"classes", "--n", "5", "--d", "2"}).out);
  EXPECT_EQ(below["count"], 0);
  EXPECT_TRUE(below["max_dim"].is_null());
  EXPECT_TRUE(below["below_threshold"].get<bool>());
  EXPECT_EQ(below["threshold"], 4);
}

TEST(Cli, ConfigTrialsAndCensus) {
  const auto r = call({"config", "--n", "5", "--field", "2", "--seed", "3", "--trials", "20", "--census"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["properties"].size(), 5u);
  EXPECT_EQ(j["census"]["total"], 1024);
  EXPECT_EQ(j["census"]["degenerate_count"], 156);
  EXPECT_TRUE(j["census"]["passed"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"quiver", "--n", "2"}).code, 2);
  EXPECT_EQ(call({"quiver"}).code, 2);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"verify", "--n", "4", "--format", "dot"}).code, 2);
  EXPECT_EQ(call({"classes", "--n", "4"}).code, 2);
  EXPECT_EQ(call({"classes", "--n", "4", "--d", "0"}).code, 2);
  EXPECT_EQ(call({"config", "--n", "5", "--field", "4"}).code, 2);
  EXPECT_EQ(call({"config", "--n", "5", "--field", "Q", "--census"}).code, 2);
  EXPECT_EQ(call({"config", "--n", "7", "--field", "3", "--census"}).code, 3);
  EXPECT_EQ(call({"classes", "--n", "10", "--d", "20"}).code, 3);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::vector<std::string>> cmds{
      {"quiver", "--n", "6", "--format", "dot"},
      {"quiver", "--n", "6", "--format", "json"},
      {"verify", "--n", "6"},
      {"classes", "--n", "5", "--d", "5"},
      {"config", "--n", "4", "--field", "3", "--seed", "17", "--trials", "25", "--census"},
      {"config", "--n", "4", "--field", "Q", "--seed", "17", "--trials", "25"}};
  for (const auto& c : cmds) EXPECT_EQ(call(c).out, call(c).out);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "spinor_lab_cli_test.dot";
  std::filesystem::remove(path);
  const auto r = call({"quiver", "--n", "4", "--format", "dot", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), call({"quiver", "--n", "4", "--format", "dot"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, BinaryExitCodesAndThreadVariable) {
  const std::string exe = SPINOR_LAB_EXE;
  const std::string quiet = " >/dev/null 2>&1";
  EXPECT_EQ(shell(exe + " verify --n 5" + quiet), 0);
  EXPECT_EQ(shell(exe + " quiver --n 2" + quiet), 2);
  EXPECT_EQ(shell(exe + " config --n 7 --field 3 --census" + quiet), 3);
  EXPECT_EQ(shell("SPINOR_LAB_THREADS=2 " + exe + " classes --n 5 --d 6" + quiet), 0);
  EXPECT_EQ(shell("SPINOR_LAB_THREADS=zero " + exe + " classes --n 5 --d 6" + quiet), 2);
  EXPECT_EQ(shell("SPINOR_LAB_THREADS=0 " + exe + " classes --n 5 --d 6" + quiet), 2);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const std::string exe = SPINOR_LAB_EXE;
  auto capture = [&](const std::string& env) {
    std::string out;
    FILE* pipe = popen((env + " " + exe + " classes --n 6 --d 6").c_str(), "r");
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
  };
  const auto one = capture("SPINOR_LAB_THREADS=1");
  EXPECT_FALSE(one.empty());
  EXPECT_EQ(one, capture("SPINOR_LAB_THREADS=3"));
}
