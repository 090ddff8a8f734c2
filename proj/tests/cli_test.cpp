#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Result {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

Result run(const std::string& args) {
  const std::string cmd = std::string(RELAYSEL_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.output.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(RELAYSEL_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("relaysel_cli_" + name);
}

TEST(Cli, UnknownScenario) {
  const Result r = run("scenario --id 9");
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.output.find("unknown scenario"), std::string::npos) << r.output;
}

TEST(Cli, MissingId) {
  const Result r = run("scenario --runs 1");
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.output.find("--id"), std::string::npos);
}

TEST(Cli, BadArguments) {
  EXPECT_NE(run("").status, 0);
  EXPECT_NE(run("scenario --id 1 --runs abc").status, 0);
  EXPECT_NE(run("scenario --id 1 --strict-quota --relaxed-quota").status, 0);
  EXPECT_NE(run("scenario --id 1 --algos greedy").status, 0);
  EXPECT_NE(run("solve-kcard --matrix /nonexistent --k 1").status, 0);
}

TEST(Cli, SolveKcard) {
  const Result r = run("solve-kcard --matrix " + data("kcard_2x2.txt") + " --k 1");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(r.output, "edge 0 0 5\ntotal_weight 5\n");
  const Result two = run("solve-kcard --matrix " + data("kcard_2x2.txt") + " --k 2");
  EXPECT_EQ(two.output, "edge 0 0 5\nedge 1 1 4\ntotal_weight 9\n");
  const Result bad_k = run("solve-kcard --matrix " + data("kcard_2x2.txt") + " --k 3");
  EXPECT_NE(bad_k.status, 0);
}

TEST(Cli, ScenarioIsByteStable) {
  const std::string args = "scenario --id 1 --runs 3 --ns-step 25";
  const Result a = run(args);
  const Result b = run(args + " --jobs 1");
  ASSERT_EQ(a.status, 0) << a.output;
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(a.output.rfind("scenario,algorithm,N_s,N_r,channels,alpha,mean_capacity,std_capacity,mean_unmatched\n", 0),
            0u);
  // header plus 4 algorithms x 5 points
  EXPECT_EQ(std::count(a.output.begin(), a.output.end(), '\n'), 21);

  const auto out = scratch("s1.csv");
  ASSERT_EQ(run(args + " --out " + out.string()).status, 0);
  std::ifstream f(out);
  const std::string file((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(file, a.output);
  std::filesystem::remove(out);
}

TEST(Cli, ConfigFileAndOverrides) {
  const auto cfg = scratch("cfg.json");
  {
    std::ofstream f(cfg);
    f << R"({"id": 4, "runs": 2, "ns-min": 40, "ns-max": 40, "channels": [25]})";
  }
  const Result r = run("scenario --config " + cfg.string());
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("\n4,ORSA,40,100,25,1e-04,"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find(",15\n"), std::string::npos);

  const Result o = run("scenario --config " + cfg.string() + " --channels 50 --algos mrsa");
  ASSERT_EQ(o.status, 0) << o.output;
  EXPECT_NE(o.output.find("\n4,MRSA,40,100,50,"), std::string::npos);
  EXPECT_EQ(o.output.find("ORSA"), std::string::npos);
  std::filesystem::remove(cfg);
}

TEST(Cli, InstanceDump) {
  const Result r = run("instance --seed 3 --ns 2 --nr 1");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["n_sources"], 2);
  EXPECT_EQ(j["machines"].size(), 3u);
  EXPECT_EQ(j["gains"].size(), 6u);
  EXPECT_EQ(run("instance --seed 3 --ns 2 --nr 1").output, r.output);
}

}  // namespace
