// Copyright 2026 The PPIL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Drives the ppil executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef PPIL_CLI_PATH
#error "PPIL_CLI_PATH must name the ppil executable"
#endif

namespace {

using nlohmann::json;

struct CliRun {
  int rc = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PPIL_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expected_rc = 0) {
  const CliRun r = run(args);
  EXPECT_EQ(r.rc, expected_rc) << args;
  return json::parse(r.out);
}

TEST(Cli, ReportShape) {
  const json j = run_json("metrics 512 0,31,64");
  EXPECT_EQ(j["schema_version"], "1.0");
  EXPECT_EQ(j["command"], "metrics");
  EXPECT_EQ(j["inputs"]["N"], 512);
  EXPECT_TRUE(j.contains("timing_ms"));
  const json& m = j["outputs"]["metrics"];
  EXPECT_EQ(m["D"], 32);
  EXPECT_EQ(m["zeta"], 4);
  EXPECT_EQ(m["zeta_refined"], 3);
  EXPECT_EQ(m["epsilon"], 128);
}

TEST(Cli, ValidateReducesAndRejects) {
  const json ok = run_json("validate 32 0,7,16");
  EXPECT_EQ(ok["outputs"]["permutation"], true);
  EXPECT_EQ(ok["outputs"]["irreducible_degree"], false);
  EXPECT_EQ(ok["outputs"]["reduced"]["text"], "23x");
  const json bad = run_json("validate 5 0,0,1", 1);
  EXPECT_EQ(bad["outputs"]["permutation"], false);
  const json& c = bad["outputs"]["collision"];
  const auto a = c["first"].get<std::int64_t>(), b = c["second"].get<std::int64_t>();
  EXPECT_NE(a, b);
  EXPECT_EQ(a * a % 5, b * b % 5);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("metrics 128 0,15,32").rc, 0);
  EXPECT_EQ(run("validate 5 0,0,1").rc, 1);
  EXPECT_EQ(run("search-maxd 3").rc, 1);
  EXPECT_EQ(run("search-omega 40 --beta 0.9").rc, 1);
  EXPECT_EQ(run("export 5 0,0,1 --format txt").rc, 1);
  EXPECT_EQ(run("validate 32 0,x,16").rc, 2);
  EXPECT_EQ(run("no-such-command").rc, 2);
  EXPECT_EQ(run("").rc, 2);
  EXPECT_EQ(run("metrics 1 0,1").rc, 2);
  EXPECT_EQ(run("export 8 0,1,2 --format xml").rc, 2);
}

TEST(Cli, ErrorReportsCarryKind) {
  const CliRun r = run("search-maxd 3");
  ASSERT_EQ(r.rc, 1);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["outputs"].contains("error"));
}

TEST(Cli, SearchCommands) {
  const json d = run_json("search-maxd 80");
  EXPECT_EQ(d["outputs"]["winner"]["text"], "9x+20x^2");
  EXPECT_EQ(d["outputs"]["D"], 10);
  const json w = run_json("search-maxd 80 --workers 3");
  EXPECT_EQ(w["outputs"], d["outputs"]);
  const json o = run_json("search-omega 512");
  EXPECT_EQ(o["outputs"]["winner"]["text"], "15x+32x^2");
  EXPECT_NEAR(o["outputs"]["omega_refined"].get<double>(), 11.09, 0.005);
  const json b = run_json("search-maxd 80 --bounds 0:79,10:10");
  EXPECT_EQ(b["outputs"]["winner"]["coefficients"][2], 10);
}

TEST(Cli, DesignCommands) {
  const json ms = run_json("ms-seq 5");
  EXPECT_EQ(ms["outputs"]["polynomial"]["text"], "31x+64x^2");
  EXPECT_EQ(ms["outputs"]["inverse"]["text"], "479x+64x^2");
  const json b = run_json("bounds 4");
  EXPECT_DOUBLE_EQ(b["outputs"]["ub_DE"].get<double>(), 3.0);
  const json s = run_json("scan-existence 4096");
  EXPECT_EQ(s["outputs"]["count"], 1190);
  const json lin = run_json("linear-ms 512");
  EXPECT_FALSE(lin["outputs"].empty());
  const json orb = run_json("orbits 128 0,15,32");
  EXPECT_FALSE(orb["outputs"].empty());
}

TEST(Cli, ExportFormats) {
  const CliRun txt = run("export 128 0,15,32 --format txt");
  ASSERT_EQ(txt.rc, 0);
  std::istringstream in(txt.out);
  std::vector<std::int64_t> seq;
  for (std::int64_t v; in >> v;) seq.push_back(v);
  ASSERT_EQ(seq.size(), 128u);
  std::vector<std::int64_t> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (std::int64_t i = 0; i < 128; ++i) ASSERT_EQ(sorted[i], i);
  EXPECT_EQ(seq[1], 47);

  const CliRun csv = run("export 8 0,1,2 --format csv");
  ASSERT_EQ(csv.rc, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "x,fx");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 9);
}

TEST(Cli, ExportedJsonRoundTripsThroughMetrics) {
  const auto path = std::filesystem::temp_directory_path() / "ppil_cli_test_export.json";
  ASSERT_EQ(run("export 512 433,15,32 --format json -o " + path.string()).rc, 0);
  std::ifstream f(path);
  const json exported = json::parse(f);
  std::filesystem::remove(path);
  std::string coeffs;
  for (const auto& c : exported["outputs"]["polynomial"]["coefficients"]) {
    if (!coeffs.empty()) coeffs += ",";
    coeffs += std::to_string(c.get<std::int64_t>());
  }
  EXPECT_EQ(coeffs, "433,15,32");
  const json again = run_json("metrics 512 " + coeffs);
  EXPECT_EQ(again["outputs"]["metrics"], exported["outputs"]["metrics"]);
  EXPECT_EQ(exported["outputs"]["sequence"].size(), 512u);
}

}  // namespace
