// Copyright 2026 The supernorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "json.hpp"
#include "supernorm/io.hpp"
#include "supernorm/suite.hpp"

using nlohmann::json;
using namespace supernorm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("supernorm_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string example_file(const std::string& name) {
  return write_temp(name + ".json", io::channel_to_json(suite::build_example(name).map).dump());
}

const char* kIdentity2 = R"({"rows":2,"cols":2,"entries":[[1,0],[0,0],[0,0],[1,0]]})";

}  // namespace

TEST(cli, schatten_examples) {
  std::string id = write_temp("id2.json", kIdentity2);
  Result a = run({"schatten", id, "--p", "1"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(a.out, "2.000000000000\n");
  ASSERT_EQ(run({"schatten", id, "--p", "inf"}).out, "1.000000000000\n");

  std::string diag = write_temp(
      "diag.json",
      R"({"rows":4,"cols":4,"entries":[[0.5,0],[0,0],[0,0],[0,0],[0,0],[0,0.5],[0,0],[0,0],[0,0],[0,0],[-0.5,0],[0,0],[0,0],[0,0],[0,0],[0,-0.5]]})");
  ASSERT_EQ(run({"schatten", diag, "--p", "1"}).out, "2.000000000000\n");
}

TEST(cli, schatten_errors) {
  std::string id = write_temp("id2b.json", kIdentity2);
  ASSERT_EQ(run({"schatten", id, "--p", "0.5"}).code, 2);
  ASSERT_EQ(run({"schatten", id, "--p", "banana"}).code, 2);
  ASSERT_EQ(run({"schatten", "/nonexistent.json", "--p", "1"}).code, 2);
  Result bad = run({"schatten", write_temp("trunc.json", R"({"rows":2,"cols":2,"entries":[[1,0]]})"), "--p", "1"});
  ASSERT_EQ(bad.code, 2);
  ASSERT_FALSE(bad.err.empty());
  ASSERT_TRUE(bad.out.empty());
  ASSERT_EQ(run({"schatten", write_temp("garbage.json", "\x01\x02 not json")}).code, 2);
}

TEST(cli, norm_examples) {
  std::string t2 = example_file("transpose");
  json a = json::parse(run({"norm", t2, "--q", "1", "--p", "1"}).out);
  ASSERT_NEAR(a["value"].get<double>(), 1.0, 2e-3);
  ASSERT_EQ(a["seed"], 42);
  ASSERT_EQ(a["restarts_used"], 32);
  ASSERT_TRUE(a["converged"].get<bool>());

  json b = json::parse(run({"norm", t2, "--q", "1", "--p", "1", "--stabilize", "2"}).out);
  ASSERT_NEAR(b["value"].get<double>(), 2.0, 2e-3);

  std::string d4 = example_file("dim4_pair");
  json c = json::parse(run({"norm", d4, "--q", "1", "--p", "1", "--hermitian"}).out);
  ASSERT_NEAR(c["value"].get<double>(), std::sqrt(2.0), 2e-3);

  json s = json::parse(run({"stabilized", t2, "--p", "1"}).out);
  ASSERT_NEAR(s["value"].get<double>(), 2.0, 2e-3);
}

TEST(cli, norm_output_is_byte_deterministic) {
  std::string phi = write_temp("rand.json", io::channel_to_json(suite::random_superop(2, 3, 2, 8)).dump());
  std::vector<std::string> args{"norm", phi, "--q", "2", "--p", "3", "--seed", "7", "--restarts", "5"};
  Result a = run(args);
  Result b = run(args);
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(a.out, b.out);
  ASSERT_EQ(json::parse(a.out)["seed"], 7);
}

TEST(cli, norm_errors) {
  std::string t2 = example_file("transpose");
  ASSERT_EQ(run({"norm", t2, "--q", "0.5", "--p", "1"}).code, 2);
  ASSERT_EQ(run({"norm", t2, "--q", "1", "--p", "0"}).code, 2);
  ASSERT_EQ(run({"norm", t2, "--restarts", "0"}).code, 2);
  ASSERT_EQ(run({"norm", t2, "--seed", "-3"}).code, 2);
  json bad = io::channel_to_json(SuperOp::identity(2));
  bad["dim_in"] = 3;
  ASSERT_EQ(run({"norm", write_temp("mismatch.json", bad.dump())}).code, 2);
  ASSERT_EQ(run({"norm"}).code, 2);
}

TEST(cli, verify_examples) {
  Result a = run({"verify", "--suite", "monotone_p"});
  ASSERT_EQ(a.code, 0);
  json r = json::parse(a.out);
  ASSERT_TRUE(r["passed"].get<bool>());
  ASSERT_EQ(r["trials"], 50);

  Result b = run({"verify", "--suite", "theorem1", "--trials", "20"});
  ASSERT_EQ(b.code, 0);
  json t = json::parse(b.out);
  ASSERT_TRUE(t["passed"].get<bool>());
  ASSERT_EQ(t["tolerance"], 2e-3);

  Result c = run({"verify", "--suite", "transpose_instability"});
  ASSERT_EQ(c.code, 0);
  ASSERT_LE(json::parse(c.out)["worst_residual"].get<double>(), 2e-3);
}

TEST(cli, verify_errors) {
  ASSERT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  ASSERT_EQ(run({"verify"}).code, 2);
  ASSERT_EQ(run({"verify", "--suite", "monotone_p", "--trials", "0"}).code, 2);
}

TEST(cli, example_and_explore) {
  Result a = run({"example", "dim4_pair"});
  ASSERT_EQ(a.code, 0);
  SuperOp diff = io::channel_from_json(json::parse(a.out));
  ASSERT_EQ(diff.dim_out(), 4u);
  ASSERT_EQ(diff.num_terms(), 8u);
  SuperOp first = io::channel_from_json(json::parse(run({"example", "dim4_pair", "--part", "first"}).out));
  ASSERT_TRUE(first.has_manifest_cp_form());
  ASSERT_EQ(run({"example", "transpose", "--part", "first"}).code, 2);
  ASSERT_EQ(run({"example", "nope"}).code, 2);
  ASSERT_EQ(run({"example", "dim4_pair"}).out, a.out);

  Result e = run({"explore", example_file("transpose"), "--question", "2", "--restarts", "8"});
  ASSERT_EQ(e.code, 0);
  json r = json::parse(e.out);
  ASSERT_EQ(r["samples"].size(), 4u);
  ASSERT_NEAR(r["reference"].get<double>(), 2.0, 2e-3);
  ASSERT_EQ(run({"explore", example_file("transpose"), "--question", "5"}).code, 2);
}

TEST(cli, usage) {
  ASSERT_EQ(run({}).code, 2);
  ASSERT_EQ(run({"frobnicate"}).code, 2);
  Result help = run({"norm", "--help"});
  ASSERT_EQ(help.code, 0);
  ASSERT_NE(help.out.find("[42]"), std::string::npos);
  ASSERT_NE(help.out.find("[32]"), std::string::npos);
  ASSERT_NE(run({"verify", "--help"}).out.find("[50]"), std::string::npos);
}
