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

#include "supernorm/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

#include "supernorm/error.hpp"
#include "supernorm/random.hpp"
#include "supernorm/suite.hpp"

using namespace supernorm;
using nlohmann::json;

namespace {
std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("supernorm_io_" + name);
  std::ofstream(path) << text;
  return path;
}
}  // namespace

TEST(io, matrix_round_trip) {
  Rng rng(1);
  ComplexMatrix m = random_gaussian(2, 3, rng);
  ASSERT_EQ(io::matrix_from_json(io::matrix_to_json(m)), m);
  json j = io::matrix_to_json(ComplexMatrix{{1.0, Complex(0.0, 2.0)}});
  ASSERT_EQ(j.dump(), R"({"cols":2,"entries":[[1.0,0.0],[0.0,2.0]],"rows":1})");
}

TEST(io, matrix_rejects_malformed) {
  for (const char* text : {R"([])", R"({"rows":2,"cols":1})", R"({"rows":2,"cols":1,"entries":[[1,0]]})",
                           R"({"rows":0,"cols":1,"entries":[]})", R"({"rows":1,"cols":1,"entries":[[1]]})",
                           R"({"rows":1,"cols":1,"entries":[["a",0]]})", R"({"rows":1.5,"cols":1,"entries":[[1,0]]})",
                           R"({"rows":-1,"cols":1,"entries":[[1,0]]})"}) {
    ASSERT_THROW(io::matrix_from_json(json::parse(text)), InvalidInput) << text;
  }
}

TEST(io, channel_round_trip_and_defaults) {
  SuperOp phi = suite::random_superop(2, 3, 2, 4);
  SuperOp back = io::channel_from_json(io::channel_to_json(phi));
  ASSERT_EQ(back.kraus_left(), phi.kraus_left());
  ASSERT_EQ(back.kraus_right(), phi.kraus_right());

  json cp = io::channel_to_json(suite::random_cp_channel(2, 2, 1, 1));
  ASSERT_FALSE(cp.contains("kraus_right"));
  SuperOp cp_back = io::channel_from_json(cp);
  ASSERT_TRUE(cp_back.has_manifest_cp_form());
}

TEST(io, channel_rejects_malformed) {
  json good = io::channel_to_json(SuperOp::identity(2));
  json wrong_dim = good;
  wrong_dim["dim_in"] = 3;
  ASSERT_THROW(io::channel_from_json(wrong_dim), InvalidInput);
  json empty = good;
  empty["kraus_left"] = json::array();
  ASSERT_THROW(io::channel_from_json(empty), InvalidInput);
  json missing = good;
  missing.erase("kraus_left");
  ASSERT_THROW(io::channel_from_json(missing), InvalidInput);
  json mismatch = good;
  mismatch["kraus_right"] = json::array({io::matrix_to_json(ComplexMatrix::identity(2)),
                                         io::matrix_to_json(ComplexMatrix::identity(2))});
  ASSERT_THROW(io::channel_from_json(mismatch), InvalidInput);
}

TEST(io, file_errors) {
  ASSERT_THROW(io::load_matrix("/nonexistent/matrix.json"), InvalidInput);
  ASSERT_THROW(io::load_matrix(write_temp("bad.json", "{not json")), InvalidInput);
  ASSERT_THROW(io::load_channel(write_temp("wrongtype.json", R"({"dim_in":"2"})")), InvalidInput);
  ASSERT_THROW(io::load_channel(write_temp("wronglist.json", R"({"dim_in":1,"dim_out":1,"kraus_left":5})")),
               InvalidInput);
  ComplexMatrix m = io::load_matrix(write_temp("ok.json", R"({"rows":1,"cols":1,"entries":[[2.5,-1]]})"));
  ASSERT_EQ(m(0, 0), Complex(2.5, -1.0));
}
