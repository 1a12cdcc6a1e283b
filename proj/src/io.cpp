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

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "supernorm/error.hpp"

namespace supernorm::io {

namespace {

std::size_t positive_count(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw InvalidInput(std::string("field '") + key + "' must be an integer");
  }
  const auto n = v.get<long long>();
  if (n <= 0) throw InvalidInput(std::string("field '") + key + "' must be positive");
  return static_cast<std::size_t>(n);
}

double finite_number(const json& v) {
  if (!v.is_number()) throw InvalidInput("matrix entry components must be numbers");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InvalidInput("matrix entries must be finite");
  return x;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const Complex& z : m.entries()) entries.push_back(json::array({z.real(), z.imag()}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("matrix must be a JSON object");
  const std::size_t rows = positive_count(j, "rows");
  const std::size_t cols = positive_count(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array()) throw InvalidInput("missing array field 'entries'");
  const json& entries = j.at("entries");
  if (entries.size() != rows * cols) {
    throw InvalidInput("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
  }
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("each entry must be a [re, im] pair");
    values.emplace_back(finite_number(e[0]), finite_number(e[1]));
  }
  return ComplexMatrix(rows, cols, values);
}

json channel_to_json(const SuperOp& phi) {
  json left = json::array();
  for (const ComplexMatrix& a : phi.kraus_left()) left.push_back(matrix_to_json(a));
  json out{{"dim_in", phi.dim_in()}, {"dim_out", phi.dim_out()}, {"kraus_left", std::move(left)}};
  if (!phi.has_manifest_cp_form()) {
    json right = json::array();
    for (const ComplexMatrix& b : phi.kraus_right()) right.push_back(matrix_to_json(b));
    out["kraus_right"] = std::move(right);
  }
  return out;
}

SuperOp channel_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("channel must be a JSON object");
  const std::size_t dim_in = positive_count(j, "dim_in");
  const std::size_t dim_out = positive_count(j, "dim_out");
  auto read_list = [&](const char* key) {
    const json& list = j.at(key);
    if (!list.is_array() || list.empty()) throw InvalidInput(std::string("'") + key + "' must be a non-empty array");
    std::vector<ComplexMatrix> out;
    for (const json& m : list) out.push_back(matrix_from_json(m));
    return out;
  };
  if (!j.contains("kraus_left")) throw InvalidInput("missing field 'kraus_left'");
  std::vector<ComplexMatrix> left = read_list("kraus_left");
  std::vector<ComplexMatrix> right = j.contains("kraus_right") ? read_list("kraus_right") : left;
  return SuperOp(dim_in, dim_out, std::move(left), std::move(right));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::exception& e) {
    throw InvalidInput("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

namespace {
template <typename F>
auto with_json_errors(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed input: ") + e.what());
  }
}
}  // namespace

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  return with_json_errors([&] { return matrix_from_json(j); });
}

SuperOp load_channel(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  return with_json_errors([&] { return channel_from_json(j); });
}

}  // namespace supernorm::io
