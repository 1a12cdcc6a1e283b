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

#include "supernorm/schatten.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "supernorm/error.hpp"

namespace supernorm {

SchattenExponent::SchattenExponent(double value) : value_(value), infinite_(std::isinf(value)) {
  if (std::isnan(value) || value < 1.0) {
    throw InvalidExponent("Schatten exponent must lie in [1, inf], got " + std::to_string(value));
  }
}

SchattenExponent SchattenExponent::parse(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "inf" || lower == "infinity") return infinity();
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw InvalidExponent("cannot parse Schatten exponent '" + std::string(text) + "'");
  }
  return SchattenExponent(value);
}

std::string SchattenExponent::to_string() const {
  if (infinite_) return "inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value_);
  return std::string(buf.data(), ptr);
}

double schatten_norm_of_values(std::span<const double> values, SchattenExponent p) {
  double top = 0.0;
  for (double s : values) top = std::max(top, std::abs(s));
  if (top == 0.0) return 0.0;
  if (p.is_infinite()) return top;
  const double exponent = p.value();
  const double floor = exponent < 1.0001 ? 1e-300 : 0.0;
  double sum = 0.0;
  for (double s : values) {
    const double a = std::abs(s);
    if (a <= floor) continue;
    sum += std::pow(a / top, exponent);
  }
  return top * std::pow(sum, 1.0 / exponent);
}

double schatten_norm(const ComplexMatrix& x, SchattenExponent p) {
  Eigen::JacobiSVD<DenseMatrix> solver(x.dense());
  const auto& sv = solver.singularValues();
  return schatten_norm_of_values(std::span<const double>(sv.data(), static_cast<std::size_t>(sv.size())), p);
}

SchattenExponent dual_exponent(SchattenExponent p) {
  if (p.is_infinite()) return SchattenExponent(1.0);
  if (p.value() == 1.0) return SchattenExponent::infinity();
  return SchattenExponent(p.value() / (p.value() - 1.0));
}

namespace {

// Weights w_i >= 0 with ||w||_{p*} = 1 and sum w_i a_i = ||a||_p for the
// non-negative profile a (sorted or not). Entries not above the cutoff get 0.
std::vector<double> dual_weights(const std::vector<double>& a, SchattenExponent p, double cutoff) {
  std::vector<double> w(a.size(), 0.0);
  const auto top_it = std::max_element(a.begin(), a.end());
  const double top = *top_it;
  if (p.is_infinite()) {
    w[static_cast<std::size_t>(top_it - a.begin())] = 1.0;
    return w;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= cutoff) continue;
    w[i] = p.value() == 1.0 ? 1.0 : std::pow(a[i] / top, p.value() - 1.0);
  }
  const double scale = schatten_norm_of_values(w, dual_exponent(p));
  for (double& x : w) x /= scale;
  return w;
}

}  // namespace

ComplexMatrix duality_witness(const ComplexMatrix& x, SchattenExponent p) { return duality_witness(svd(x), p); }

ComplexMatrix duality_witness(const SpectralData& sd, SchattenExponent p) {
  if (sd.rank == 0) throw InvalidInput("duality_witness: X must be non-zero");
  const double cutoff = kRankCutoff * sd.singular_values.front();
  const std::vector<double> w = dual_weights(sd.singular_values, p, cutoff);
  const DenseMatrix& u = sd.left_vectors.dense();
  const DenseMatrix& v = sd.right_vectors.dense();
  Eigen::VectorXd weights = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
  return ComplexMatrix(DenseMatrix(u * weights.cast<Complex>().asDiagonal() * v.adjoint()));
}

ComplexMatrix hermitian_duality_witness(const ComplexMatrix& h, SchattenExponent p, bool positive_only) {
  const HermitianEigen eig = hermitian_eigen(h);
  std::vector<double> magnitude(eig.eigenvalues.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < magnitude.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    scale = std::max(scale, std::abs(lambda));
    magnitude[i] = positive_only ? std::max(lambda, 0.0) : std::abs(lambda);
  }
  const double cutoff = kRankCutoff * scale;
  if (scale == 0.0 || *std::max_element(magnitude.begin(), magnitude.end()) <= cutoff) {
    throw InvalidInput("hermitian_duality_witness: spectrum is zero");
  }
  std::vector<double> w = dual_weights(magnitude, p, cutoff);
  Eigen::VectorXd signed_w(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    signed_w(static_cast<Eigen::Index>(i)) = eig.eigenvalues[i] < 0.0 ? -w[i] : w[i];
  }
  const DenseMatrix& u = eig.eigenvectors.dense();
  DenseMatrix y = u * signed_w.cast<Complex>().asDiagonal() * u.adjoint();
  y = 0.5 * (y + y.adjoint()).eval();
  return ComplexMatrix(std::move(y));
}

BlockNormBounds block_norm_bounds(const ComplexMatrix& x, std::size_t block_rows, std::size_t block_cols,
                                  SchattenExponent p) {
  if (block_rows == 0 || block_cols == 0 || x.rows() % block_rows != 0 || x.cols() % block_cols != 0) {
    throw InvalidInput("block_norm_bounds: " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                       " does not split evenly into " + std::to_string(block_rows) + "x" +
                       std::to_string(block_cols) + " blocks");
  }
  const auto h = static_cast<Eigen::Index>(x.rows() / block_rows);
  const auto w = static_cast<Eigen::Index>(x.cols() / block_cols);
  double lhs = 0.0;
  for (std::size_t i = 0; i < block_rows; ++i) {
    for (std::size_t j = 0; j < block_cols; ++j) {
      const DenseMatrix block =
          x.dense().block(static_cast<Eigen::Index>(i) * h, static_cast<Eigen::Index>(j) * w, h, w);
      const double n = schatten_norm(ComplexMatrix(block), p);
      lhs += n * n;
    }
  }
  const double full = schatten_norm(x, p);
  return BlockNormBounds{lhs, full * full};
}

double hoelder_gap(const ComplexMatrix& x, const ComplexMatrix& y, SchattenExponent p) {
  return schatten_norm(x, p) * schatten_norm(y, dual_exponent(p)) - std::abs(inner(x, y));
}

}  // namespace supernorm
