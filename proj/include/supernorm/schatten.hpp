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

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>

#include "supernorm/matrix.hpp"

namespace supernorm {

/// An exponent p in [1, inf]. Infinity is a distinguished value, never a
/// large finite stand-in.
class SchattenExponent {
 public:
  /// Throws InvalidExponent unless value >= 1 (+inf accepted).
  explicit SchattenExponent(double value);

  static SchattenExponent infinity() { return SchattenExponent(std::numeric_limits<double>::infinity()); }
  /// Accepts "inf" (also "infinity", case-insensitive) or a decimal >= 1.
  static SchattenExponent parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  /// +inf when is_infinite().
  double value() const { return value_; }
  /// "inf" or the shortest decimal that round-trips.
  std::string to_string() const;

  friend bool operator==(const SchattenExponent&, const SchattenExponent&) = default;

 private:
  double value_;
  bool infinite_;
};

/// (sum s_i^p)^(1/p), or max s_i for p = inf.
double schatten_norm_of_values(std::span<const double> values, SchattenExponent p);
double schatten_norm(const ComplexMatrix& x, SchattenExponent p);

/// p* with 1/p + 1/p* = 1.
SchattenExponent dual_exponent(SchattenExponent p);

/// Y with ||Y||_{p*} = 1 and <Y, X> = ||X||_p, sharing the singular vectors of X.
/// Throws InvalidInput for X = 0.
ComplexMatrix duality_witness(const ComplexMatrix& x, SchattenExponent p);
/// Same, reusing an existing decomposition of X.
ComplexMatrix duality_witness(const SpectralData& x, SchattenExponent p);

/// Hermitian analogue of duality_witness: for a Hermitian H returns a Hermitian
/// Y with ||Y||_{p*} = 1 maximizing <Y, H>, which then equals ||H||_p. With
/// `positive_only` the maximization runs over PSD Y and the value is ||H_+||_p.
/// Throws InvalidInput when the relevant spectrum is zero.
ComplexMatrix hermitian_duality_witness(const ComplexMatrix& h, SchattenExponent p, bool positive_only = false);

struct BlockNormBounds {
  double lhs;  // sum over blocks of ||X_ij||_p^2
  double rhs;  // ||X||_p^2
};

/// Splits X into a block_rows x block_cols grid of equally sized contiguous
/// blocks. For p in [1,2] lhs <= rhs; for p in [2,inf] rhs <= lhs.
BlockNormBounds block_norm_bounds(const ComplexMatrix& x, std::size_t block_rows, std::size_t block_cols,
                                  SchattenExponent p);

/// ||X||_p ||Y||_{p*} - |<X, Y>|, never below -1e-9.
double hoelder_gap(const ComplexMatrix& x, const ComplexMatrix& y, SchattenExponent p);

}  // namespace supernorm
