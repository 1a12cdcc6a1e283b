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

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Eigenvalues>

#include "supernorm/matrix.hpp"

namespace supernorm::testing {

inline const double kInf = std::numeric_limits<double>::infinity();

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.dense() - b.dense()).cwiseAbs().maxCoeff();
}

inline ComplexMatrix proj(std::size_t n, std::size_t i, std::size_t j) { return ComplexMatrix::outer(ket(n, i), ket(n, j)); }

// Schatten norm from the eigenvalues +-s_i of the dilation [[0, X], [X^*, 0]];
// shares no code with the SVD path.
inline double reference_schatten(const ComplexMatrix& x, double p) {
  const Eigen::Index r = x.dense().rows();
  const Eigen::Index c = x.dense().cols();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(r + c, r + c);
  h.topRightCorner(r, c) = x.dense();
  h.bottomLeftCorner(c, r) = x.dense().adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  double top = 0.0;
  double sum = 0.0;
  // Ascending order: the largest min(r, c) eigenvalues are the singular values.
  for (Eigen::Index i = r + c - std::min(r, c); i < r + c; ++i) {
    const double s = std::max(0.0, es.eigenvalues()(i));
    top = std::max(top, s);
    if (!std::isinf(p)) sum += std::pow(s, p);
  }
  return std::isinf(p) ? top : std::pow(sum, 1.0 / p);
}

}  // namespace supernorm::testing
