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

#include "supernorm/superop.hpp"

#include <string>
#include <utility>

#include "supernorm/error.hpp"
#include "supernorm/schatten.hpp"

namespace supernorm {

SuperOp::SuperOp(std::size_t dim_in, std::size_t dim_out, std::vector<ComplexMatrix> kraus_left,
                 std::vector<ComplexMatrix> kraus_right)
    : dim_in_(dim_in), dim_out_(dim_out), left_(std::move(kraus_left)), right_(std::move(kraus_right)) {
  if (dim_in_ == 0 || dim_out_ == 0) throw InvalidInput("SuperOp: dimensions must be positive");
  if (left_.empty()) throw InvalidInput("SuperOp: at least one Kraus pair is required");
  if (left_.size() != right_.size()) {
    throw InvalidInput("SuperOp: kraus_left has " + std::to_string(left_.size()) + " terms but kraus_right has " +
                       std::to_string(right_.size()));
  }
  auto check = [&](const ComplexMatrix& m, const char* side, std::size_t i) {
    if (m.rows() != dim_out_ || m.cols() != dim_in_) {
      throw InvalidInput(std::string("SuperOp: ") + side + "[" + std::to_string(i) + "] is " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(dim_out_) + "x" + std::to_string(dim_in_));
    }
  };
  for (std::size_t i = 0; i < left_.size(); ++i) {
    check(left_[i], "kraus_left", i);
    check(right_[i], "kraus_right", i);
  }
}

SuperOp SuperOp::completely_positive(std::vector<ComplexMatrix> kraus) {
  if (kraus.empty()) throw InvalidInput("SuperOp: at least one Kraus operator is required");
  const std::size_t dim_out = kraus.front().rows();
  const std::size_t dim_in = kraus.front().cols();
  std::vector<ComplexMatrix> right = kraus;
  return SuperOp(dim_in, dim_out, std::move(kraus), std::move(right));
}

SuperOp SuperOp::identity(std::size_t dim) { return completely_positive({ComplexMatrix::identity(dim)}); }

bool SuperOp::has_manifest_cp_form() const {
  for (std::size_t i = 0; i < left_.size(); ++i) {
    if (!(left_[i] == right_[i])) return false;
  }
  return true;
}

ComplexMatrix apply(const SuperOp& phi, const ComplexMatrix& x) {
  if (x.rows() != phi.dim_in() || x.cols() != phi.dim_in()) {
    throw InvalidInput("apply: input is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                       ", map expects " + std::to_string(phi.dim_in()) + "x" + std::to_string(phi.dim_in()));
  }
  const auto n = static_cast<Eigen::Index>(phi.dim_out());
  DenseMatrix out = DenseMatrix::Zero(n, n);
  DenseMatrix tmp;
  for (std::size_t i = 0; i < phi.num_terms(); ++i) {
    tmp.noalias() = phi.kraus_left()[i].dense() * x.dense();
    out.noalias() += tmp * phi.kraus_right()[i].dense().adjoint();
  }
  return ComplexMatrix(std::move(out));
}

ComplexMatrix apply_adjoint(const SuperOp& phi, const ComplexMatrix& y) {
  if (y.rows() != phi.dim_out() || y.cols() != phi.dim_out()) {
    throw InvalidInput("apply_adjoint: input is " + std::to_string(y.rows()) + "x" + std::to_string(y.cols()) +
                       ", map output is " + std::to_string(phi.dim_out()) + "x" + std::to_string(phi.dim_out()));
  }
  const auto n = static_cast<Eigen::Index>(phi.dim_in());
  DenseMatrix out = DenseMatrix::Zero(n, n);
  DenseMatrix tmp;
  for (std::size_t i = 0; i < phi.num_terms(); ++i) {
    tmp.noalias() = phi.kraus_left()[i].dense().adjoint() * y.dense();
    out.noalias() += tmp * phi.kraus_right()[i].dense();
  }
  return ComplexMatrix(std::move(out));
}

SuperOp tensor_identity(const SuperOp& phi, std::size_t k) {
  if (k == 0) throw InvalidInput("tensor_identity: ancilla dimension must be positive");
  if (k == 1) return phi;
  const ComplexMatrix id = ComplexMatrix::identity(k);
  std::vector<ComplexMatrix> left;
  std::vector<ComplexMatrix> right;
  left.reserve(phi.num_terms());
  right.reserve(phi.num_terms());
  for (std::size_t i = 0; i < phi.num_terms(); ++i) {
    left.push_back(tensor(phi.kraus_left()[i], id));
    right.push_back(tensor(phi.kraus_right()[i], id));
  }
  return SuperOp(phi.dim_in() * k, phi.dim_out() * k, std::move(left), std::move(right));
}

SuperOp phi_L(const SuperOp& phi) { return SuperOp::completely_positive(phi.kraus_left()); }
SuperOp phi_R(const SuperOp& phi) { return SuperOp::completely_positive(phi.kraus_right()); }

ComplexMatrix choi_matrix(const SuperOp& phi) {
  const std::size_t n = phi.dim_in();
  const auto m = static_cast<Eigen::Index>(phi.dim_out());
  DenseMatrix out = DenseMatrix::Zero(static_cast<Eigen::Index>(n) * m, static_cast<Eigen::Index>(n) * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix unit = ComplexMatrix::outer(ket(n, i), ket(n, j));
      out.block(static_cast<Eigen::Index>(i) * m, static_cast<Eigen::Index>(j) * m, m, m) = apply(phi, unit).dense();
    }
  }
  return ComplexMatrix(std::move(out));
}

bool is_completely_positive(const SuperOp& phi, double tol) { return is_psd(choi_matrix(phi), tol); }

bool is_trace_preserving(const SuperOp& phi, double tol) {
  const auto n = static_cast<Eigen::Index>(phi.dim_in());
  DenseMatrix sum = DenseMatrix::Zero(n, n);
  for (std::size_t i = 0; i < phi.num_terms(); ++i) {
    sum.noalias() += phi.kraus_right()[i].dense().adjoint() * phi.kraus_left()[i].dense();
  }
  sum -= DenseMatrix::Identity(n, n);
  if (sum.isZero(0.0)) return true;
  return schatten_norm(ComplexMatrix(std::move(sum)), SchattenExponent::infinity()) <= tol;
}

SuperOp difference(const SuperOp& phi0, const SuperOp& phi1) {
  if (phi0.dim_in() != phi1.dim_in() || phi0.dim_out() != phi1.dim_out()) {
    throw InvalidInput("difference: maps have different dimensions");
  }
  std::vector<ComplexMatrix> left = phi0.kraus_left();
  std::vector<ComplexMatrix> right = phi0.kraus_right();
  for (std::size_t i = 0; i < phi1.num_terms(); ++i) {
    left.push_back(phi1.kraus_left()[i]);
    right.push_back(-phi1.kraus_right()[i]);
  }
  return SuperOp(phi0.dim_in(), phi0.dim_out(), std::move(left), std::move(right));
}

SuperOp scaled(const SuperOp& phi, Complex c) {
  std::vector<ComplexMatrix> left;
  left.reserve(phi.num_terms());
  for (const ComplexMatrix& a : phi.kraus_left()) left.push_back(c * a);
  return SuperOp(phi.dim_in(), phi.dim_out(), std::move(left), phi.kraus_right());
}

}  // namespace supernorm
