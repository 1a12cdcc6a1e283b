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
#include <vector>

#include "supernorm/matrix.hpp"

namespace supernorm {

/// Super-operator in generalized Kraus form  Phi(X) = sum_i A_i X B_i^*.
///
/// The map is stored only through this representation; no canonical form is
/// computed, so phi_L / phi_R depend on the chosen Kraus pairs.
class SuperOp {
 public:
  /// Throws InvalidInput if the lists are empty, differ in length, or any
  /// term is not dim_out x dim_in.
  SuperOp(std::size_t dim_in, std::size_t dim_out, std::vector<ComplexMatrix> kraus_left,
          std::vector<ComplexMatrix> kraus_right);

  /// Completely positive form  Phi(X) = sum_i A_i X A_i^*.
  static SuperOp completely_positive(std::vector<ComplexMatrix> kraus);
  static SuperOp identity(std::size_t dim);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  std::size_t num_terms() const { return left_.size(); }
  const std::vector<ComplexMatrix>& kraus_left() const { return left_; }
  const std::vector<ComplexMatrix>& kraus_right() const { return right_; }

  /// True when every right term equals the corresponding left term.
  bool has_manifest_cp_form() const;

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  std::vector<ComplexMatrix> left_;
  std::vector<ComplexMatrix> right_;
};

ComplexMatrix apply(const SuperOp& phi, const ComplexMatrix& x);

/// Adjoint map  Y -> sum_i A_i^* Y B_i, so that <Y, Phi(X)> = <Phi^*(Y), X>.
ComplexMatrix apply_adjoint(const SuperOp& phi, const ComplexMatrix& y);

/// Phi (x) I_{L(C^k)}, with the ancilla as the second tensor factor.
SuperOp tensor_identity(const SuperOp& phi, std::size_t k);

SuperOp phi_L(const SuperOp& phi);
SuperOp phi_R(const SuperOp& phi);

/// Block operator whose (i, j) block is Phi(|i><j|).
ComplexMatrix choi_matrix(const SuperOp& phi);

bool is_completely_positive(const SuperOp& phi, double tol);
bool is_trace_preserving(const SuperOp& phi, double tol);

/// phi0 - phi1, built by concatenating the Kraus lists and negating the
/// right-hand terms of phi1.
SuperOp difference(const SuperOp& phi0, const SuperOp& phi1);

/// c * Phi (scales the left terms).
SuperOp scaled(const SuperOp& phi, Complex c);

}  // namespace supernorm
