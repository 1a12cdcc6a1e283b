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
#include <cstdint>
#include <string>
#include <vector>

#include "supernorm/matrix.hpp"
#include "supernorm/schatten.hpp"
#include "supernorm/superop.hpp"

namespace supernorm {

/// Which induced norm to compute: sup ||Phi(X)||_p / ||X||_q, optionally only
/// over Hermitian X, optionally for Phi (x) I_k.
struct NormQuery {
  SchattenExponent q{1.0};
  SchattenExponent p{1.0};
  bool hermitian_restricted = false;
  std::size_t stabilize_dim = 0;  // 0: no tensoring with the identity
};

struct OptimizerConfig {
  std::size_t restarts = 32;
  std::size_t max_iterations = 5000;
  double step_tolerance = 1e-9;
  double objective_tolerance = 1e-10;
  std::uint64_t seed = 42;

  /// Throws InvalidInput unless restarts >= 1 and both tolerances are positive.
  void validate() const;
};

/// Best value found and the operator attaining it. `value` is recomputed from
/// `achiever` (which has unit q-norm), so it is always a certified lower bound.
struct NormEstimate {
  double value = 0.0;
  ComplexMatrix achiever{1, 1};
  std::size_t restarts_used = 0;
  std::size_t best_restart = 0;
  bool converged = false;
};

/// ||Phi||_{1->p} (or its Hermitian restriction) over rank-one inputs |u><v|
/// (|u><u| when `hermitian`).
NormEstimate norm_1_to_p(const SuperOp& phi, SchattenExponent p, bool hermitian, const OptimizerConfig& cfg);

/// General ||Phi||_{q->p}. Dispatches to norm_1_to_p for q = 1 and applies
/// tensor_identity first when query.stabilize_dim > 0.
NormEstimate norm_q_to_p(const SuperOp& phi, const NormQuery& query, const OptimizerConfig& cfg);

/// Maximum over PSD inputs only. For completely positive maps this equals the
/// unrestricted norm. Throws PreconditionError if `phi` is not CP.
NormEstimate cp_norm(const SuperOp& phi, const NormQuery& query, const OptimizerConfig& cfg);

/// ||Phi (x) I_{dim_in}||_{1->p}; the diamond norm is p = 1, hermitian = false.
NormEstimate stabilized_norm(const SuperOp& phi, SchattenExponent p, bool hermitian, const OptimizerConfig& cfg);

/// Deterministic grid maximum of ||Phi(X)||_p over a real parameterization of
/// the unit q-sphere (Hermitian part of it when requested). Supports
/// dim_in <= 2 after stabilization. A coarse grid is followed by a grid-aligned
/// compass refinement around the best cells until the spacing on every axis is
/// at most range / resolution. Always a lower bound on the true norm.
/// Throws UnsupportedInstance for larger inputs.
double brute_force_oracle(const SuperOp& phi, const NormQuery& query, std::size_t resolution);

struct SplitBound {
  double lhs;  // ||Phi||_{q->p}
  double rhs;  // sqrt(||Phi_L||^H_{q->p} * ||Phi_R||^H_{q->p})
};

/// Compares the norm of Phi with the geometric mean of the Hermitian norms of
/// the CP maps built from its left and right Kraus lists.
SplitBound left_right_bound(const SuperOp& phi, const NormQuery& query, const OptimizerConfig& cfg);

struct ExplorationSample {
  std::string label;
  std::size_t ancilla = 0;
  double value = 0.0;
};

/// Non-verdict numeric report for one of the open questions:
///   1: min over Kraus remixings of ||Phi_L||_p ||Phi_R||_p vs ||Phi (x) I||_p^2
///   2: ||Phi (x) I_k||_{q->p} for k = 1 .. dim_in + 2
///   3: as 2, flagged with whether Phi is CP
struct ExplorationReport {
  int question = 0;
  std::vector<ExplorationSample> samples;
  double reference = 0.0;  // Q1: ||Phi (x) I_{dim_in}||_p^2; Q2/Q3: value at k = dim_in
  double extremum = 0.0;   // Q1: smallest product seen; Q2/Q3: largest value seen
  bool completely_positive = false;
};

/// Runs `remixings` random representation changes for question 1.
ExplorationReport explore_open_question(const SuperOp& phi, int question, const NormQuery& query,
                                        const OptimizerConfig& cfg, std::size_t remixings = 16);

}  // namespace supernorm
