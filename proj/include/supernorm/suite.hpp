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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "supernorm/superop.hpp"

namespace supernorm::suite {

// ---------------------------------------------------------------------------
// Fixed constructions

/// Phi(X) = |0><0| X |1><0| on qubits.
SuperOp simple_nonhermitian();
/// Phi(X) = 1/2 |0><0| X |0><0| + i/2 |0><1| X |1><0| on qubits.
SuperOp qinf_nonhermitian();
/// (identity, completely depolarizing X -> tr(X) I / 2) on qubits.
std::pair<SuperOp, SuperOp> depolarizing_pair();
/// The qubit-to-ququart CPTP pair whose difference separates the Hermitian
/// and unrestricted trace norms.
std::pair<SuperOp, SuperOp> dim4_pair();
/// X -> X^T on C^n.
SuperOp transpose_map(std::size_t n);

struct Example {
  std::string name;
  SuperOp map;                                    // for pairs: first - second
  std::optional<std::pair<SuperOp, SuperOp>> pair;
};

/// Names: simple_nonhermitian, qinf_nonhermitian, depolarizing_pair,
/// dim4_pair, transpose (n = 2) or transpose(n). Throws InvalidInput otherwise.
Example build_example(std::string_view name);

// ---------------------------------------------------------------------------
// Random instances (deterministic per seed)

/// Complex Gaussian Kraus operators rescaled so sum A_i^* A_i has norm 0.81,
/// completed to a trace-preserving map with extra terms.
SuperOp random_cp_channel(std::size_t dim_in, std::size_t dim_out, std::size_t n_kraus, std::uint64_t seed);
/// Independent complex Gaussian left and right lists.
SuperOp random_superop(std::size_t dim_in, std::size_t dim_out, std::size_t n_terms, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Verification

struct TrialRecord {
  std::size_t trial = 0;
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

struct VerificationReport {
  std::string claim_id;
  std::size_t trials = 0;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> details;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 50;
  std::size_t restarts = 32;
};

/// Every known claim id, in a fixed order.
const std::vector<std::string>& claim_ids();

/// Tolerance a claim is checked against.
double claim_tolerance(std::string_view claim_id);

/// Runs one claim. Throws InvalidInput for an unknown id.
VerificationReport verify(std::string_view claim_id, const SuiteOptions& options = {});

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace supernorm::suite
