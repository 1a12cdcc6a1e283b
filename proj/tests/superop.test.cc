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

#include <cmath>

#include "gtest/gtest.h"

#include "supernorm/error.hpp"
#include "supernorm/random.hpp"
#include "supernorm/schatten.hpp"
#include "supernorm/suite.hpp"
#include "test_util.h"

using namespace supernorm;
using supernorm::testing::max_diff;
using supernorm::testing::proj;

namespace {
const Complex I(0.0, 1.0);
const double kH = 1.0 / std::sqrt(2.0);

SuperOp random_map(std::size_t in, std::size_t out, std::size_t terms, Rng& rng) {
  std::vector<ComplexMatrix> a;
  std::vector<ComplexMatrix> b;
  for (std::size_t i = 0; i < terms; ++i) {
    a.push_back(random_gaussian(out, in, rng));
    b.push_back(random_gaussian(out, in, rng));
  }
  return SuperOp(in, out, a, b);
}
}  // namespace

TEST(superop, construction_validates_lists) {
  ASSERT_THROW(SuperOp(2, 2, {}, {}), InvalidInput);
  ASSERT_THROW(SuperOp(2, 2, {ComplexMatrix::identity(2)}, {}), InvalidInput);
  ASSERT_THROW(SuperOp(2, 2, {ComplexMatrix::identity(2)}, {ComplexMatrix::identity(3)}), InvalidInput);
  ASSERT_THROW(SuperOp(2, 3, {ComplexMatrix::identity(2)}, {ComplexMatrix::identity(2)}), InvalidInput);
  ASSERT_THROW(SuperOp(0, 2, {ComplexMatrix(2, 1)}, {ComplexMatrix(2, 1)}), InvalidInput);
  SuperOp phi(2, 3, {ComplexMatrix(3, 2)}, {ComplexMatrix(3, 2)});
  ASSERT_EQ(phi.dim_in(), 2u);
  ASSERT_EQ(phi.dim_out(), 3u);
  ASSERT_EQ(phi.num_terms(), 1u);
}

TEST(superop, apply_examples) {
  Rng rng(1);
  ComplexMatrix x = random_gaussian(3, 3, rng);
  ASSERT_LE(max_diff(apply(SuperOp::identity(3), x), x), 0.0);

  // |0><0| X |1><0| reads off <0|X|1>.
  ASSERT_LE(max_diff(apply(suite::simple_nonhermitian(), proj(2, 0, 1)), proj(2, 0, 0)), 1e-15);
  ASSERT_LE(max_abs(apply(suite::simple_nonhermitian(), proj(2, 1, 0))), 0.0);

  const std::vector<Complex> cw{kH, kH * I};
  const std::vector<Complex> ccw{kH, -kH * I};
  const SuperOp diff = suite::build_example("dim4_pair").map;
  std::vector<Complex> d{0.5, 0.5 * I, -0.5, -0.5 * I};
  ASSERT_LE(max_diff(apply(diff, ComplexMatrix::outer(cw, ccw)), ComplexMatrix::diagonal(d)), 1e-12);

  ASSERT_THROW(apply(SuperOp::identity(2), ComplexMatrix::identity(3)), InvalidInput);
  ASSERT_THROW(apply_adjoint(SuperOp::identity(2), ComplexMatrix(2, 3)), InvalidInput);
}

TEST(superop, apply_is_linear_and_adjoint_is_adjoint) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    SuperOp phi = random_map(2 + trial % 2, 1 + trial % 3, 1 + trial % 3, rng);
    ComplexMatrix x = random_gaussian(phi.dim_in(), phi.dim_in(), rng);
    ComplexMatrix z = random_gaussian(phi.dim_in(), phi.dim_in(), rng);
    ComplexMatrix y = random_gaussian(phi.dim_out(), phi.dim_out(), rng);
    const Complex a = rng.complex_normal();
    const Complex b = rng.complex_normal();
    ASSERT_LE(max_diff(apply(phi, a * x + b * z), a * apply(phi, x) + b * apply(phi, z)), 1e-10);
    ASSERT_LE(std::abs(inner(y, apply(phi, x)) - inner(apply_adjoint(phi, y), x)), 1e-10);
  }
}

TEST(superop, tensor_identity_examples) {
  Rng rng(3);
  SuperOp phi = random_map(2, 3, 2, rng);
  SuperOp same = tensor_identity(phi, 1);
  ASSERT_EQ(same.num_terms(), phi.num_terms());
  for (std::size_t i = 0; i < phi.num_terms(); ++i) {
    ASSERT_EQ(same.kraus_left()[i], phi.kraus_left()[i]);
    ASSERT_EQ(same.kraus_right()[i], phi.kraus_right()[i]);
  }
  ASSERT_THROW(tensor_identity(phi, 0), InvalidInput);

  ComplexMatrix x = random_gaussian(6, 6, rng);
  ASSERT_LE(max_diff(apply(tensor_identity(SuperOp::identity(2), 3), x), x), 0.0);

  // Transpose on one half of the maximally entangled projector gives the swap / 2.
  std::vector<Complex> omega{kH, 0.0, 0.0, kH};
  ComplexMatrix out = apply(tensor_identity(suite::transpose_map(2), 2), ComplexMatrix::outer(omega, omega));
  ASSERT_NEAR(schatten_norm(out, SchattenExponent(1.0)), 2.0, 1e-12);
}

TEST(superop, tensor_identity_acts_on_products_and_composes) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    SuperOp phi = random_map(2, 2 + trial % 2, 2, rng);
    ComplexMatrix x = random_gaussian(2, 2, rng);
    ComplexMatrix z = random_gaussian(3, 3, rng);
    ASSERT_LE(max_diff(apply(tensor_identity(phi, 3), tensor(x, z)), tensor(apply(phi, x), z)), 1e-10);

    ComplexMatrix w = random_gaussian(6, 6, rng);
    ASSERT_LE(max_diff(apply(tensor_identity(tensor_identity(phi, 2), 3), tensor(x, w)),
                       apply(tensor_identity(phi, 6), tensor(x, w))),
              1e-10);
  }
}

TEST(superop, left_and_right_maps) {
  Rng rng(5);
  std::vector<ComplexMatrix> kraus{random_gaussian(2, 2, rng), random_gaussian(2, 2, rng)};
  SuperOp cp = SuperOp::completely_positive(kraus);
  ComplexMatrix x = random_gaussian(2, 2, rng);
  ASSERT_LE(max_diff(apply(phi_L(cp), x), apply(cp, x)), 1e-12);
  ASSERT_LE(max_diff(apply(phi_R(cp), x), apply(cp, x)), 1e-12);

  SuperOp ab(2, 2, {proj(2, 0, 0)}, {proj(2, 1, 1)});
  ASSERT_LE(max_diff(apply(phi_L(ab), x), proj(2, 0, 0) * x * proj(2, 0, 0)), 1e-15);
  ASSERT_LE(max_diff(apply(phi_R(ab), x), proj(2, 1, 1) * x * proj(2, 1, 1)), 1e-15);

  SuperOp simple = suite::simple_nonhermitian();
  ASSERT_LE(max_diff(apply(phi_R(simple), x), proj(2, 0, 1) * x * proj(2, 1, 0)), 1e-15);

  for (int trial = 0; trial < 20; ++trial) {
    SuperOp phi = random_map(2, 3, 2, rng);
    ASSERT_TRUE(is_completely_positive(phi_L(phi), 1e-9));
    ASSERT_TRUE(is_completely_positive(phi_R(phi), 1e-9));
  }
}

TEST(superop, choi_layout) {
  SuperOp t = suite::transpose_map(2);
  ComplexMatrix choi = choi_matrix(t);
  ASSERT_EQ(choi.rows(), 4u);
  // Block (i,j) holds T(|i><j|) = |j><i|, so the Choi matrix is the swap.
  ComplexMatrix swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  ASSERT_LE(max_diff(choi, swap), 0.0);
}

TEST(superop, complete_positivity) {
  Rng rng(6);
  SuperOp cp = SuperOp::completely_positive({random_gaussian(3, 2, rng), random_gaussian(3, 2, rng)});
  ASSERT_TRUE(cp.has_manifest_cp_form());
  ASSERT_TRUE(is_completely_positive(cp, 1e-9));
  ASSERT_FALSE(is_completely_positive(suite::transpose_map(2), 1e-9));
  ASSERT_FALSE(is_completely_positive(suite::build_example("dim4_pair").map, 1e-9));
  ASSERT_LT(hermitian_eigen(choi_matrix(suite::build_example("dim4_pair").map)).eigenvalues.front(), -0.1);
}

TEST(superop, cp_maps_preserve_psd) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < 1 + trial % 3; ++i) kraus.push_back(random_gaussian(2 + trial % 2, 3, rng));
    SuperOp phi = SuperOp::completely_positive(kraus);
    ComplexMatrix w = random_gaussian(3, 3, rng);
    ASSERT_TRUE(is_psd(apply(phi, w.adjoint() * w), 1e-9));
  }
}

TEST(superop, trace_preservation) {
  ASSERT_TRUE(is_trace_preserving(SuperOp::identity(3), 1e-12));
  auto [phi0, phi1] = suite::dim4_pair();
  ASSERT_TRUE(is_trace_preserving(phi0, 1e-12));
  ASSERT_TRUE(is_trace_preserving(phi1, 1e-12));
  ASSERT_TRUE(is_completely_positive(phi0, 1e-12));
  ASSERT_TRUE(is_completely_positive(phi1, 1e-12));
  ASSERT_FALSE(is_trace_preserving(scaled(SuperOp::identity(2), 0.5), 1e-9));
}

TEST(superop, difference_examples) {
  Rng rng(8);
  SuperOp phi = random_map(2, 2, 2, rng);
  ComplexMatrix x = random_gaussian(2, 2, rng);
  ASSERT_LE(max_abs(apply(difference(phi, phi), x)), 1e-12);
  ASSERT_LE(max_diff(apply(difference(SuperOp::identity(2), scaled(SuperOp::identity(2), 0.5)), ComplexMatrix::identity(2)),
                     Complex(0.5) * ComplexMatrix::identity(2)),
            1e-15);
  ASSERT_THROW(difference(SuperOp::identity(2), SuperOp::identity(3)), InvalidInput);

  // Dim-4 difference on |psi><psi| is diagonal with the stated weights.
  SuperOp diff = suite::build_example("dim4_pair").map;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> psi = random_unit_vector(2, rng);
    const double p0 = std::norm(psi[0]);
    const double p1 = std::norm(psi[1]);
    const double pp = std::norm(kH * (psi[0] + psi[1]));
    const double pm = std::norm(kH * (psi[0] - psi[1]));
    std::vector<Complex> d{0.5 * (p0 - p1), 0.5 * (pp - pm), 0.5 * (p1 - p0), 0.5 * (pm - pp)};
    ASSERT_LE(max_diff(apply(diff, ComplexMatrix::outer(psi, psi)), ComplexMatrix::diagonal(d)), 1e-12);
  }
}

TEST(superop, dim4_trace_norm_on_pure_states_grid) {
  SuperOp diff = suite::build_example("dim4_pair").map;
  const int n = 100;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double theta = M_PI * i / (n - 1);
      const double phase = 2.0 * M_PI * j / n;
      std::vector<Complex> psi{std::cos(theta / 2), std::polar(std::sin(theta / 2), phase)};
      const double z = std::norm(psi[0]) - std::norm(psi[1]);
      const double x = std::norm(kH * (psi[0] + psi[1])) - std::norm(kH * (psi[0] - psi[1]));
      const double got = schatten_norm(apply(diff, ComplexMatrix::outer(psi, psi)), SchattenExponent(1.0));
      ASSERT_NEAR(got, std::abs(z) + std::abs(x), 1e-9);
    }
  }
}
