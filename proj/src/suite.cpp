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

#include "supernorm/suite.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "supernorm/error.hpp"
#include "supernorm/norm_opt.hpp"
#include "supernorm/random.hpp"
#include "supernorm/schatten.hpp"

namespace supernorm::suite {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kSqrtHalf = 1.0 / std::numbers::sqrt2;

ComplexMatrix ketbra(std::span<const Complex> u, std::span<const Complex> v) { return ComplexMatrix::outer(u, v); }

std::vector<Complex> basis(std::size_t n, std::size_t i) { return ket(n, i); }

}  // namespace

SuperOp simple_nonhermitian() {
  const auto e0 = basis(2, 0);
  const auto e1 = basis(2, 1);
  // A = |0><0|, B^* = |1><0|.
  return SuperOp(2, 2, {ketbra(e0, e0)}, {ketbra(e0, e1)});
}

SuperOp qinf_nonhermitian() {
  const auto e0 = basis(2, 0);
  const auto e1 = basis(2, 1);
  return SuperOp(2, 2, {Complex(0.5, 0.0) * ketbra(e0, e0), Complex(0.0, 0.5) * ketbra(e0, e1)},
                 {ketbra(e0, e0), ketbra(e0, e1)});
}

std::pair<SuperOp, SuperOp> depolarizing_pair() {
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) kraus.push_back(Complex(kSqrtHalf, 0.0) * ketbra(basis(2, i), basis(2, j)));
  }
  return {SuperOp::identity(2), SuperOp::completely_positive(std::move(kraus))};
}

std::pair<SuperOp, SuperOp> dim4_pair() {
  const auto e0 = basis(2, 0);
  const auto e1 = basis(2, 1);
  const std::vector<Complex> plus{kSqrtHalf, kSqrtHalf};
  const std::vector<Complex> minus{kSqrtHalf, -kSqrtHalf};
  const Complex w(kSqrtHalf, 0.0);
  auto term = [&](std::size_t out, const std::vector<Complex>& in) { return w * ketbra(basis(4, out), in); };
  SuperOp phi0 = SuperOp::completely_positive({term(0, e0), term(1, plus), term(2, e1), term(3, minus)});
  SuperOp phi1 = SuperOp::completely_positive({term(0, e1), term(1, minus), term(2, e0), term(3, plus)});
  return {std::move(phi0), std::move(phi1)};
}

SuperOp transpose_map(std::size_t n) {
  if (n == 0) throw InvalidInput("transpose_map: dimension must be positive");
  // sum_ij |i><j| X |i><j| = X^T, so A_ij = |i><j| and B_ij = |j><i|.
  std::vector<ComplexMatrix> left;
  std::vector<ComplexMatrix> right;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      left.push_back(ketbra(basis(n, i), basis(n, j)));
      right.push_back(ketbra(basis(n, j), basis(n, i)));
    }
  }
  return SuperOp(n, n, std::move(left), std::move(right));
}

Example build_example(std::string_view name) {
  if (name == "simple_nonhermitian") return {std::string(name), simple_nonhermitian(), std::nullopt};
  if (name == "qinf_nonhermitian") return {std::string(name), qinf_nonhermitian(), std::nullopt};
  if (name == "depolarizing_pair" || name == "dim4_pair") {
    auto pair = name == "dim4_pair" ? dim4_pair() : depolarizing_pair();
    SuperOp diff = difference(pair.first, pair.second);
    return {std::string(name), std::move(diff), std::move(pair)};
  }
  if (name == "transpose") return {"transpose(2)", transpose_map(2), std::nullopt};
  if (name.starts_with("transpose(") && name.ends_with(")")) {
    const std::string_view digits = name.substr(10, name.size() - 11);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1 && n <= 64) {
      return {std::string(name), transpose_map(n), std::nullopt};
    }
  }
  throw InvalidInput("unknown example '" + std::string(name) + "'");
}

SuperOp random_cp_channel(std::size_t dim_in, std::size_t dim_out, std::size_t n_kraus, std::uint64_t seed) {
  if (dim_in == 0 || dim_out == 0 || n_kraus == 0) throw InvalidInput("random_cp_channel: counts must be positive");
  Rng rng(seed);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < n_kraus; ++i) kraus.push_back(random_gaussian(dim_out, dim_in, rng));

  const auto n = static_cast<Eigen::Index>(dim_in);
  DenseMatrix gram = DenseMatrix::Zero(n, n);
  for (const ComplexMatrix& a : kraus) gram.noalias() += a.dense().adjoint() * a.dense();
  const double top = schatten_norm(ComplexMatrix(gram), SchattenExponent::infinity());
  const Complex scale(0.9 / std::sqrt(top), 0.0);
  for (ComplexMatrix& a : kraus) a = scale * a;

  // Completion: extra terms K with sum K^* K = I - sum A^* A (positive definite).
  const ComplexMatrix remainder(DenseMatrix(DenseMatrix::Identity(n, n) - std::norm(scale) * gram));
  if (dim_out >= dim_in) {
    DenseMatrix k = DenseMatrix::Zero(static_cast<Eigen::Index>(dim_out), n);
    k.topRows(n) = psd_sqrt(remainder).dense();
    kraus.emplace_back(std::move(k));
  } else {
    const HermitianEigen eig = hermitian_eigen(remainder);
    for (std::size_t j = 0; j < dim_in; ++j) {
      const double r = std::max(eig.eigenvalues[j], 0.0);
      DenseMatrix k = DenseMatrix::Zero(static_cast<Eigen::Index>(dim_out), n);
      k.row(0) = std::sqrt(r) * eig.eigenvectors.dense().col(static_cast<Eigen::Index>(j)).adjoint();
      kraus.emplace_back(std::move(k));
    }
  }
  return SuperOp::completely_positive(std::move(kraus));
}

SuperOp random_superop(std::size_t dim_in, std::size_t dim_out, std::size_t n_terms, std::uint64_t seed) {
  if (dim_in == 0 || dim_out == 0 || n_terms == 0) throw InvalidInput("random_superop: counts must be positive");
  Rng rng(seed);
  std::vector<ComplexMatrix> left;
  std::vector<ComplexMatrix> right;
  for (std::size_t i = 0; i < n_terms; ++i) left.push_back(random_gaussian(dim_out, dim_in, rng));
  for (std::size_t i = 0; i < n_terms; ++i) right.push_back(random_gaussian(dim_out, dim_in, rng));
  return SuperOp(dim_in, dim_out, std::move(left), std::move(right));
}

// ---------------------------------------------------------------------------

namespace {

const std::array<double, 5> kExponentGrid{1.0, 1.5, 2.0, 3.0, kInf};

std::string exponent_label(double p) { return SchattenExponent(p).to_string(); }

std::string qp_label(double q, double p) { return "q=" + exponent_label(q) + " p=" + exponent_label(p); }

// Keeps the worst check per trial.
class Recorder {
 public:
  explicit Recorder(std::size_t trials) : trials_(trials) {}

  void add(std::size_t trial, std::string label, double lhs, double rhs, double residual) {
    if (std::isnan(residual)) residual = kInf;
    auto it = worst_.find(trial);
    if (it == worst_.end() || residual > it->second.residual) {
      worst_[trial] = TrialRecord{trial, std::move(label), lhs, rhs, residual};
    }
  }

  VerificationReport finish(std::string claim_id, double tolerance, std::uint64_t seed) && {
    VerificationReport report;
    report.claim_id = std::move(claim_id);
    report.trials = trials_;
    report.tolerance = tolerance;
    report.seed = seed;
    for (auto& [trial, record] : worst_) {
      report.worst_residual = std::max(report.worst_residual, record.residual);
      report.details.push_back(std::move(record));
    }
    report.passed = report.worst_residual <= tolerance;
    return report;
  }

 private:
  std::size_t trials_;
  std::map<std::size_t, TrialRecord> worst_;
};

struct Context {
  const SuiteOptions& options;
  std::uint64_t salt;

  Rng rng(std::size_t trial) const { return Rng(derive_seed(derive_seed(options.seed, salt), trial)); }

  OptimizerConfig cfg(std::size_t trial, std::size_t stream) const {
    OptimizerConfig c;
    c.restarts = options.restarts;
    c.seed = derive_seed(derive_seed(derive_seed(options.seed, salt), trial), 1000 + stream);
    return c;
  }
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  const auto span = static_cast<double>(hi - lo + 1);
  return lo + std::min(hi - lo, static_cast<std::size_t>(rng.uniform() * span));
}

NormQuery make_query(double q, double p, bool hermitian = false, std::size_t stabilize = 0) {
  NormQuery query;
  query.q = SchattenExponent(q);
  query.p = SchattenExponent(p);
  query.hermitian_restricted = hermitian;
  query.stabilize_dim = stabilize;
  return query;
}

struct RandomShape {
  std::size_t dim_in;
  std::size_t dim_out;
  std::size_t terms;
};

RandomShape draw_shape(Rng& rng) { return {pick(rng, 2, 3), pick(rng, 2, 3), pick(rng, 1, 3)}; }

// ----- exact linear algebra ------------------------------------------------

VerificationReport verify_monotone_p(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const ComplexMatrix a = random_gaussian(pick(rng, 1, 6), pick(rng, 1, 6), rng);
    for (double p : kExponentGrid) {
      for (double q : kExponentGrid) {
        if (p < q) continue;
        const double np = schatten_norm(a, SchattenExponent(p));
        const double nq = schatten_norm(a, SchattenExponent(q));
        rec.add(t, "p=" + exponent_label(p) + " q=" + exponent_label(q), np, nq, std::max(0.0, np - nq));
      }
    }
  }
  return std::move(rec).finish("monotone_p", claim_tolerance("monotone_p"), ctx.options.seed);
}

VerificationReport verify_hoelder(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t n = pick(rng, 1, 6);
    const ComplexMatrix x = random_gaussian(n, n, rng);
    const ComplexMatrix y = random_gaussian(n, n, rng);
    for (double p : kExponentGrid) {
      const SchattenExponent e(p);
      const double bound = schatten_norm(x, e) * schatten_norm(y, dual_exponent(e));
      const double gap = hoelder_gap(x, y, e);
      rec.add(t, "p=" + exponent_label(p), std::abs(inner(x, y)), bound, std::max(0.0, -gap));
    }
  }
  return std::move(rec).finish("hoelder", claim_tolerance("hoelder"), ctx.options.seed);
}

VerificationReport verify_duality(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t n = pick(rng, 1, 6);
    const ComplexMatrix x = random_gaussian(n, n, rng);
    for (double p : kExponentGrid) {
      const SchattenExponent e(p);
      const ComplexMatrix y = duality_witness(x, e);
      const double norm = schatten_norm(x, e);
      const Complex pairing = inner(y, x);
      const double residual =
          std::max(std::abs(schatten_norm(y, dual_exponent(e)) - 1.0), std::abs(pairing - Complex(norm, 0.0)));
      rec.add(t, "p=" + exponent_label(p), std::abs(pairing), norm, residual);
    }
  }
  return std::move(rec).finish("duality", claim_tolerance("duality"), ctx.options.seed);
}

VerificationReport verify_block_bounds(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t k = pick(rng, 2, 3);
    const std::size_t block = pick(rng, 1, 3);
    const ComplexMatrix x = random_gaussian(k * block, k * block, rng);
    for (double p : kExponentGrid) {
      const BlockNormBounds b = block_norm_bounds(x, k, k, SchattenExponent(p));
      const double scale = std::max(1.0, b.rhs);
      double slack = 0.0;
      if (p <= 2.0) slack = std::max(slack, b.lhs - b.rhs);
      if (p >= 2.0) slack = std::max(slack, b.rhs - b.lhs);
      rec.add(t, "p=" + exponent_label(p), b.lhs, b.rhs, std::max(0.0, slack) / scale);
    }
  }
  return std::move(rec).finish("block_bounds", claim_tolerance("block_bounds"), ctx.options.seed);
}

VerificationReport verify_svd_reconstruction(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const ComplexMatrix m = random_gaussian(pick(rng, 1, 8), pick(rng, 1, 8), rng);
    const SpectralData sd = svd(m);
    const DenseMatrix& u = sd.left_vectors.dense();
    const DenseMatrix& v = sd.right_vectors.dense();
    Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXd>(sd.singular_values.data(),
                                                          static_cast<Eigen::Index>(sd.singular_values.size()));
    const DenseMatrix rebuilt = u * s.cast<Complex>().asDiagonal() * v.adjoint();
    const double top = sd.singular_values.front();
    const double error = schatten_norm(ComplexMatrix(DenseMatrix(m.dense() - rebuilt)), SchattenExponent(2.0));
    const double ortho = std::max(
        (u.adjoint() * u - DenseMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff(),
        (v.adjoint() * v - DenseMatrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff());
    bool ordered = std::is_sorted(sd.singular_values.rbegin(), sd.singular_values.rend());
    const double residual = std::max({error / (1.0 + top), ortho, ordered ? 0.0 : kInf});
    rec.add(t, "svd", error, 0.0, residual);

    // Schmidt decomposition of a random unit vector in C^a (x) C^b.
    const std::size_t a = pick(rng, 1, 4);
    const std::size_t b = pick(rng, 1, 4);
    const std::vector<Complex> psi = random_unit_vector(a * b, rng);
    const SpectralData sch = schmidt(psi, a, b);
    double weight = 0.0;
    DenseVector rebuilt_psi = DenseVector::Zero(static_cast<Eigen::Index>(a * b));
    for (std::size_t i = 0; i < sch.singular_values.size(); ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      weight += sch.singular_values[i] * sch.singular_values[i];
      const DenseVector left = sch.left_vectors.dense().col(ii);
      const DenseVector right = sch.right_vectors.dense().col(ii);
      for (std::size_t g = 0; g < a; ++g) {
        for (std::size_t f = 0; f < b; ++f) {
          rebuilt_psi(static_cast<Eigen::Index>(g * b + f)) +=
              sch.singular_values[i] * left(static_cast<Eigen::Index>(g)) * right(static_cast<Eigen::Index>(f));
        }
      }
    }
    double psi_error = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) psi_error += std::norm(psi[i] - rebuilt_psi(static_cast<Eigen::Index>(i)));
    rec.add(t, "schmidt", weight, 1.0, std::max(std::abs(weight - 1.0), std::sqrt(psi_error)));
  }
  return std::move(rec).finish("svd_reconstruction", claim_tolerance("svd_reconstruction"), ctx.options.seed);
}

VerificationReport verify_cp_preserves_psd(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const RandomShape shape = draw_shape(rng);
    const SuperOp phi = random_cp_channel(shape.dim_in, shape.dim_out, shape.terms, rng.stream(1).seed());
    const ComplexMatrix w = random_gaussian(shape.dim_in, shape.dim_in, rng);
    const ComplexMatrix x = w.adjoint() * w;
    const ComplexMatrix y = apply(phi, x);
    const double skew = max_abs(y - y.adjoint());
    const double lowest = hermitian_eigen(y).eigenvalues.front();
    const double choi_lowest = hermitian_eigen(choi_matrix(phi)).eigenvalues.front();
    // Trace preservation of the completed channel, as a bonus consistency check.
    const double trace_gap = std::abs(y.dense().trace() - x.dense().trace());
    rec.add(t, "apply", lowest, 0.0, std::max({skew, -lowest, -choi_lowest, trace_gap, 0.0}));
  }
  return std::move(rec).finish("cp_preserves_psd", claim_tolerance("cp_preserves_psd"), ctx.options.seed);
}

// ----- optimized claims ------------------------------------------------------

VerificationReport verify_transpose_instability(const Context& ctx) {
  Recorder rec(0);
  std::size_t index = 0;
  for (std::size_t n : {2u, 3u}) {
    const SuperOp t = transpose_map(n);
    for (double p : {1.0, 1.5, 2.0}) {
      const double expected = std::pow(static_cast<double>(n), 2.0 / p) / static_cast<double>(n);
      const double stabilized =
          norm_q_to_p(t, make_query(1.0, p, false, n), ctx.cfg(index, 0)).value;
      rec.add(index, "n=" + std::to_string(n) + " p=" + exponent_label(p) + " stabilized", stabilized, expected,
              std::abs(stabilized - expected));
      ++index;
      const double plain = norm_1_to_p(t, SchattenExponent(p), false, ctx.cfg(index, 0)).value;
      rec.add(index, "n=" + std::to_string(n) + " p=" + exponent_label(p) + " plain", plain, 1.0,
              std::abs(plain - 1.0));
      ++index;
    }
  }
  VerificationReport r = std::move(rec).finish("transpose_instability", claim_tolerance("transpose_instability"),
                                               ctx.options.seed);
  r.trials = index;
  return r;
}

VerificationReport verify_prop_counterexamples(const Context& ctx) {
  Recorder rec(0);
  std::size_t index = 0;
  auto check = [&](const std::string& label, double got, double expected) {
    rec.add(index, label, got, expected, std::abs(got - expected));
    ++index;
  };

  const SuperOp simple = simple_nonhermitian();
  for (double q : {1.0, 2.0, 4.0}) {
    for (double p : {1.0, 2.0, kInf}) {
      check("simple " + qp_label(q, p), norm_q_to_p(simple, make_query(q, p), ctx.cfg(index, 0)).value, 1.0);
      check("simple hermitian " + qp_label(q, p),
            norm_q_to_p(simple, make_query(q, p, true), ctx.cfg(index, 0)).value, std::pow(2.0, -1.0 / q));
    }
  }

  const SuperOp qinf = qinf_nonhermitian();
  for (double p : {1.0, 2.0, kInf}) {
    check("qinf " + qp_label(kInf, p), norm_q_to_p(qinf, make_query(kInf, p), ctx.cfg(index, 0)).value, 1.0);
    check("qinf hermitian " + qp_label(kInf, p), norm_q_to_p(qinf, make_query(kInf, p, true), ctx.cfg(index, 0)).value,
          kSqrtHalf);
  }

  const SuperOp depolarizing = build_example("depolarizing_pair").map;
  for (double p : {1.5, 2.0, kInf}) {
    const SchattenExponent e(p);
    check("depolarizing p=" + exponent_label(p), norm_1_to_p(depolarizing, e, false, ctx.cfg(index, 0)).value, 1.0);
    const double expected = p == kInf ? 0.5 : std::pow(2.0, 1.0 / p) / 2.0;
    check("depolarizing hermitian p=" + exponent_label(p),
          norm_1_to_p(depolarizing, e, true, ctx.cfg(index, 0)).value, expected);
  }

  const SuperOp dim4 = build_example("dim4_pair").map;
  const SchattenExponent one(1.0);
  check("dim4 p=1", norm_1_to_p(dim4, one, false, ctx.cfg(index, 0)).value, 2.0);
  check("dim4 hermitian p=1", norm_1_to_p(dim4, one, true, ctx.cfg(index, 0)).value, std::numbers::sqrt2);
  check("dim4 hermitian p=1 grid oracle", brute_force_oracle(dim4, make_query(1.0, 1.0, true), 400),
        std::numbers::sqrt2);

  VerificationReport r = std::move(rec).finish("prop_counterexamples", claim_tolerance("prop_counterexamples"),
                                               ctx.options.seed);
  r.trials = index;
  return r;
}

VerificationReport verify_theorem1(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const RandomShape shape = draw_shape(rng);
    const SuperOp phi = random_cp_channel(shape.dim_in, shape.dim_out, shape.terms, rng.stream(1).seed());
    std::size_t stream = 0;
    for (double q : kExponentGrid) {
      for (double p : kExponentGrid) {
        const double general = norm_q_to_p(phi, make_query(q, p), ctx.cfg(t, stream++)).value;
        const double herm = norm_q_to_p(phi, make_query(q, p, true), ctx.cfg(t, stream++)).value;
        const double psd = cp_norm(phi, make_query(q, p), ctx.cfg(t, stream++)).value;
        rec.add(t, qp_label(q, p), general, herm, std::max(std::abs(general - herm), std::abs(general - psd)));
      }
    }
  }
  return std::move(rec).finish("theorem1", claim_tolerance("theorem1"), ctx.options.seed);
}

VerificationReport verify_lemma1(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const RandomShape shape = draw_shape(rng);
    const SuperOp phi = random_superop(shape.dim_in, shape.dim_out, shape.terms, rng.stream(1).seed());
    std::size_t stream = 0;
    for (double q : kExponentGrid) {
      for (double p : kExponentGrid) {
        const SplitBound b = left_right_bound(phi, make_query(q, p), ctx.cfg(t, stream++));
        rec.add(t, qp_label(q, p), b.lhs, b.rhs, std::max(0.0, b.lhs - b.rhs));
      }
    }
  }
  return std::move(rec).finish("lemma1", claim_tolerance("lemma1"), ctx.options.seed);
}

VerificationReport verify_theorem2(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const RandomShape shape = draw_shape(rng);
    const SuperOp phi = random_superop(shape.dim_in, shape.dim_out, shape.terms, rng.stream(1).seed());
    std::size_t stream = 0;
    for (double q : {1.0, 1.5, 2.0}) {
      for (double p : {2.0, 3.0, kInf}) {
        const double plain = norm_q_to_p(phi, make_query(q, p), ctx.cfg(t, stream++)).value;
        for (std::size_t k : {2u, 3u}) {
          const double stabilized = norm_q_to_p(phi, make_query(q, p, false, k), ctx.cfg(t, stream++)).value;
          rec.add(t, qp_label(q, p) + " k=" + std::to_string(k), stabilized, plain, std::abs(stabilized - plain));
        }
      }
    }
  }
  return std::move(rec).finish("theorem2", claim_tolerance("theorem2"), ctx.options.seed);
}

VerificationReport verify_theorem3(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    RandomShape shape = draw_shape(rng);
    const SuperOp phi = random_superop(shape.dim_in, shape.dim_out, shape.terms, rng.stream(1).seed());
    const std::size_t n = shape.dim_in;
    std::size_t stream = 0;
    for (double p : kExponentGrid) {
      for (bool hermitian : {false, true}) {
        const double at_n = norm_q_to_p(phi, make_query(1.0, p, hermitian, n), ctx.cfg(t, stream++)).value;
        const double beyond = norm_q_to_p(phi, make_query(1.0, p, hermitian, n + 1), ctx.cfg(t, stream++)).value;
        rec.add(t, "p=" + exponent_label(p) + (hermitian ? " hermitian" : " plain"), at_n, beyond,
                std::abs(at_n - beyond));
      }
    }
  }
  return std::move(rec).finish("theorem3", claim_tolerance("theorem3"), ctx.options.seed);
}

VerificationReport verify_ahw_fact(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const RandomShape shape = draw_shape(rng);
    const SuperOp phi = random_cp_channel(shape.dim_in, shape.dim_out, shape.terms, rng.stream(1).seed());
    std::size_t stream = 0;
    for (double p : {1.0, 2.0, kInf}) {
      const double plain = norm_q_to_p(phi, make_query(1.0, p, true), ctx.cfg(t, stream++)).value;
      const double stabilized = norm_q_to_p(phi, make_query(1.0, p, true, 2), ctx.cfg(t, stream++)).value;
      rec.add(t, "p=" + exponent_label(p), plain, stabilized, std::abs(plain - stabilized));
    }
  }
  return std::move(rec).finish("ahw_fact", claim_tolerance("ahw_fact"), ctx.options.seed);
}

VerificationReport verify_oracle_concordance(const Context& ctx) {
  Recorder rec(ctx.options.trials);
  const std::array<double, 3> exponents{1.0, 2.0, kInf};
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    Rng rng = ctx.rng(t);
    const double q = exponents[(t / 3) % 3];
    const double p = exponents[t % 3];
    const bool hermitian = (t / 9) % 2 == 1;
    const SuperOp phi = random_superop(2, pick(rng, 2, 3), pick(rng, 1, 2), rng.stream(1).seed());
    const NormQuery query = make_query(q, p, hermitian);
    const double optimized = norm_q_to_p(phi, query, ctx.cfg(t, 0)).value;
    const double grid = brute_force_oracle(phi, query, 400);
    rec.add(t, qp_label(q, p) + (hermitian ? " hermitian" : ""), optimized, grid, std::abs(optimized - grid));
  }
  return std::move(rec).finish("oracle_concordance", claim_tolerance("oracle_concordance"), ctx.options.seed);
}

using Runner = VerificationReport (*)(const Context&);

struct ClaimEntry {
  const char* id;
  double tolerance;
  Runner run;
};

const std::vector<ClaimEntry>& registry() {
  static const std::vector<ClaimEntry> entries{
      {"monotone_p", 1e-10, verify_monotone_p},
      {"hoelder", 1e-9, verify_hoelder},
      {"duality", 1e-8, verify_duality},
      {"block_bounds", 1e-9, verify_block_bounds},
      {"svd_reconstruction", 1e-9, verify_svd_reconstruction},
      {"cp_preserves_psd", 1e-9, verify_cp_preserves_psd},
      {"transpose_instability", 2e-3, verify_transpose_instability},
      {"prop_counterexamples", 2e-3, verify_prop_counterexamples},
      {"theorem1", 2e-3, verify_theorem1},
      {"lemma1", 2e-3, verify_lemma1},
      {"theorem2", 2e-3, verify_theorem2},
      {"theorem3", 2e-3, verify_theorem3},
      {"ahw_fact", 2e-3, verify_ahw_fact},
      {"oracle_concordance", 5e-3, verify_oracle_concordance},
  };
  return entries;
}

const ClaimEntry& find_claim(std::string_view id) {
  for (const ClaimEntry& e : registry()) {
    if (id == e.id) return e;
  }
  throw InvalidInput("unknown claim id '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const ClaimEntry& e : registry()) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

double claim_tolerance(std::string_view claim_id) { return find_claim(claim_id).tolerance; }

VerificationReport verify(std::string_view claim_id, const SuiteOptions& options) {
  const ClaimEntry& entry = find_claim(claim_id);
  if (options.restarts == 0) throw InvalidInput("verify: restarts must be at least 1");
  std::uint64_t salt = 0;
  for (char c : claim_id) salt = salt * 131 + static_cast<unsigned char>(c);
  const Context ctx{options, salt};
  return entry.run(ctx);
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json details = nlohmann::json::array();
  for (const TrialRecord& r : report.details) {
    details.push_back({{"trial", r.trial}, {"label", r.label}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual}});
  }
  return nlohmann::json{{"claim_id", report.claim_id},
                        {"trials", report.trials},
                        {"worst_residual", report.worst_residual},
                        {"tolerance", report.tolerance},
                        {"passed", report.passed},
                        {"seed", report.seed},
                        {"details", std::move(details)}};
}

}  // namespace supernorm::suite
