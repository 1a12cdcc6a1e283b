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

#include "supernorm/norm_opt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "supernorm/error.hpp"
#include "supernorm/random.hpp"

namespace supernorm {

void OptimizerConfig::validate() const {
  if (restarts < 1) throw InvalidInput("OptimizerConfig: restarts must be at least 1");
  if (!(step_tolerance > 0.0) || !(objective_tolerance > 0.0)) {
    throw InvalidInput("OptimizerConfig: tolerances must be positive");
  }
}

namespace {

// Feasible set for the input operator.
enum class Domain { kGeneral, kHermitian, kPositive };

bool is_one(SchattenExponent q) { return !q.is_infinite() && q.value() == 1.0; }

ComplexMatrix normalized(const ComplexMatrix& x, SchattenExponent q) {
  return Complex(1.0 / schatten_norm(x, q), 0.0) * x;
}

// Odd restarts start from a positive operator in every domain: sign patterns
// with mixed signs are frequent local maxima for large q.
ComplexMatrix random_start(std::size_t n, SchattenExponent q, Domain domain, std::size_t restart, Rng& rng) {
  if (!is_one(q) && restart % 2 == 1) domain = Domain::kPositive;
  if (is_one(q)) {
    // The q = 1 maximum is attained on rank-one operators; start there.
    const std::vector<Complex> u = random_unit_vector(n, rng);
    if (domain != Domain::kGeneral) return ComplexMatrix::outer(u, u);
    return ComplexMatrix::outer(u, random_unit_vector(n, rng));
  }
  switch (domain) {
    case Domain::kGeneral:
      return normalized(random_gaussian(n, n, rng), q);
    case Domain::kHermitian:
      return normalized(random_hermitian(n, rng), q);
    case Domain::kPositive: {
      const ComplexMatrix w = random_gaussian(n, n, rng);
      return normalized(w.adjoint() * w, q);
    }
  }
  return ComplexMatrix::identity(n);
}

// Best feasible X (unit q-norm) against the linear functional X -> Re<Z, X>.
ComplexMatrix best_response(const ComplexMatrix& z, SchattenExponent q_dual, Domain domain) {
  switch (domain) {
    case Domain::kGeneral:
      return duality_witness(z, q_dual);
    case Domain::kHermitian:
      return hermitian_duality_witness(z, q_dual, false);
    case Domain::kPositive:
      return hermitian_duality_witness(z, q_dual, true);
  }
  return z;
}

struct Ascent {
  double value;
  ComplexMatrix x;
  bool converged;
};

// Alternating maximization of Re<Y, Phi(X)> over ||X||_q = 1 (within the
// domain) and ||Y||_{p*} = 1. Each half-step is solved exactly by a duality
// witness, so ||Phi(X)||_p never decreases.
Ascent ascend(const SuperOp& phi, SchattenExponent q, SchattenExponent p, Domain domain, ComplexMatrix x,
              const OptimizerConfig& cfg, Rng& rng) {
  const SchattenExponent q_dual = dual_exponent(q);
  const SchattenExponent p_dual = dual_exponent(p);
  SpectralData out = svd(apply(phi, x));
  double value = schatten_norm_of_values(out.singular_values, p);

  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    const ComplexMatrix y = out.rank > 0 ? duality_witness(out, p)
                                         : normalized(random_gaussian(phi.dim_out(), phi.dim_out(), rng), p_dual);
    const ComplexMatrix z = apply_adjoint(phi, y);
    if (max_abs(z) == 0.0) return {value, std::move(x), true};
    ComplexMatrix next = x;
    try {
      next = best_response(z, q_dual, domain);
    } catch (const InvalidInput&) {
      // Phi^*(Y) has no component along the domain.
      return {value, std::move(x), true};
    }
    SpectralData next_out = svd(apply(phi, next));
    const double next_value = schatten_norm_of_values(next_out.singular_values, p);
    if (!(next_value > value)) return {value, std::move(x), true};

    const double gain = next_value - value;
    const double step = (next.dense() - x.dense()).norm();
    x = std::move(next);
    out = std::move(next_out);
    value = next_value;
    if (gain <= cfg.objective_tolerance * std::max(1.0, value) || step <= cfg.step_tolerance) {
      return {value, std::move(x), true};
    }
  }
  return {value, std::move(x), false};
}

bool is_zero_map(const SuperOp& phi) { return max_abs(choi_matrix(phi)) == 0.0; }

NormEstimate maximize(const SuperOp& phi, SchattenExponent q, SchattenExponent p, Domain domain,
                      const OptimizerConfig& cfg) {
  cfg.validate();
  const std::size_t n = phi.dim_in();
  if (is_zero_map(phi)) {
    ComplexMatrix e0 = ComplexMatrix::outer(ket(n, 0), ket(n, 0));
    return NormEstimate{0.0, std::move(e0), cfg.restarts, 0, true};
  }

  const Rng root(cfg.seed);
  NormEstimate best;
  best.value = -1.0;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    Rng rng = root.stream(r);
    Ascent a = ascend(phi, q, p, domain, random_start(n, q, domain, r, rng), cfg, rng);
    // Strict comparison: ties go to the lowest restart index.
    if (a.value > best.value) {
      best.value = a.value;
      best.achiever = std::move(a.x);
      best.best_restart = r;
      best.converged = a.converged;
    }
  }
  best.restarts_used = cfg.restarts;

  // Report the Hermitian rank-one achiever as a projector |u><u| rather than -|u><u|.
  if (domain != Domain::kGeneral && is_one(q)) {
    Complex trace = best.achiever.dense().trace();
    if (trace.real() < 0.0) best.achiever = -best.achiever;
  }
  best.value = schatten_norm(apply(phi, best.achiever), p);
  return best;
}

}  // namespace

NormEstimate norm_1_to_p(const SuperOp& phi, SchattenExponent p, bool hermitian, const OptimizerConfig& cfg) {
  return maximize(phi, SchattenExponent(1.0), p, hermitian ? Domain::kHermitian : Domain::kGeneral, cfg);
}

NormEstimate norm_q_to_p(const SuperOp& phi, const NormQuery& query, const OptimizerConfig& cfg) {
  const SuperOp target = query.stabilize_dim > 0 ? tensor_identity(phi, query.stabilize_dim) : phi;
  if (is_one(query.q)) return norm_1_to_p(target, query.p, query.hermitian_restricted, cfg);
  return maximize(target, query.q, query.p, query.hermitian_restricted ? Domain::kHermitian : Domain::kGeneral, cfg);
}

NormEstimate cp_norm(const SuperOp& phi, const NormQuery& query, const OptimizerConfig& cfg) {
  const ComplexMatrix choi = choi_matrix(phi);
  const double tol = 1e-9 * std::max(1.0, max_abs(choi));
  if (!is_psd(choi, tol)) throw PreconditionError("cp_norm: map is not completely positive");
  const SuperOp target = query.stabilize_dim > 0 ? tensor_identity(phi, query.stabilize_dim) : phi;
  return maximize(target, query.q, query.p, Domain::kPositive, cfg);
}

NormEstimate stabilized_norm(const SuperOp& phi, SchattenExponent p, bool hermitian, const OptimizerConfig& cfg) {
  NormQuery query;
  query.p = p;
  query.hermitian_restricted = hermitian;
  query.stabilize_dim = phi.dim_in();
  return norm_q_to_p(phi, query, cfg);
}

// ---------------------------------------------------------------------------
// Grid oracle

namespace {

struct Axis {
  double lo;
  double hi;
};

constexpr double kCoarseBudget = 2.0e5;
constexpr std::size_t kBeam = 12;
constexpr std::size_t kMaxMovesPerLevel = 200;

using Objective = std::function<double(const std::vector<double>&)>;

double grid_maximize(const std::vector<Axis>& axes, std::size_t resolution, const Objective& f) {
  const std::size_t d = axes.size();
  const auto budget_per_axis = static_cast<std::size_t>(std::floor(std::pow(kCoarseBudget, 1.0 / static_cast<double>(d))));
  const std::size_t per_axis = std::max<std::size_t>(3, std::min(resolution + 1, budget_per_axis));

  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= per_axis;

  auto coordinate = [&](std::size_t axis, std::size_t k) {
    return axes[axis].lo + (axes[axis].hi - axes[axis].lo) * static_cast<double>(k) / static_cast<double>(per_axis - 1);
  };

  std::vector<double> values(total);
  std::vector<double> point(d);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t i = 0; i < d; ++i) {
      point[i] = coordinate(i, rem % per_axis);
      rem /= per_axis;
    }
    values[flat] = f(point);
  }

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t beam = std::min(kBeam, total);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(beam), order.end(),
                    [&](std::size_t a, std::size_t b) { return values[a] > values[b] || (values[a] == values[b] && a < b); });
  double best = values[order.front()];

  std::vector<double> target(d);
  std::vector<double> initial_step(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double range = axes[i].hi - axes[i].lo;
    initial_step[i] = range / static_cast<double>(per_axis - 1);
    target[i] = range / static_cast<double>(std::max<std::size_t>(resolution, 1));
  }

  std::size_t stencil = 1;
  for (std::size_t i = 0; i < d; ++i) stencil *= 3;

  std::vector<double> candidate(d);
  for (std::size_t b = 0; b < beam; ++b) {
    std::vector<double> current(d);
    std::size_t rem = order[b];
    for (std::size_t i = 0; i < d; ++i) {
      current[i] = coordinate(i, rem % per_axis);
      rem /= per_axis;
    }
    double current_value = values[order[b]];
    std::vector<double> step = initial_step;
    for (;;) {
      for (std::size_t moves = 0; moves < kMaxMovesPerLevel; ++moves) {
        double best_neighbor = current_value;
        std::vector<double> best_point;
        for (std::size_t s = 0; s < stencil; ++s) {
          std::size_t code = s;
          bool center = true;
          for (std::size_t i = 0; i < d; ++i) {
            const int offset = static_cast<int>(code % 3) - 1;
            code /= 3;
            center = center && offset == 0;
            candidate[i] = current[i] + offset * step[i];
          }
          if (center) continue;
          const double v = f(candidate);
          if (v > best_neighbor) {
            best_neighbor = v;
            best_point = candidate;
          }
        }
        if (best_point.empty()) break;
        current = std::move(best_point);
        current_value = best_neighbor;
      }
      bool fine_enough = true;
      for (std::size_t i = 0; i < d; ++i) fine_enough = fine_enough && step[i] <= target[i] * (1.0 + 1e-12);
      if (fine_enough) break;
      for (double& h : step) h *= 0.5;
    }
    best = std::max(best, current_value);
  }
  return best;
}

std::vector<Complex> qubit(double theta, double phase) {
  return {Complex(std::cos(theta / 2), 0.0), std::polar(std::sin(theta / 2), phase)};
}

std::vector<Complex> qubit_orthogonal(double theta, double phase) {
  return {-std::polar(std::sin(theta / 2), -phase), Complex(std::cos(theta / 2), 0.0)};
}

}  // namespace

double brute_force_oracle(const SuperOp& phi_in, const NormQuery& query, std::size_t resolution) {
  const SuperOp phi = query.stabilize_dim > 0 ? tensor_identity(phi_in, query.stabilize_dim) : phi_in;
  if (phi.dim_in() > 2) {
    throw UnsupportedInstance("brute_force_oracle: input dimension " + std::to_string(phi.dim_in()) +
                              " exceeds the supported maximum of 2");
  }
  if (resolution == 0) throw InvalidInput("brute_force_oracle: resolution must be positive");
  const SchattenExponent p = query.p;
  auto value_at = [&](const ComplexMatrix& x) { return schatten_norm(apply(phi, x), p); };

  if (phi.dim_in() == 1) return value_at(ComplexMatrix::identity(1));

  constexpr double pi = std::numbers::pi;
  const bool hermitian = query.hermitian_restricted;
  const SchattenExponent q = query.q;

  if (is_one(q)) {
    if (hermitian) {
      return grid_maximize({{0.0, pi}, {0.0, 2 * pi}}, resolution, [&](const std::vector<double>& t) {
        const auto u = qubit(t[0], t[1]);
        return value_at(ComplexMatrix::outer(u, u));
      });
    }
    return grid_maximize({{0.0, pi}, {0.0, 2 * pi}, {0.0, pi}, {0.0, 2 * pi}}, resolution,
                         [&](const std::vector<double>& t) {
                           return value_at(ComplexMatrix::outer(qubit(t[0], t[1]), qubit(t[2], t[3])));
                         });
  }

  // Singular (or eigen-) value profile (cos t, sin t), rescaled to unit q-norm.
  auto profile = [&](double t) {
    const std::array<double, 2> raw{std::cos(t), std::sin(t)};
    const double n = schatten_norm_of_values(raw, q);
    return std::array<double, 2>{raw[0] / n, raw[1] / n};
  };

  if (hermitian) {
    return grid_maximize({{0.0, pi}, {0.0, pi}, {0.0, 2 * pi}}, resolution, [&](const std::vector<double>& t) {
      const auto lambda = profile(t[0]);
      const auto e1 = qubit(t[1], t[2]);
      const auto e2 = qubit_orthogonal(t[1], t[2]);
      const ComplexMatrix x =
          Complex(lambda[0], 0.0) * ComplexMatrix::outer(e1, e1) + Complex(lambda[1], 0.0) * ComplexMatrix::outer(e2, e2);
      return value_at(x);
    });
  }
  return grid_maximize({{0.0, pi / 2}, {0.0, pi}, {0.0, 2 * pi}, {0.0, pi}, {0.0, 2 * pi}, {0.0, 2 * pi}}, resolution,
                       [&](const std::vector<double>& t) {
                         const auto s = profile(t[0]);
                         const ComplexMatrix x =
                             Complex(s[0], 0.0) * ComplexMatrix::outer(qubit(t[1], t[2]), qubit(t[3], t[4])) +
                             std::polar(s[1], t[5]) *
                                 ComplexMatrix::outer(qubit_orthogonal(t[1], t[2]), qubit_orthogonal(t[3], t[4]));
                         return value_at(x);
                       });
}

// ---------------------------------------------------------------------------

SplitBound left_right_bound(const SuperOp& phi, const NormQuery& query, const OptimizerConfig& cfg) {
  NormQuery general = query;
  general.hermitian_restricted = false;
  NormQuery herm = query;
  herm.hermitian_restricted = true;

  OptimizerConfig cfg_left = cfg;
  cfg_left.seed = derive_seed(cfg.seed, 1);
  OptimizerConfig cfg_right = cfg;
  cfg_right.seed = derive_seed(cfg.seed, 2);

  const double lhs = norm_q_to_p(phi, general, cfg).value;
  const double left = norm_q_to_p(phi_L(phi), herm, cfg_left).value;
  const double right = norm_q_to_p(phi_R(phi), herm, cfg_right).value;
  return SplitBound{lhs, std::sqrt(left * right)};
}

namespace {

// Representation change A' = M A, B' = M^{-*} B over the Kraus index, which
// leaves sum_i A_i X B_i^* unchanged.
SuperOp remix(const SuperOp& phi, const DenseMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  const DenseMatrix w = m.inverse().adjoint();
  std::vector<ComplexMatrix> left;
  std::vector<ComplexMatrix> right;
  const auto zero = DenseMatrix::Zero(static_cast<Eigen::Index>(phi.dim_out()), static_cast<Eigen::Index>(phi.dim_in()));
  auto term = [&](const std::vector<ComplexMatrix>& list, std::size_t j) -> DenseMatrix {
    return j < list.size() ? list[j].dense() : DenseMatrix(zero);
  };
  for (std::size_t i = 0; i < n; ++i) {
    DenseMatrix a = zero;
    DenseMatrix b = zero;
    for (std::size_t j = 0; j < n; ++j) {
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      a += m(ii, jj) * term(phi.kraus_left(), j);
      b += w(ii, jj) * term(phi.kraus_right(), j);
    }
    left.emplace_back(std::move(a));
    right.emplace_back(std::move(b));
  }
  return SuperOp(phi.dim_in(), phi.dim_out(), std::move(left), std::move(right));
}

}  // namespace

ExplorationReport explore_open_question(const SuperOp& phi, int question, const NormQuery& query,
                                        const OptimizerConfig& cfg, std::size_t remixings) {
  if (question < 1 || question > 3) throw InvalidInput("explore: question must be 1, 2 or 3");
  if (phi.dim_in() > 3 || phi.dim_out() > 3) throw UnsupportedInstance("explore: dimensions above 3 are not supported");
  cfg.validate();

  ExplorationReport report;
  report.question = question;
  report.completely_positive = is_completely_positive(phi, 1e-9);

  NormQuery base = query;
  base.stabilize_dim = 0;

  if (question == 1) {
    NormQuery stabilized = base;
    stabilized.stabilize_dim = phi.dim_in();
    const double s = norm_q_to_p(phi, stabilized, cfg).value;
    report.reference = s * s;

    NormQuery general = base;
    general.hermitian_restricted = false;
    Rng rng(derive_seed(cfg.seed, 0x51));
    const std::array<double, 4> spreads{0.25, 0.5, 1.0, 2.0};
    double smallest = 0.0;
    for (std::size_t k = 0; k <= remixings; ++k) {
      // Sample 0 is the representation as given; the rest pad with one zero
      // pair and remix with an invertible matrix near the identity.
      SuperOp candidate = phi;
      std::string label = "given";
      if (k > 0) {
        const std::size_t n = phi.num_terms() + 1;
        const DenseMatrix m = DenseMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) +
                              spreads[k % spreads.size()] * random_gaussian(n, n, rng).dense();
        Eigen::FullPivLU<DenseMatrix> lu(m);
        if (!lu.isInvertible()) continue;
        candidate = remix(phi, m);
        label = "remix-" + std::to_string(k);
      }
      OptimizerConfig c = cfg;
      c.seed = derive_seed(cfg.seed, 100 + k);
      const double left = norm_q_to_p(phi_L(candidate), general, c).value;
      const double right = norm_q_to_p(phi_R(candidate), general, c).value;
      const double product = left * right;
      report.samples.push_back({label, 0, product});
      smallest = report.samples.size() == 1 ? product : std::min(smallest, product);
    }
    report.extremum = smallest;
    return report;
  }

  for (std::size_t k = 1; k <= phi.dim_in() + 2; ++k) {
    NormQuery q = base;
    q.stabilize_dim = k;
    const double v = norm_q_to_p(phi, q, cfg).value;
    report.samples.push_back({"k=" + std::to_string(k), k, v});
    report.extremum = std::max(report.extremum, v);
    if (k == phi.dim_in()) report.reference = v;
  }
  return report;
}

}  // namespace supernorm
