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

#include "supernorm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "supernorm/error.hpp"

namespace supernorm {

namespace {

Eigen::Index to_index(std::size_t n) { return static_cast<Eigen::Index>(n); }

void require_finite(const DenseMatrix& m) {
  if (!m.allFinite()) throw InvalidInput("matrix has non-finite entries");
}

void require_square(const ComplexMatrix& x, const char* op) {
  if (!x.is_square()) {
    throw InvalidInput(std::string(op) + ": expected a square matrix, got " + std::to_string(x.rows()) +
                       "x" + std::to_string(x.cols()));
  }
}

SpectralData spectral_from_dense(const DenseMatrix& m) {
  Eigen::JacobiSVD<DenseMatrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = solver.singularValues();
  std::vector<double> values(sv.data(), sv.data() + sv.size());
  std::size_t rank = 0;
  if (!values.empty() && values.front() > 0.0) {
    const double cutoff = kRankCutoff * values.front();
    rank = static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [&](double s) { return s > cutoff; }));
  }
  return SpectralData{std::move(values), ComplexMatrix(solver.matrixU()), ComplexMatrix(solver.matrixV()), rank};
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidInput("matrix dimensions must be positive");
  m_ = DenseMatrix::Zero(to_index(rows), to_index(cols));
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> entries)
    : ComplexMatrix(rows, cols) {
  if (entries.size() != rows * cols) {
    throw InvalidInput("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m_(to_index(i), to_index(j)) = entries[i * cols + j];
  }
  require_finite(m_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : rows.begin()->size();
  if (n_rows == 0 || n_cols == 0) throw InvalidInput("matrix dimensions must be positive");
  m_ = DenseMatrix::Zero(to_index(n_rows), to_index(n_cols));
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw InvalidInput("ragged matrix literal");
    std::size_t j = 0;
    for (const Complex& z : row) m_(to_index(i), to_index(j++)) = z;
    ++i;
  }
  require_finite(m_);
}

ComplexMatrix::ComplexMatrix(DenseMatrix dense) : m_(std::move(dense)) {
  if (m_.rows() == 0 || m_.cols() == 0) throw InvalidInput("matrix dimensions must be positive");
  require_finite(m_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  if (n == 0) throw InvalidInput("identity dimension must be positive");
  return ComplexMatrix(DenseMatrix::Identity(to_index(n), to_index(n)));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix out(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out.m_(to_index(i), to_index(i)) = diag[i];
  require_finite(out.m_);
  return out;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) { return ComplexMatrix(v.size(), 1, v); }

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out.m_(to_index(i), to_index(j)) = u[i] * std::conj(v[j]);
  }
  require_finite(out.m_);
  return out;
}

std::vector<Complex> ComplexMatrix::entries() const {
  std::vector<Complex> out;
  out.reserve(rows() * cols());
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    for (Eigen::Index j = 0; j < m_.cols(); ++j) out.push_back(m_(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(DenseMatrix(m_.adjoint())); }
ComplexMatrix ComplexMatrix::transpose() const { return ComplexMatrix(DenseMatrix(m_.transpose())); }

namespace {
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}
}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator+");
  return ComplexMatrix(DenseMatrix(a.m_ + b.m_));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator-");
  return ComplexMatrix(DenseMatrix(a.m_ - b.m_));
}

ComplexMatrix operator-(const ComplexMatrix& a) { return ComplexMatrix(DenseMatrix(-a.m_)); }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("operator*: inner dimensions differ");
  return ComplexMatrix(DenseMatrix(a.m_ * b.m_));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return ComplexMatrix(DenseMatrix(s * a.m_)); }

SpectralData svd(const ComplexMatrix& m) { return spectral_from_dense(m.dense()); }

SpectralData schmidt(std::span<const Complex> v, std::size_t dim_g, std::size_t dim_f) {
  if (dim_g == 0 || dim_f == 0 || v.size() != dim_g * dim_f) {
    throw InvalidInput("schmidt: vector length " + std::to_string(v.size()) + " does not match " +
                       std::to_string(dim_g) + "x" + std::to_string(dim_f));
  }
  double norm2 = 0.0;
  for (const Complex& z : v) norm2 += std::norm(z);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) throw InvalidInput("schmidt: vector is not normalized");

  // psi[g * dim_f + f] = M(g, f) = sum_i s_i left_i(g) conj(right_i(f)), so the
  // F-side factor of each product term is the conjugated right singular vector.
  SpectralData out = svd(ComplexMatrix(dim_g, dim_f, v));
  out.right_vectors = ComplexMatrix(DenseMatrix(out.right_vectors.dense().conjugate()));
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const DenseMatrix& x = a.dense();
  const DenseMatrix& y = b.dense();
  DenseMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return ComplexMatrix(std::move(out));
}

Complex inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_shape(x, y, "inner");
  return (x.dense().conjugate().cwiseProduct(y.dense())).sum();
}

ComplexMatrix operator_abs(const ComplexMatrix& x) {
  require_square(x, "operator_abs");
  return left_right_absolutes(x).second;
}

std::pair<ComplexMatrix, ComplexMatrix> left_right_absolutes(const ComplexMatrix& x) {
  require_square(x, "left_right_absolutes");
  // Built from the SVD rather than sqrt(X X*) so that small singular values
  // keep full relative precision.
  Eigen::JacobiSVD<DenseMatrix> solver(x.dense(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd s = solver.singularValues();
  const DenseMatrix& u = solver.matrixU();
  const DenseMatrix& v = solver.matrixV();
  DenseMatrix left = u * s.cast<Complex>().asDiagonal() * u.adjoint();
  DenseMatrix right = v * s.cast<Complex>().asDiagonal() * v.adjoint();
  left = 0.5 * (left + left.adjoint()).eval();
  right = 0.5 * (right + right.adjoint()).eval();
  return {ComplexMatrix(std::move(left)), ComplexMatrix(std::move(right))};
}

bool is_hermitian(const ComplexMatrix& x, double tol) {
  if (!x.is_square()) return false;
  const DenseMatrix diff = x.dense() - x.dense().adjoint();
  if (diff.isZero(0.0)) return true;
  Eigen::JacobiSVD<DenseMatrix> solver(diff);
  return solver.singularValues()(0) <= tol;
}

bool is_psd(const ComplexMatrix& x, double tol) {
  if (!is_hermitian(x, tol)) return false;
  return hermitian_eigen(x).eigenvalues.front() >= -tol;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& x) {
  require_square(x, "hermitian_eigen");
  const DenseMatrix h = 0.5 * (x.dense() + x.dense().adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw InvalidInput("hermitian_eigen: decomposition failed");
  const auto& ev = solver.eigenvalues();
  return HermitianEigen{std::vector<double>(ev.data(), ev.data() + ev.size()), ComplexMatrix(solver.eigenvectors())};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& x) {
  const HermitianEigen eig = hermitian_eigen(x);
  Eigen::VectorXd roots(static_cast<Eigen::Index>(eig.eigenvalues.size()));
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    roots(static_cast<Eigen::Index>(i)) = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
  }
  const DenseMatrix& u = eig.eigenvectors.dense();
  DenseMatrix out = u * roots.cast<Complex>().asDiagonal() * u.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return ComplexMatrix(std::move(out));
}

double max_abs(const ComplexMatrix& x) { return x.dense().cwiseAbs().maxCoeff(); }

std::vector<Complex> ket(std::size_t n, std::size_t i) {
  if (i >= n) throw InvalidInput("ket index out of range");
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  out[i] = 1.0;
  return out;
}

}  // namespace supernorm
