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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace supernorm {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Dense complex matrix with explicit, non-zero dimensions and finite entries.
///
/// Storage is delegated to Eigen; the class exists to enforce the shape and
/// finiteness invariants at every construction site. Entries are exposed in
/// row-major order for serialization.
class ComplexMatrix {
 public:
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Entries in row-major order; `entries.size()` must equal rows*cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);
  explicit ComplexMatrix(DenseMatrix dense);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  /// Column vector.
  static ComplexMatrix column(std::span<const Complex> v);
  /// |u><v|
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
  bool is_square() const { return m_.rows() == m_.cols(); }

  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Row-major copy of the entries.
  std::vector<Complex> entries() const;
  const DenseMatrix& dense() const { return m_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_.cols() == b.m_.cols() && a.m_ == b.m_;
  }

 private:
  DenseMatrix m_;
};

/// Singular value decomposition M = sum_i s_i |left_i><right_i|.
///
/// For a Schmidt decomposition the same container holds
/// psi = sum_i s_i |left_i> (x) |right_i>.
struct SpectralData {
  std::vector<double> singular_values;  // non-increasing, trailing zeros allowed
  ComplexMatrix left_vectors;           // orthonormal columns
  ComplexMatrix right_vectors;          // orthonormal columns
  std::size_t rank = 0;                 // count of s_i above 1e-12 * s_1
};

/// Singular values at or below this fraction of s_1 are treated as zero.
inline constexpr double kRankCutoff = 1e-12;

SpectralData svd(const ComplexMatrix& m);

/// Schmidt decomposition of a unit vector in G (x) F, with the G index
/// varying slowest (standard Kronecker layout).
SpectralData schmidt(std::span<const Complex> v, std::size_t dim_g, std::size_t dim_f);

/// Kronecker product A (x) B.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace inner product tr(X* Y).
Complex inner(const ComplexMatrix& x, const ComplexMatrix& y);

/// |X| = sqrt(X* X).
ComplexMatrix operator_abs(const ComplexMatrix& x);

/// (sqrt(X X*), sqrt(X* X)).
std::pair<ComplexMatrix, ComplexMatrix> left_right_absolutes(const ComplexMatrix& x);

bool is_hermitian(const ComplexMatrix& x, double tol);
bool is_psd(const ComplexMatrix& x, double tol);

/// Eigen-decomposition of the Hermitian part (X + X*)/2; eigenvalues ascending.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};
HermitianEigen hermitian_eigen(const ComplexMatrix& x);

/// Square root of a Hermitian PSD matrix; eigenvalues below zero are clamped.
ComplexMatrix psd_sqrt(const ComplexMatrix& x);

/// Largest entry modulus.
double max_abs(const ComplexMatrix& x);

/// Standard basis vector |i> of dimension n.
std::vector<Complex> ket(std::size_t n, std::size_t i);

}  // namespace supernorm
