// Copyright 2026 The paracond authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "paracond/laurent.hpp"

namespace paracond {

/// A dense matrix of Laurent polynomials.  deg/val are taken over the
/// nonzero entries; the adjoint transposes and applies polynomial
/// conjugation entrywise.
class PolyMatrix {
 public:
  using Exponent = LaurentPoly::Exponent;

  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);

  static PolyMatrix identity(int n);
  static PolyMatrix from_real(const Eigen::MatrixXd& m);
  static PolyMatrix from_complex(const Eigen::MatrixXcd& m);
  /// diag(p, ..., p) of size n.
  static PolyMatrix scalar_diagonal(int n, const LaurentPoly& p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  LaurentPoly& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const LaurentPoly& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  PolyMatrix operator*(const PolyMatrix& other) const;

  /// Transpose plus polynomial conjugation of every entry.
  PolyMatrix adjoint() const;

  bool is_zero() const;
  /// max over nonzero entries of entry degrees; throws std::domain_error on
  /// the zero matrix.
  Exponent degree() const;
  /// min over nonzero entries of entry valuations; throws on the zero matrix.
  Exponent valuation() const;

  Eigen::MatrixXcd evaluate(Complex w) const;

  /// Largest coefficient magnitude of adjoint()*this - Id.
  /// Throws std::invalid_argument for non-square matrices.
  double paraunitary_residual() const;
  bool is_paraunitary(double tol) const { return paraunitary_residual() <= tol; }

  /// Root-sum-square of the coefficient norms of the entries in row i.
  double row_norm(int i) const;
  double max_row_norm() const;

  /// In-place left multiplication by a 2x2 block acting on rows i and j.
  void apply_two_row_block(int i, int j, const Eigen::Matrix2d& block);

  /// Multiply row i by z^k.
  void shift_row(int i, Exponent k);

  double max_coeff_distance(const PolyMatrix& other) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

}  // namespace paracond
