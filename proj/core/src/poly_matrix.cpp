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

#include "paracond/poly_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace paracond {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("PolyMatrix: negative dimension");
  }
  entries_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant({1.0, 0.0});
  return m;
}

PolyMatrix PolyMatrix::from_real(const Eigen::MatrixXd& m) {
  PolyMatrix result(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) {
        result.at(i, j) = LaurentPoly::constant({m(i, j), 0.0});
      }
    }
  }
  return result;
}

PolyMatrix PolyMatrix::from_complex(const Eigen::MatrixXcd& m) {
  PolyMatrix result(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) != Complex{0.0, 0.0}) {
        result.at(i, j) = LaurentPoly::constant(m(i, j));
      }
    }
  }
  return result;
}

PolyMatrix PolyMatrix::scalar_diagonal(int n, const LaurentPoly& p) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = p;
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("PolyMatrix product: dimension mismatch");
  }
  PolyMatrix result(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const LaurentPoly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const LaurentPoly& b = other.at(k, j);
        if (b.is_zero()) continue;
        result.at(i, j) += a * b;
      }
    }
  }
  return result;
}

PolyMatrix PolyMatrix::adjoint() const {
  PolyMatrix result(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      result.at(j, i) = at(i, j).conjugated();
    }
  }
  return result;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : entries_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

PolyMatrix::Exponent PolyMatrix::degree() const {
  bool seen = false;
  Exponent best = 0;
  for (const auto& p : entries_) {
    if (p.is_zero()) continue;
    best = seen ? std::max(best, p.degree()) : p.degree();
    seen = true;
  }
  if (!seen) throw std::domain_error("degree of the zero matrix is undefined");
  return best;
}

PolyMatrix::Exponent PolyMatrix::valuation() const {
  bool seen = false;
  Exponent best = 0;
  for (const auto& p : entries_) {
    if (p.is_zero()) continue;
    best = seen ? std::min(best, p.valuation()) : p.valuation();
    seen = true;
  }
  if (!seen) {
    throw std::domain_error("valuation of the zero matrix is undefined");
  }
  return best;
}

Eigen::MatrixXcd PolyMatrix::evaluate(Complex w) const {
  Eigen::MatrixXcd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      m(i, j) = at(i, j).evaluate(w);
    }
  }
  return m;
}

double PolyMatrix::paraunitary_residual() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("paraunitary check requires a square matrix");
  }
  const PolyMatrix product = adjoint() * (*this);
  double worst = 0.0;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      LaurentPoly diff = product.at(i, j);
      if (i == j) diff -= LaurentPoly::constant({1.0, 0.0});
      for (const auto& [k, c] : diff.coefficients()) {
        worst = std::max(worst, std::abs(c));
      }
    }
  }
  return worst;
}

double PolyMatrix::row_norm(int i) const {
  double sum = 0.0;
  for (int j = 0; j < cols_; ++j) {
    const double rn = at(i, j).coeff_norm();
    sum += rn * rn;
  }
  return std::sqrt(sum);
}

double PolyMatrix::max_row_norm() const {
  double best = 0.0;
  for (int i = 0; i < rows_; ++i) best = std::max(best, row_norm(i));
  return best;
}

void PolyMatrix::apply_two_row_block(int i, int j, const Eigen::Matrix2d& block) {
  if (i < 0 || j < 0 || i >= rows_ || j >= rows_ || i == j) {
    throw std::out_of_range("apply_two_row_block: bad row pair");
  }
  for (int col = 0; col < cols_; ++col) {
    LaurentPoly top = at(i, col) * Complex{block(0, 0), 0.0} +
                      at(j, col) * Complex{block(0, 1), 0.0};
    LaurentPoly bottom = at(i, col) * Complex{block(1, 0), 0.0} +
                         at(j, col) * Complex{block(1, 1), 0.0};
    at(i, col) = std::move(top);
    at(j, col) = std::move(bottom);
  }
}

void PolyMatrix::shift_row(int i, Exponent k) {
  if (i < 0 || i >= rows_) throw std::out_of_range("shift_row: bad row");
  for (int col = 0; col < cols_; ++col) {
    at(i, col) = at(i, col).shifted(k);
  }
}

double PolyMatrix::max_coeff_distance(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("max_coeff_distance: dimension mismatch");
  }
  double worst = 0.0;
  for (size_t idx = 0; idx < entries_.size(); ++idx) {
    worst = std::max(worst, entries_[idx].max_coeff_distance(other.entries_[idx]));
  }
  return worst;
}

}  // namespace paracond
