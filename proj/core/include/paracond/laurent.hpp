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

#include <complex>
#include <cstdint>
#include <map>

namespace paracond {

using Complex = std::complex<double>;

// w^k for integer k by binary exponentiation; throws std::domain_error for
// w == 0 with k < 0.
Complex integer_power(Complex w, std::int64_t k);

/// A Laurent polynomial with complex coefficients: a finitely supported map
/// from integer exponents (negative exponents allowed) to coefficients.
/// Coefficients whose magnitude falls at or below the prune tolerance after
/// arithmetic are dropped, so an empty support means the zero polynomial.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;

  /// Magnitude below which a coefficient is treated as an exact zero.
  static constexpr double kPruneTol = 1e-15;

  LaurentPoly() = default;

  static LaurentPoly constant(Complex c);
  static LaurentPoly monomial(Exponent k, Complex c = Complex{1.0, 0.0});

  bool is_zero() const { return coeffs_.empty(); }

  /// Maximal exponent carrying a nonzero coefficient.
  /// Undefined for the zero polynomial: throws std::domain_error.
  Exponent degree() const;

  /// Minimal exponent carrying a nonzero coefficient (the valuation).
  /// Undefined for the zero polynomial: throws std::domain_error.
  Exponent valuation() const;

  Complex coeff(Exponent k) const;
  void add_coeff(Exponent k, Complex c, double prune_tol = kPruneTol);

  const std::map<Exponent, Complex>& coefficients() const { return coeffs_; }

  /// Conjugate every coefficient and substitute z^{-1} for z.
  LaurentPoly conjugated() const;

  /// Multiplication by the monomial z^k.
  LaurentPoly shifted(Exponent k) const;

  /// l2 norm of the coefficient sequence.
  double coeff_norm() const;

  /// Sum of coeff(k) * w^k.  Throws std::domain_error when w == 0 and the
  /// valuation is negative.
  Complex evaluate(Complex w) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }

  /// Convolution product.
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly operator*(Complex scalar) const;

  /// Largest |coefficient difference| between this and other over the union
  /// of both supports.
  double max_coeff_distance(const LaurentPoly& other) const;

 private:
  std::map<Exponent, Complex> coeffs_;
};

}  // namespace paracond
