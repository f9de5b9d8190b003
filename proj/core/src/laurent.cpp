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

#include "paracond/laurent.hpp"

#include <cmath>
#include <stdexcept>

namespace paracond {

Complex integer_power(Complex w, std::int64_t k) {
  if (k < 0) {
    if (w == Complex{0.0, 0.0}) {
      throw std::domain_error("integer_power: 0 raised to a negative power");
    }
    return Complex{1.0, 0.0} / integer_power(w, -k);
  }
  Complex result{1.0, 0.0};
  Complex base = w;
  std::uint64_t e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

LaurentPoly LaurentPoly::constant(Complex c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(Exponent k, Complex c) {
  LaurentPoly p;
  p.add_coeff(k, c);
  return p;
}

LaurentPoly::Exponent LaurentPoly::degree() const {
  if (coeffs_.empty()) {
    throw std::domain_error("degree of the zero polynomial is undefined");
  }
  return coeffs_.rbegin()->first;
}

LaurentPoly::Exponent LaurentPoly::valuation() const {
  if (coeffs_.empty()) {
    throw std::domain_error("valuation of the zero polynomial is undefined");
  }
  return coeffs_.begin()->first;
}

Complex LaurentPoly::coeff(Exponent k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

void LaurentPoly::add_coeff(Exponent k, Complex c, double prune_tol) {
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    if (std::abs(c) > prune_tol) coeffs_.emplace(k, c);
    return;
  }
  it->second += c;
  if (std::abs(it->second) <= prune_tol) coeffs_.erase(it);
}

LaurentPoly LaurentPoly::conjugated() const {
  LaurentPoly result;
  for (const auto& [k, c] : coeffs_) {
    result.coeffs_.emplace(-k, std::conj(c));
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly result;
  for (const auto& [e, c] : coeffs_) {
    result.coeffs_.emplace(e + k, c);
  }
  return result;
}

double LaurentPoly::coeff_norm() const {
  double sum = 0.0;
  for (const auto& [k, c] : coeffs_) sum += std::norm(c);
  return std::sqrt(sum);
}

Complex LaurentPoly::evaluate(Complex w) const {
  if (w == Complex{0.0, 0.0} && !is_zero() && valuation() < 0) {
    throw std::domain_error(
        "evaluation at 0 of a polynomial with negative exponents");
  }
  Complex sum{0.0, 0.0};
  for (const auto& [k, c] : coeffs_) sum += c * integer_power(w, k);
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.coeffs_) add_coeff(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.coeffs_) add_coeff(k, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly result;
  for (const auto& [ka, ca] : coeffs_) {
    for (const auto& [kb, cb] : other.coeffs_) {
      result.add_coeff(ka + kb, ca * cb);
    }
  }
  return result;
}

LaurentPoly LaurentPoly::operator*(Complex scalar) const {
  LaurentPoly result;
  for (const auto& [k, c] : coeffs_) result.add_coeff(k, c * scalar);
  return result;
}

double LaurentPoly::max_coeff_distance(const LaurentPoly& other) const {
  double worst = 0.0;
  for (const auto& [k, c] : coeffs_) {
    worst = std::max(worst, std::abs(c - other.coeff(k)));
  }
  for (const auto& [k, c] : other.coeffs_) {
    worst = std::max(worst, std::abs(coeff(k) - c));
  }
  return worst;
}

}  // namespace paracond
