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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "paracond/campaign.hpp"
#include "paracond/laurent.hpp"
#include "paracond/poly_matrix.hpp"

namespace paracond {
namespace {

LaurentPoly from_pairs(std::initializer_list<std::pair<std::int64_t, Complex>> terms) {
  LaurentPoly p;
  for (const auto& [k, c] : terms) p.add_coeff(k, c);
  return p;
}

TEST_CASE("ring arithmetic") {
  const LaurentPoly one_plus = from_pairs({{0, 1.0}, {1, 1.0}});
  const LaurentPoly one_minus = from_pairs({{0, 1.0}, {1, -1.0}});
  const LaurentPoly product = one_plus * one_minus;
  CHECK(std::abs(product.coeff(0) - Complex{1.0, 0.0}) == 0.0);
  CHECK(std::abs(product.coeff(2) + Complex{1.0, 0.0}) == 0.0);
  CHECK(product.coeff(1) == Complex{0.0, 0.0});

  const LaurentPoly unit = LaurentPoly::monomial(-1) * LaurentPoly::monomial(1);
  CHECK(unit.degree() == 0);
  CHECK(std::abs(unit.coeff(0) - Complex{1.0, 0.0}) == 0.0);

  const LaurentPoly sum =
      from_pairs({{-2, -6.0}, {0, 3.0}, {5, 1.0}}) + from_pairs({{-2, 6.0}});
  CHECK(sum.degree() == 5);
  CHECK(sum.valuation() == 0);
  CHECK(std::abs(sum.coeff(0) - Complex{3.0, 0.0}) == 0.0);
}

TEST_CASE("degree and valuation") {
  const LaurentPoly p = from_pairs({{-2, -6.0}, {0, 3.0}, {5, 1.0}});
  CHECK(p.degree() == 5);
  CHECK(p.valuation() == -2);

  CHECK(LaurentPoly::monomial(3).degree() == 3);
  CHECK(LaurentPoly::monomial(3).valuation() == 3);
  CHECK(LaurentPoly::monomial(-1, 4.0).degree() == -1);
  CHECK(LaurentPoly::monomial(-1, 4.0).valuation() == -1);

  const LaurentPoly zero;
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(zero.degree(), std::domain_error);
  CHECK_THROWS_AS(zero.valuation(), std::domain_error);
}

TEST_CASE("conjugation") {
  const LaurentPoly p = from_pairs({{0, 3.0}, {1, 2.0}});
  const LaurentPoly q = p.conjugated();
  CHECK(q.coeff(0) == Complex{3.0, 0.0});
  CHECK(q.coeff(-1) == Complex{2.0, 0.0});

  const LaurentPoly imag = LaurentPoly::monomial(1, {0.0, 1.0});
  CHECK(imag.conjugated().coeff(-1) == Complex{0.0, -1.0});

  Rng rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const LaurentPoly r = random_laurent(-4, 5, rng);
    CHECK(r.conjugated().conjugated().max_coeff_distance(r) == 0.0);
  }
}

TEST_CASE("coefficient norm") {
  const LaurentPoly p = from_pairs({{0, 1.0}, {-1, 0.75}});
  CHECK(p.coeff_norm() == Catch::Approx(1.25).margin(1e-15));
  CHECK(LaurentPoly::monomial(7).coeff_norm() == 1.0);
  CHECK(LaurentPoly::monomial(-9).coeff_norm() == 1.0);
  CHECK(LaurentPoly{}.coeff_norm() == 0.0);
}

TEST_CASE("evaluation") {
  const LaurentPoly p = from_pairs({{0, 1.0}, {1, 1.0}});
  CHECK(p.evaluate({0.75, 0.0}).real() == Catch::Approx(1.75).margin(1e-15));

  const Complex quarter = std::exp(Complex{0.0, 2.0 * std::numbers::pi * 0.25});
  const Complex z_at_quarter = LaurentPoly::monomial(1).evaluate(quarter);
  CHECK(std::abs(z_at_quarter - Complex{0.0, 1.0}) < 1e-15);

  const LaurentPoly negative = LaurentPoly::monomial(-1);
  CHECK_THROWS_AS(negative.evaluate({0.0, 0.0}), std::domain_error);

  // Evaluation is a ring homomorphism.
  Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const LaurentPoly a = random_laurent(-3, 3, rng);
    const LaurentPoly b = random_laurent(-2, 4, rng);
    const Complex w{rng.uniform(0.2, 1.5), rng.uniform(-0.5, 0.5)};
    const Complex lhs = (a * b).evaluate(w);
    const Complex rhs = a.evaluate(w) * b.evaluate(w);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("matrix adjoint") {
  const PolyMatrix id = PolyMatrix::identity(3);
  CHECK(id.adjoint().max_coeff_distance(id) == 0.0);

  PolyMatrix diag(2, 2);
  diag.at(0, 0) = LaurentPoly::monomial(1);
  diag.at(1, 1) = LaurentPoly::monomial(-1);
  const PolyMatrix adj = diag.adjoint();
  CHECK(adj.at(0, 0).degree() == -1);
  CHECK(adj.at(1, 1).degree() == 1);

  Rng rng(5);
  for (int rep = 0; rep < 8; ++rep) {
    PolyMatrix m(3, 3), n(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m.at(i, j) = random_laurent(-2, 2, rng);
        n.at(i, j) = random_laurent(-1, 3, rng);
      }
    }
    const PolyMatrix lhs = (m * n).adjoint();
    const PolyMatrix rhs = n.adjoint() * m.adjoint();
    CHECK(lhs.max_coeff_distance(rhs) < 1e-12);
  }
}

TEST_CASE("paraunitarity") {
  CHECK(PolyMatrix::identity(4).paraunitary_residual() == 0.0);

  PolyMatrix diag(2, 2);
  diag.at(0, 0) = LaurentPoly::monomial(1);
  diag.at(1, 1) = LaurentPoly::monomial(-1);
  CHECK(diag.is_paraunitary(1e-12));

  PolyMatrix bad(2, 2);
  bad.at(0, 0) = LaurentPoly::monomial(1, 2.0);
  bad.at(1, 1) = LaurentPoly::monomial(-1);
  CHECK_FALSE(bad.is_paraunitary(1e-9));
  CHECK(bad.paraunitary_residual() == Catch::Approx(3.0).margin(1e-15));

  PolyMatrix rect(2, 3);
  CHECK_THROWS_AS(rect.paraunitary_residual(), std::invalid_argument);

  SECTION("products of paraunitary factors stay paraunitary") {
    Rng rng(17);
    for (int rep = 0; rep < 10; ++rep) {
      const PolyMatrix a = random_paraunitary(4, 8, rng);
      const PolyMatrix b = random_paraunitary(4, 8, rng);
      CHECK((a * b).is_paraunitary(1e-9));
    }
  }

  SECTION("unit-circle evaluations are unitary") {
    Rng rng(23);
    const PolyMatrix u = random_paraunitary(4, 12, rng);
    for (int s = 0; s < 16; ++s) {
      const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const Eigen::MatrixXcd e = u.evaluate({std::cos(angle), std::sin(angle)});
      const double residual =
          (e * e.adjoint() - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff();
      CHECK(residual <= 1e-9);
    }
  }
}

TEST_CASE("row norms") {
  CHECK(PolyMatrix::identity(5).max_row_norm() == 1.0);

  PolyMatrix row(1, 2);
  row.at(0, 0) = from_pairs({{0, 1.0}, {1, 1.0}});
  row.at(0, 1) = from_pairs({{0, 1.0}, {1, -1.0}});
  CHECK(row.row_norm(0) == Catch::Approx(2.0).margin(1e-15));

  // Multiplying by a monomial diagonal permutes coefficients within rows.
  Rng rng(29);
  for (int rep = 0; rep < 6; ++rep) {
    PolyMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m.at(i, j) = random_laurent(-2, 2, rng);
    }
    PolyMatrix shifted = m;
    for (int j = 0; j < 3; ++j) {
      // Right-multiplying by diag(z^{k_j}) shifts column j.
      const auto k = rng.uniform_int(-3, 3);
      for (int i = 0; i < 3; ++i) {
        shifted.at(i, j) = shifted.at(i, j).shifted(k);
      }
    }
    for (int i = 0; i < 3; ++i) {
      CHECK(shifted.row_norm(i) == Catch::Approx(m.row_norm(i)).margin(1e-12));
    }
  }
}

TEST_CASE("zero pruning keeps supports tight") {
  LaurentPoly p = from_pairs({{0, 1.0}, {3, 1e-16}});
  CHECK(p.degree() == 0);
  LaurentPoly q = from_pairs({{2, 1.0}});
  q -= from_pairs({{2, 1.0}});
  CHECK(q.is_zero());
}

}  // namespace
}  // namespace paracond
