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

#include "paracond/lifting.hpp"
#include "paracond/oracles.hpp"
#include "paracond/transforms.hpp"

namespace paracond {
namespace {

// Independent construction of the Walsh-Hadamard matrix by the doubling
// recursion H_{2n} = [H_n, H_n; H_n, -H_n] / sqrt(2).
Eigen::MatrixXd hadamard_by_recursion(int n) {
  Eigen::MatrixXd h(1, 1);
  h(0, 0) = 1.0;
  while (h.rows() < n) {
    const int half = static_cast<int>(h.rows());
    Eigen::MatrixXd next(2 * half, 2 * half);
    next.topLeftCorner(half, half) = h;
    next.topRightCorner(half, half) = h;
    next.bottomLeftCorner(half, half) = h;
    next.bottomRightCorner(half, half) = -h;
    h = next / std::sqrt(2.0);
  }
  return h;
}

TEST_CASE("walsh-hadamard target matrix") {
  const double s = 1.0 / std::sqrt(2.0);
  const Eigen::MatrixXd h2 = target_matrix({TransformKind::walsh_hadamard, 2});
  Eigen::MatrixXd expected(2, 2);
  expected << s, s, s, -s;
  CHECK((h2 - expected).cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::MatrixXd h4 = target_matrix({TransformKind::walsh_hadamard, 4});
  CHECK(h4(1, 3) == Catch::Approx(-0.5).margin(1e-15));
  CHECK((h4 - hadamard_by_recursion(4)).cwiseAbs().maxCoeff() < 1e-15);
  const Eigen::MatrixXd h32 = target_matrix({TransformKind::walsh_hadamard, 32});
  CHECK((h32 - hadamard_by_recursion(32)).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(target_matrix({TransformKind::walsh_hadamard, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(target_matrix({TransformKind::walsh_hadamard, 0}),
                  std::invalid_argument);
}

TEST_CASE("dft real embedding") {
  const Eigen::MatrixXd f4 = target_matrix({TransformKind::dft_real, 4});
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd expected(4, 4);
  expected << s, 0, s, 0,
              0, s, 0, s,
              s, 0, -s, 0,
              0, s, 0, -s;
  CHECK((f4 - expected).cwiseAbs().maxCoeff() < 1e-15);

  // The embedding of a unitary is orthogonal.
  for (int n : {2, 4, 8, 16, 64}) {
    const Eigen::MatrixXd f = target_matrix({TransformKind::dft_real, n});
    CHECK((f.transpose() * f - Eigen::MatrixXd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
}

TEST_CASE("target programs compose to the targets") {
  SECTION("walsh-hadamard gate counts and matrices") {
    for (int n : {2, 4, 8, 32, 128}) {
      const TransformSpec spec{TransformKind::walsh_hadamard, n};
      const GateProgram p = target_program(spec);
      const int lg = static_cast<int>(std::lround(std::log2(n)));
      CHECK(p.step_count() == (n / 2) * lg);
      CHECK(matrix_equiv_oracle(p, target_matrix(spec)).computed <= 1e-10);
      for (const Gate& g : p.gates) CHECK(is_rotation(g));
    }
  }
  SECTION("dft real programs") {
    for (int n : {2, 4, 8, 16, 64}) {
      const TransformSpec spec{TransformKind::dft_real, n};
      const GateProgram p = target_program(spec);
      CHECK(matrix_equiv_oracle(p, target_matrix(spec)).computed <= 1e-10);
      for (const Gate& g : p.gates) CHECK(is_rotation(g));
    }
  }
  SECTION("empty program against identity") {
    GateProgram empty;
    empty.n = 4;
    CHECK(matrix_equiv_oracle(empty, Eigen::MatrixXd::Identity(4, 4)).computed ==
          0.0);
  }
}

TEST_CASE("scaled variants") {
  const double delta = 0.75;

  SECTION("n=2, window (-1,1): lifted final is the constant WH2") {
    const GateProgram p =
        scaled_variant({TransformKind::walsh_hadamard, 2}, delta, -1, 1);
    const auto cert = check_integral(p, delta).certificate.value();
    const auto lifted = lift_program(p, cert);
    CHECK(lifted.back().degree() == 0);
    CHECK(lifted.back().valuation() == 0);
    const Eigen::MatrixXd target = target_matrix({TransformKind::walsh_hadamard, 2});
    CHECK((lifted.back().evaluate({1.0, 0.0}) - target.cast<Complex>())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }

  SECTION("tightness builder") {
    const GateProgram p = tightness_program(delta);
    const Eigen::MatrixXd m = final_matrix(p);
    CHECK(m(0, 0) == 0.75);
    CHECK(m(1, 1) == Catch::Approx(4.0 / 3.0).margin(1e-15));
  }

  SECTION("n=4, window (-2,2): per-step supports stay inside the window") {
    const GateProgram p =
        scaled_variant({TransformKind::walsh_hadamard, 4}, delta, -2, 2);
    const auto cert = check_integral(p, delta).certificate.value();
    const auto lifted = lift_program(p, cert);
    std::int64_t worst_deg = 0;
    std::int64_t worst_val = 0;
    for (const PolyMatrix& m : lifted) {
      worst_deg = std::max(worst_deg, m.degree());
      worst_val = std::min(worst_val, m.valuation());
    }
    CHECK(worst_deg == 2);
    CHECK(worst_val == -2);
    CHECK(lifted.back().degree() == 0);
    CHECK(lifted.back().valuation() == 0);
    CHECK(matrix_equiv_oracle(p, target_matrix({TransformKind::walsh_hadamard, 4}))
              .computed <= 1e-12);
  }

  SECTION("every constant is an integral power of delta") {
    const GateProgram p =
        scaled_variant({TransformKind::walsh_hadamard, 8}, delta, -1, 1);
    CHECK(check_integral(p, delta).ok());
  }

  SECTION("infeasible windows are rejected") {
    CHECK_THROWS_AS(scaled_variant({TransformKind::walsh_hadamard, 4}, delta, 1, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaled_variant({TransformKind::walsh_hadamard, 4}, delta, -2, -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaled_variant({TransformKind::walsh_hadamard, 4}, 0.5, -1, 1),
                    std::invalid_argument);
  }

  SECTION("scaled dft variant also cancels exactly") {
    const GateProgram p =
        scaled_variant({TransformKind::dft_real, 8}, delta, -1, 1);
    CHECK(matrix_equiv_oracle(p, target_matrix({TransformKind::dft_real, 8}))
              .computed <= 1e-10);
  }
}

}  // namespace
}  // namespace paracond
