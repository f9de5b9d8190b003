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
#include "paracond/condition.hpp"
#include "paracond/transforms.hpp"

namespace paracond {
namespace {

TEST_CASE("spectral norm") {
  const Eigen::MatrixXd id4 = Eigen::MatrixXd::Identity(4, 4);
  CHECK(spectral_norm(id4) == Catch::Approx(1.0).margin(1e-10));

  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
  diag(0, 0) = 0.75;
  diag(1, 1) = 4.0 / 3.0;
  CHECK(spectral_norm(diag) == Catch::Approx(4.0 / 3.0).margin(1e-10));

  SECTION("random 5x5 against a random-direction maximization oracle") {
    Rng rng(41);
    Eigen::MatrixXd m(5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) m(i, j) = rng.normal();
    }
    const double computed = spectral_norm(m);
    double best = 0.0;
    for (int rep = 0; rep < 100000; ++rep) {
      Eigen::VectorXd x(5);
      for (int i = 0; i < 5; ++i) x(i) = rng.normal();
      x.normalize();
      best = std::max(best, (m * x).norm());
    }
    CHECK(best <= computed + 1e-9);
    CHECK(computed - best <= 1e-3 * computed);
  }

  SECTION("non-finite entries throw") {
    Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(spectral_norm(bad), std::invalid_argument);
  }
}

TEST_CASE("geometric condition numbers") {
  Rng rng(5);
  for (int rep = 0; rep < 5; ++rep) {
    const Eigen::MatrixXd q = random_orthogonal(4, rng);
    CHECK(geometric_condition(q) == Catch::Approx(1.0).margin(1e-9));
  }

  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
  diag(0, 0) = 0.75;
  diag(1, 1) = 4.0 / 3.0;
  CHECK(geometric_condition(diag) == Catch::Approx(16.0 / 9.0).margin(1e-12));

  SECTION("rotation-only programs are perfectly conditioned at every step") {
    const GateProgram wh = target_program({TransformKind::walsh_hadamard, 8});
    const auto report = geometric_condition_report(wh);
    for (const auto& step : report.steps) {
      CHECK(step.geometric == Catch::Approx(1.0).margin(1e-9));
    }
  }

  SECTION("singular input throws") {
    const Eigen::MatrixXd zero3 = Eigen::MatrixXd::Zero(3, 3);
    CHECK_THROWS_AS(geometric_condition(zero3), std::domain_error);
  }

  SECTION("condition of the inverse matches") {
    Rng rng2(77);
    for (int rep = 0; rep < 10; ++rep) {
      Eigen::MatrixXd m(4, 4);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m(i, j) = rng2.normal();
      }
      const double forward = geometric_condition(m);
      const double backward = geometric_condition(m.inverse().eval());
      CHECK(std::abs(forward - backward) <= 1e-8 * forward);
    }
  }
}

TEST_CASE("algebraic condition numbers") {
  SECTION("tightness example: deg 1, val -1, condition 16/9") {
    const GateProgram p = tightness_program(0.75);
    const auto cert = check_integral(p, 0.75).certificate.value();
    const auto lifted = lift_program(p, cert);
    const auto report = condition_report(p, lifted, 0.75);
    CHECK(report.steps.back().deg == 1);
    CHECK(report.steps.back().val == -1);
    CHECK(report.steps.back().algebraic ==
          Catch::Approx(16.0 / 9.0).margin(1e-12));
    CHECK(report.algorithm_algebraic == Catch::Approx(16.0 / 9.0).margin(1e-12));
    // rho = log2(16/9) / (2 log2(4/3)) = 1 exactly for this kappa.
    CHECK(report.rho == Catch::Approx(1.0).margin(1e-12));
  }

  SECTION("rotation-only programs have algebraic condition 1") {
    const GateProgram wh = target_program({TransformKind::walsh_hadamard, 4});
    const auto cert = check_integral(wh, 0.75).certificate.value();
    const auto report = condition_report(wh, lift_program(wh, cert), 0.75);
    for (const auto& step : report.steps) CHECK(step.algebraic == 1.0);
  }

  SECTION("scaled variant with window (-1,1) stays below delta^-2") {
    const GateProgram p =
        scaled_variant({TransformKind::walsh_hadamard, 4}, 0.75, -1, 1);
    const auto cert = check_integral(p, 0.75).certificate.value();
    const auto report = condition_report(p, lift_program(p, cert), 0.75);
    CHECK(report.algorithm_algebraic <= 16.0 / 9.0 + 1e-12);
    CHECK(report.algorithm_algebraic == Catch::Approx(16.0 / 9.0).margin(1e-12));
  }

  SECTION("base substitution leaves the condition unchanged") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 0.5625}, ConstantGate{1, 16.0 / 9.0}};
    const auto coarse = check_integral(p, 0.5625).certificate.value();
    const auto fine = check_integral(p, 0.75).certificate.value();
    const auto report_coarse =
        condition_report(p, lift_program(p, coarse), coarse.delta);
    const auto report_fine =
        condition_report(p, lift_program(p, fine), fine.delta);
    CHECK(report_coarse.algorithm_algebraic ==
          Catch::Approx(report_fine.algorithm_algebraic).epsilon(1e-12));
  }

  SECTION("left-multiplying all steps by a common monomial changes nothing") {
    const GateProgram p = tightness_program(0.75);
    const auto cert = check_integral(p, 0.75).certificate.value();
    auto lifted = lift_program(p, cert);
    for (auto& m : lifted) {
      for (int row = 0; row < m.rows(); ++row) m.shift_row(row, 3);
    }
    const auto report = condition_report(p, lifted, 0.75);
    CHECK(report.algorithm_algebraic == Catch::Approx(16.0 / 9.0).margin(1e-12));
  }
}

TEST_CASE("general algebraic condition via rounding schedules") {
  SECTION("integral programs on a schedule of roots give a constant sequence") {
    const GateProgram p = tightness_program(0.75);
    RoundingSchedule roots;
    for (int q = 1; q <= 8; ++q) {
      roots.deltas.push_back(std::pow(0.75, 1.0 / q));
    }
    const auto result = general_algebraic_condition(p, roots);
    for (double kappa : result.kappa_q) {
      CHECK(kappa == Catch::Approx(16.0 / 9.0).epsilon(1e-9));
    }
    CHECK(result.converged);
  }

  SECTION("single constant 1/pi converges to pi") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 1.0 / std::numbers::pi}};
    const auto result =
        general_algebraic_condition(p, RoundingSchedule::standard());
    CHECK(result.estimate ==
          Catch::Approx(std::numbers::pi).epsilon(1e-3));
    // The limit matches the geometric condition of the final matrix.
    const double geo = geometric_condition(final_matrix(p));
    CHECK(result.estimate == Catch::Approx(geo).epsilon(1e-3));
  }

  SECTION("rotation-only programs give kappa_q = 1") {
    const GateProgram wh = target_program({TransformKind::walsh_hadamard, 4});
    const auto result =
        general_algebraic_condition(wh, RoundingSchedule::standard(6));
    for (double kappa : result.kappa_q) CHECK(kappa == 1.0);
  }
}

TEST_CASE("lemma 1 margins") {
  SECTION("tightness example attains equality at both steps") {
    const GateProgram p = tightness_program(0.75);
    const auto cert = check_integral(p, 0.75).certificate.value();
    const auto rows = lemma1_check(p, cert);
    for (const auto& row : rows) {
      CHECK(row.holds);
      CHECK(row.equality);
    }
    CHECK(rows.back().algebraic == Catch::Approx(16.0 / 9.0).margin(1e-12));
  }

  SECTION("random delta-integral programs never violate the inequality") {
    Rng rng(7);
    CampaignParams params;
    for (int rep = 0; rep < 20; ++rep) {
      const GateProgram p = random_balanced_program(params, rng);
      const auto cert = check_integral(p, params.delta).certificate.value();
      for (const auto& row : lemma1_check(p, cert)) {
        CHECK(row.margin >= -1e-9);
      }
    }
  }
}

TEST_CASE("maximum modulus sampling") {
  SECTION("diag(z, z^-1) at delta") {
    PolyMatrix diag(2, 2);
    diag.at(0, 0) = LaurentPoly::monomial(1);
    diag.at(1, 1) = LaurentPoly::monomial(-1);
    const auto row = max_modulus_check(diag, 0.75, 64);
    CHECK(row.primal_interior == Catch::Approx(1.0).margin(1e-9));
    CHECK(row.circle_max == Catch::Approx(1.0).margin(1e-9));
    CHECK(row.primal_slack >= -1e-8);
    CHECK(row.dual_slack >= -1e-8);
  }

  SECTION("rotation-only prefixes give both sides 1") {
    const GateProgram wh = target_program({TransformKind::walsh_hadamard, 4});
    const auto cert = check_integral(wh, 0.75).certificate.value();
    const auto rows = max_modulus_sweep(lift_program(wh, cert), 0.75, 32);
    for (const auto& row : rows) {
      CHECK(row.primal_interior == Catch::Approx(1.0).margin(1e-9));
      CHECK(row.dual_interior == Catch::Approx(1.0).margin(1e-9));
      CHECK(row.circle_max == Catch::Approx(1.0).margin(1e-9));
    }
  }

  SECTION("scaled WH prefixes satisfy both inequalities") {
    const GateProgram p =
        scaled_variant({TransformKind::walsh_hadamard, 4}, 0.75, -1, 1);
    const auto cert = check_integral(p, 0.75).certificate.value();
    for (const auto& row :
         max_modulus_sweep(lift_program(p, cert), 0.75, 128)) {
      CHECK(row.primal_slack >= -1e-8);
      CHECK(row.dual_slack >= -1e-8);
    }
  }
}

TEST_CASE("lower bound certificate") {
  const auto wh8 = lower_bound_certificate(8, 1.0, 12);
  CHECK(wh8.bound_value == Catch::Approx(24.0).margin(1e-12));
  CHECK(wh8.ratio == Catch::Approx(0.5).margin(1e-12));

  const auto conditioned = lower_bound_certificate(8, 16.0 / 9.0, 12);
  CHECK(conditioned.bound_value == Catch::Approx(24.0 * 0.75).margin(1e-12));

  const auto extreme = lower_bound_certificate(16, 16.0, 100);
  CHECK(extreme.bound_value == Catch::Approx(16.0 * 4.0 / 4.0).margin(1e-12));

  CHECK_THROWS_AS(lower_bound_certificate(8, 0.5, 12), std::invalid_argument);
}

}  // namespace
}  // namespace paracond
