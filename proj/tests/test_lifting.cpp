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

#include "paracond/lifting.hpp"
#include "paracond/transforms.hpp"

namespace paracond {
namespace {

TEST_CASE("integrality detection") {
  SECTION("rotation-only programs are integral with an empty exponent map") {
    const GateProgram wh = target_program({TransformKind::walsh_hadamard, 8});
    const auto result = check_integral(wh, 0.9);
    REQUIRE(result.ok());
    CHECK(result.certificate->exponents.empty());
  }

  SECTION("explicit powers") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 0.75}, ConstantGate{1, 4.0 / 3.0}};
    const auto result = check_integral(p, 0.75);
    REQUIRE(result.ok());
    CHECK(result.certificate->exponents.at(0.75) == 1);
    CHECK(result.certificate->exponents.at(4.0 / 3.0) == -1);
  }

  SECTION("transcendental ratios are rejected and named") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 1.0 / std::numbers::pi}};
    const auto result = check_integral(p, 0.75);
    REQUIRE_FALSE(result.ok());
    CHECK(result.offending_constant.value() ==
          Catch::Approx(1.0 / std::numbers::pi).margin(1e-15));
  }

  SECTION("small bases are replaced by a root above 2/3") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 0.5}};
    const auto result = check_integral(p, 0.5);
    REQUIRE(result.ok());
    const auto& cert = *result.certificate;
    CHECK(cert.delta > 2.0 / 3.0);
    CHECK(cert.delta < 1.0);
    CHECK(cert.delta == Catch::Approx(std::sqrt(0.5)).margin(1e-15));
    CHECK(cert.exponents.at(0.5) == 2);
    CHECK(std::abs(std::pow(cert.delta, 2.0) - 0.5) <= 1e-12 * 0.5);
  }

  SECTION("delta outside (0,1) throws") {
    GateProgram p;
    p.n = 2;
    CHECK_THROWS_AS(check_integral(p, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(check_integral(p, 0.0), std::invalid_argument);
  }
}

TEST_CASE("lifting") {
  SECTION("tightness example lifts to diag(z, z^-1)") {
    const GateProgram p = tightness_program(0.75);
    const auto cert = check_integral(p, 0.75).certificate.value();
    const auto lifted = lift_program(p, cert);
    REQUIRE(lifted.size() == 3);
    const PolyMatrix& last = lifted.back();
    CHECK(std::abs(last.at(0, 0).coeff(1) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(last.at(1, 1).coeff(-1) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(last.at(0, 1).is_zero());
  }

  SECTION("rotation-only lifts have support {0} and equal the real prefixes") {
    const GateProgram wh = target_program({TransformKind::walsh_hadamard, 4});
    const auto cert = check_integral(wh, 0.75).certificate.value();
    const auto lifted = lift_program(wh, cert);
    for_each_prefix(wh, [&](int t, const Eigen::MatrixXd& prefix) {
      const PolyMatrix& m = lifted[static_cast<size_t>(t)];
      CHECK(m.degree() == 0);
      CHECK(m.valuation() == 0);
      CHECK((m.evaluate({1.0, 0.0}) - prefix.cast<Complex>()).cwiseAbs().maxCoeff() <
            1e-12);
    });
  }

  SECTION("evaluation identity and paraunitarity at every step") {
    const GateProgram p =
        scaled_variant({TransformKind::walsh_hadamard, 4}, 0.75, -1, 1);
    const auto cert = check_integral(p, 0.75).certificate.value();
    const auto lifted = lift_program(p, cert);
    for_each_prefix(p, [&](int t, const Eigen::MatrixXd& prefix) {
      const PolyMatrix& m = lifted[static_cast<size_t>(t)];
      CHECK(m.is_paraunitary(1e-9));
      CHECK((m.evaluate({0.75, 0.0}) - prefix.cast<Complex>())
                .cwiseAbs()
                .maxCoeff() <= 1e-9);
    });
  }

  SECTION("certificate mismatch throws") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 0.75}};
    IntegralityCertificate empty;
    empty.delta = 0.75;
    CHECK_THROWS_AS(lift_program(p, empty), std::invalid_argument);
  }
}

TEST_CASE("rounding to integral programs") {
  SECTION("ceiling formula for 1/pi at 0.75") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 1.0 / std::numbers::pi}};
    const GateProgram rounded = round_to_integral(p, 0.75);
    const auto& gate = std::get<ConstantGate>(rounded.gates[0]);
    // log_0.75(1/pi) ~ 3.978, so the ceiling exponent is 4.
    CHECK(gate.value == Catch::Approx(0.31640625).margin(1e-15));
  }

  SECTION("exact powers and rotations are untouched") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 0.75},
               RotationGate{0, 1, 0.3, false}};
    const GateProgram rounded = round_to_integral(p, 0.75);
    CHECK(std::get<ConstantGate>(rounded.gates[0]).value == 0.75);
    CHECK(is_rotation(rounded.gates[1]));
  }

  SECTION("idempotence at the same base") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 1.0 / std::numbers::pi}, ConstantGate{1, 2.5}};
    const GateProgram once = round_to_integral(p, 0.8);
    const GateProgram twice = round_to_integral(once, 0.8);
    for (size_t g = 0; g < once.gates.size(); ++g) {
      CHECK(std::get<ConstantGate>(once.gates[g]).value ==
            std::get<ConstantGate>(twice.gates[g]).value);
    }
    CHECK(check_integral(once, 0.8).ok());
  }
}

TEST_CASE("rounding schedules") {
  const auto schedule = RoundingSchedule::standard();
  schedule.validate();
  CHECK(schedule.deltas.front() == Catch::Approx(5.0 / 6.0).margin(1e-15));
  CHECK(schedule.deltas.back() > 0.999999);
  for (size_t q = 1; q < schedule.deltas.size(); ++q) {
    CHECK(schedule.deltas[q] > schedule.deltas[q - 1]);
  }

  RoundingSchedule bad;
  bad.deltas = {0.8, 0.7};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("convergence reports") {
  SECTION("rotation-only programs never deviate") {
    const GateProgram wh = target_program({TransformKind::walsh_hadamard, 8});
    const auto report = convergence_report(wh, RoundingSchedule::standard(8));
    for (const auto& row : report.rows) CHECK(row.max_deviation == 0.0);
  }

  SECTION("single constant 1/pi on the dyadic example schedule") {
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, 1.0 / std::numbers::pi}};
    RoundingSchedule schedule;
    for (int q = 4; q <= 20; ++q) {
      schedule.deltas.push_back(1.0 - std::pow(2.0, -q));
    }
    const auto report = convergence_report(p, schedule);
    for (size_t qi = 0; qi < schedule.deltas.size(); ++qi) {
      // The deviation is |c_q - c| for the ceiling-rounded constant.
      const double delta_q = schedule.deltas[qi];
      const double c = 1.0 / std::numbers::pi;
      const double exponent = std::ceil(std::log(c) / std::log(delta_q));
      const double expected = std::abs(std::pow(delta_q, exponent) - c);
      CHECK(report.rows[qi].max_deviation ==
            Catch::Approx(expected).margin(1e-15));
      const int q = 4 + static_cast<int>(qi);
      if (q >= 12) CHECK(report.rows[qi].max_deviation <= 1e-3);
    }
    CHECK(report.rows.back().max_deviation < report.rows.front().max_deviation);
  }

  SECTION("balanced pair deviation obeys the triangle inequality") {
    const double c = 1.0 / std::numbers::pi;
    GateProgram p;
    p.n = 2;
    p.gates = {ConstantGate{0, c}, ConstantGate{0, 1.0 / c}};
    const auto schedule = RoundingSchedule::standard(10);
    const auto report = convergence_report(p, schedule);
    for (size_t qi = 0; qi < schedule.deltas.size(); ++qi) {
      const double delta_q = schedule.deltas[qi];
      const auto dev = [&](double value) {
        const double exponent = std::ceil(std::log(value) / std::log(delta_q));
        return std::abs(std::pow(delta_q, exponent) - value);
      };
      const double bound = std::numbers::pi * (dev(c) + dev(1.0 / c)) + 1e-12;
      CHECK(report.rows[qi].max_deviation <= bound);
    }
  }
}

}  // namespace
}  // namespace paracond
