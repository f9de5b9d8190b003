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

#include "paracond/lifting.hpp"

#include <cmath>
#include <stdexcept>

namespace paracond {

namespace {

constexpr double kExponentTol = 1e-9;
constexpr double kValueRelTol = 1e-12;
constexpr double kCeilSnapTol = 1e-12;

bool exponent_of(double c, double delta, std::int64_t* out) {
  const double estimate = std::log(c) / std::log(delta);
  const double rounded = std::round(estimate);
  const std::int64_t k = static_cast<std::int64_t>(rounded);
  if (std::abs(estimate - rounded) <= kExponentTol) {
    *out = k;
    return true;
  }
  const double reproduced = std::pow(delta, rounded);
  if (std::abs(reproduced - c) <= kValueRelTol * std::abs(c)) {
    *out = k;
    return true;
  }
  return false;
}

}  // namespace

IntegralityResult check_integral(const GateProgram& p, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("check_integral: delta must lie in (0, 1)");
  }
  // The standing assumption wants the base above 2/3; a smaller base is
  // replaced by its l-th root, with respect to which the program stays
  // integral (exponents rescale by l).
  std::int64_t root = 1;
  double base = delta;
  while (base <= 2.0 / 3.0) {
    ++root;
    base = std::pow(delta, 1.0 / static_cast<double>(root));
  }

  IntegralityResult result;
  IntegralityCertificate cert;
  cert.delta = base;
  for (double c : constants_set(p)) {
    std::int64_t k = 0;
    if (!exponent_of(c, delta, &k)) {
      result.offending_constant = c;
      return result;
    }
    cert.exponents[c] = k * root;
  }
  result.certificate = std::move(cert);
  return result;
}

std::vector<PolyMatrix> lift_program(const GateProgram& p,
                                     const IntegralityCertificate& cert) {
  p.validate();
  std::vector<PolyMatrix> lifted;
  lifted.reserve(static_cast<size_t>(p.step_count()) + 1);
  PolyMatrix m = PolyMatrix::identity(p.n);
  lifted.push_back(m);
  for (const Gate& g : p.gates) {
    if (const auto* rot = std::get_if<RotationGate>(&g)) {
      m.apply_two_row_block(rot->i, rot->j, rotation_block(*rot));
    } else {
      const auto& cst = std::get<ConstantGate>(g);
      auto it = cert.exponents.find(cst.value);
      if (it == cert.exponents.end()) {
        throw std::invalid_argument(
            "lift_program: constant missing from the integrality certificate");
      }
      m.shift_row(cst.i, it->second);
    }
    lifted.push_back(m);
  }
  return lifted;
}

std::pair<GateProgram, IntegralityCertificate> round_to_integral_with_cert(
    const GateProgram& p, double delta_q) {
  if (!(delta_q > 2.0 / 3.0 && delta_q < 1.0)) {
    throw std::invalid_argument(
        "round_to_integral: delta_q must lie in (2/3, 1)");
  }
  GateProgram rounded;
  rounded.n = p.n;
  rounded.label = p.label;
  IntegralityCertificate cert;
  cert.delta = delta_q;
  const double log_delta = std::log(delta_q);
  for (const Gate& g : p.gates) {
    if (is_rotation(g)) {
      rounded.gates.push_back(g);
      continue;
    }
    const auto& cst = std::get<ConstantGate>(g);
    const double estimate = std::log(cst.value) / log_delta;
    double up = std::ceil(estimate);
    if (std::abs(estimate - std::round(estimate)) <= kCeilSnapTol) {
      up = std::round(estimate);
    }
    const std::int64_t k = static_cast<std::int64_t>(up);
    const double value = std::pow(delta_q, up);
    rounded.gates.push_back(ConstantGate{cst.i, value});
    cert.exponents[value] = k;
  }
  return {std::move(rounded), std::move(cert)};
}

GateProgram round_to_integral(const GateProgram& p, double delta_q) {
  return round_to_integral_with_cert(p, delta_q).first;
}

RoundingSchedule RoundingSchedule::standard(int q_max) {
  if (q_max < 1) throw std::invalid_argument("schedule length must be >= 1");
  RoundingSchedule s;
  s.deltas.reserve(static_cast<size_t>(q_max));
  double gap = 1.0 / 6.0;
  for (int q = 1; q <= q_max; ++q) {
    s.deltas.push_back(1.0 - gap);
    gap /= 3.0;
  }
  return s;
}

void RoundingSchedule::validate() const {
  double prev = 2.0 / 3.0;
  for (double d : deltas) {
    if (!(d > prev && d < 1.0)) {
      throw std::invalid_argument(
          "rounding schedule must increase strictly inside (2/3, 1)");
    }
    prev = d;
  }
}

ConvergenceReport convergence_report(const GateProgram& p,
                                     const RoundingSchedule& schedule) {
  schedule.validate();
  ConvergenceReport report;
  for (size_t qi = 0; qi < schedule.deltas.size(); ++qi) {
    const double delta_q = schedule.deltas[qi];
    const GateProgram rounded = round_to_integral(p, delta_q);
    double worst = 0.0;
    Eigen::MatrixXd original = Eigen::MatrixXd::Identity(p.n, p.n);
    Eigen::MatrixXd approx = Eigen::MatrixXd::Identity(p.n, p.n);
    for (int t = 0; t < p.step_count(); ++t) {
      apply_gate(p.gates[static_cast<size_t>(t)], original);
      apply_gate(rounded.gates[static_cast<size_t>(t)], approx);
      worst = std::max(worst, (original - approx).cwiseAbs().maxCoeff());
    }
    report.rows.push_back(
        ConvergenceRow{static_cast<int>(qi) + 1, delta_q, worst});
  }
  return report;
}

}  // namespace paracond
