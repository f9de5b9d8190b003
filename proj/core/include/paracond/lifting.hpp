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

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "paracond/gates.hpp"
#include "paracond/poly_matrix.hpp"

namespace paracond {

/// Witness that every constant-gate value of a program is an integral power
/// of the base delta: value -> log_delta(value) for each distinct value.
struct IntegralityCertificate {
  double delta = 0.75;
  std::map<double, std::int64_t> exponents;
};

struct IntegralityResult {
  std::optional<IntegralityCertificate> certificate;
  /// First constant that is no integral power of the base, when detection
  /// fails.
  std::optional<double> offending_constant;

  bool ok() const { return certificate.has_value(); }
};

/// Detects delta-integrality.  A constant c is accepted as delta^k when the
/// exponent estimate ln(c)/ln(delta) sits within 1e-9 of the integer k, or
/// when delta^k reproduces c to 1e-12 relative (the value test keeps
/// detection stable for bases extremely close to 1).
///
/// When delta <= 2/3 the base is first replaced by delta^(1/l) for the
/// smallest integer l that lands it in (2/3, 1); the certificate reports the
/// substituted base with rescaled exponents.  Throws std::invalid_argument
/// for delta outside (0, 1).
IntegralityResult check_integral(const GateProgram& p, double delta);

/// The lifted prefix sequence M_delta^(0) .. M_delta^(m): rotations act as
/// on the real prefixes, and a constant gate with value c multiplies its row
/// by the monomial z^{log_delta(c)}.  Throws std::invalid_argument when the
/// program uses a constant missing from the certificate.
std::vector<PolyMatrix> lift_program(const GateProgram& p,
                                     const IntegralityCertificate& cert);

/// Rounds every constant c to delta_q^(ceil(log_delta_q(c))); rotations are
/// preserved.  Exact powers are fixed points: a logarithm within 1e-12 of an
/// integer does not get bumped to the next one.  Requires delta_q in
/// (2/3, 1).
GateProgram round_to_integral(const GateProgram& p, double delta_q);

/// round_to_integral together with the certificate of the rounded program,
/// built from the rounding exponents themselves.
std::pair<GateProgram, IntegralityCertificate> round_to_integral_with_cert(
    const GateProgram& p, double delta_q);

/// An increasing sequence of bases in (2/3, 1) tending to 1.
struct RoundingSchedule {
  std::vector<double> deltas;

  /// delta_q = 1 - (1/6) * 3^-(q-1) for q = 1..q_max: starts at 5/6 and
  /// contracts the gap to 1 by a factor 3 per step.
  static RoundingSchedule standard(int q_max = 16);

  void validate() const;  // strictly increasing, all in (2/3, 1)
};

struct ConvergenceRow {
  int q = 0;
  double delta_q = 0.0;
  /// max over t of the max-entry deviation between the rounded program's
  /// prefix and the original prefix.
  double max_deviation = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double final_deviation() const {
    return rows.empty() ? 0.0 : rows.back().max_deviation;
  }
};

ConvergenceReport convergence_report(const GateProgram& p,
                                     const RoundingSchedule& schedule);

}  // namespace paracond
