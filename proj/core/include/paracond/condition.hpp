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
#include <cstdint>
#include <vector>

#include "paracond/gates.hpp"
#include "paracond/lifting.hpp"
#include "paracond/poly_matrix.hpp"

namespace paracond {

/// Largest singular value, computed by power iteration on M^H M to the
/// requested relative tolerance.  Throws std::invalid_argument on non-finite
/// entries.
double spectral_norm(const Eigen::MatrixXd& m, double rel_tol = 1e-10);
double spectral_norm(const Eigen::MatrixXcd& m, double rel_tol = 1e-10);

/// ||M|| * ||M^-1|| in the spectral norm, via the singular value ratio.
/// Throws std::domain_error for (numerically) singular input.
double geometric_condition(const Eigen::MatrixXd& m);
double geometric_condition(const Eigen::MatrixXcd& m);

struct ConditionStepRecord {
  int t = 0;
  double geometric = 1.0;
  std::int64_t deg = 0;
  std::int64_t val = 0;
  double algebraic = 1.0;  // delta^(val - deg) of the lifted prefix
};

struct ConditionReport {
  double delta = 0.0;
  std::vector<ConditionStepRecord> steps;  // t = 0..m
  double algorithm_geometric = 1.0;        // max over t
  double algorithm_algebraic = 1.0;        // max over t
  /// rho = log2(kappa) / (2 log2(1/delta)) for kappa the algorithm
  /// algebraic condition; real-valued here, rounded up where a monomial
  /// window is built from it.
  double rho = 0.0;
};

/// Per-step geometric and algebraic condition numbers of a lifted program.
/// The lifted sequence must come from lift_program on the same program with
/// base delta.  Throws std::domain_error naming the step if some prefix is
/// singular (cannot happen for valid gate programs).
ConditionReport condition_report(const GateProgram& p,
                                 const std::vector<PolyMatrix>& lifted,
                                 double delta);

/// Geometric part only, for programs with no integrality certificate.
ConditionReport geometric_condition_report(const GateProgram& p);

struct GeneralAlgebraicResult {
  std::vector<double> kappa_q;
  double estimate = 1.0;          // last kappa_q
  double last_relative_step = 0.0;
  bool converged = false;         // last relative step below 1e-6
};

/// kappa_q = algebraic condition of round_to_integral(p, delta_q) lifted at
/// delta_q, for every base of the schedule.
GeneralAlgebraicResult general_algebraic_condition(
    const GateProgram& p, const RoundingSchedule& schedule);

struct Lemma1Row {
  int t = 0;
  double geometric = 1.0;
  double algebraic = 1.0;
  double margin = 0.0;  // algebraic - geometric
  bool holds = true;    // margin >= -tol
  bool equality = false;
};

/// Checks geometric <= algebraic condition at every step of a
/// delta-integral program.
std::vector<Lemma1Row> lemma1_check(const GateProgram& p,
                                    const IntegralityCertificate& cert,
                                    double tol = 1e-9);

struct MaxModulusRow {
  int t = 0;
  double primal_interior = 0.0;  // ||(z^-val M)[delta]||
  double dual_interior = 0.0;    // ||(z^deg M*)[delta]||
  double circle_max = 0.0;       // max over samples of ||M[omega]||
  double primal_slack = 0.0;     // circle_max - primal_interior
  double dual_slack = 0.0;
};

/// Samples the unit circle and checks that the interior evaluations of the
/// two proper-polynomial rescalings stay below the circle maximum.
MaxModulusRow max_modulus_check(const PolyMatrix& m, double delta, int samples);

std::vector<MaxModulusRow> max_modulus_sweep(const std::vector<PolyMatrix>& lifted,
                                             double delta, int samples);

struct LowerBoundCertificate {
  int n = 0;
  double kappa = 1.0;
  int m_actual = 0;
  double bound_value = 0.0;  // n * log2(n) / sqrt(kappa)
  double ratio = 0.0;        // m_actual / bound_value
};

/// Consistency certificate for the step-count bound: reports the ratio of
/// the actual gate count to n*log2(n)/sqrt(kappa) (an asymptotic statement
/// hides a constant, so this is not a pass/fail check).
LowerBoundCertificate lower_bound_certificate(int n, double kappa, int m_actual);

}  // namespace paracond
