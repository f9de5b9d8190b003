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
#include <numbers>
#include <vector>

#include "paracond/gates.hpp"
#include "paracond/poly_matrix.hpp"

namespace paracond {

/// h(u) = -u * log2|u|, extended by h(0) = 0.  The first factor is u itself
/// (not |u|): the sign and phase of u are carried through.
Complex entropy_kernel(Complex u);

/// Phi(M) = sum over entries and exponents of h(|coefficient|^2).
/// Coincides with the preconditioned potential at A = B = Id.
double quasi_entropy(const PolyMatrix& m);

/// Per-coefficient envelope for the rotation change bound, measured against
/// the two-row norm product: 4 * max_{0<=x<=1} (-x log2 x) = 4 / (e ln 2).
inline constexpr double kTwoRowChangeEnvelope =
    4.0 / (std::numbers::e * std::numbers::ln2);

/// Default constant for the rotation change bound measured against
/// ||MA||_{2,inf} * ||MB||_{2,inf}: the two-row envelope padded by the
/// Cauchy-Schwarz factor 2 that relates the two norms.
inline constexpr double kDefaultRotationChangeConstant =
    2.0 * kTwoRowChangeEnvelope;

/// The preconditioners of the potential argument:
///   A = Id * (1 + delta z^-1 + ... + delta^(rho+ell) z^-(rho+ell))
///   B = (lifted final)^adjoint * (sum_{i=rho..rho+ell} z^-i) * F
/// with rho = ceil(log2(kappa) / (2 log2(1/delta))) and ell the smallest
/// integer with delta^ell <= 1/2.  R = {rho, ..., rho+ell} is the aligned
/// coefficient range.
struct PreconditionerPair {
  PolyMatrix A;
  PolyMatrix B;
  double delta = 0.75;
  double kappa = 1.0;
  double mu = 0.25;  // 1 - delta
  int rho = 0;
  int ell = 1;

  int range_lo() const { return rho; }
  int range_hi() const { return rho + ell; }
};

/// Builds the pair for a program whose lifted final matrix evaluates to f at
/// delta.  Throws std::invalid_argument when kappa < 1 or the evaluation
/// differs from f by more than 1e-9 in max-entry norm.
PreconditionerPair build_preconditioners(const PolyMatrix& lifted_final,
                                         const Eigen::MatrixXd& f, double delta,
                                         double kappa);

/// Phi_{A,B}(M): the quasi-entropy of coefficientwise products of MA against
/// conjugated MB.  Real programs give a real value; the imaginary part is
/// returned for inspection.
Complex preconditioned_entropy(const PolyMatrix& m, const PreconditionerPair& pair);

struct CoefficientClaimRow {
  int i = 0;               // index in R
  double max_abs_error = 0.0;  // vs delta^i * F entrywise
  bool covered = false;    // support(lifted final) inside [-i, rho+ell-i]
  bool pass = false;
};

struct CoefficientClaimReport {
  std::vector<CoefficientClaimRow> rows;
  std::int64_t support_deg = 0;
  std::int64_t support_val = 0;
  bool all_covered = false;
  bool all_pass = false;
};

/// Checks coeff(lifted_final * A, -i) == delta^i * F for every i in R,
/// reporting per-i whether the convolution window covers the final support
/// (the identity is only implied where it does).
CoefficientClaimReport coefficient_claim_check(const PolyMatrix& lifted_final,
                                               const Eigen::MatrixXd& f,
                                               const PreconditionerPair& pair,
                                               double tol = 1e-9);

struct PotentialStep {
  int t = 0;
  bool rotation = false;
  Complex phi{0.0, 0.0};   // Phi_{A,B}(M^(t))
  double dphi = 0.0;       // re(phi(t) - phi(t-1))
  double bound = 0.0;      // C * rowA * rowB, rotation steps only
  double row_a = 0.0;      // ||M^(t-1) A||_{2,inf}
  double row_b = 0.0;      // ||M^(t-1) B||_{2,inf}
  bool bound_ok = true;
  /// Largest change of the rotated two-row coefficient inner products
  /// sum_{rows} coeff((MA)_ij, k) * conj(coeff((MB)_ij, k)); rotations
  /// preserve these exactly.
  double inner_product_residual = 0.0;
};

struct PotentialTrace {
  Complex phi_identity{0.0, 0.0};
  Complex phi_final{0.0, 0.0};
  double change_constant = kDefaultRotationChangeConstant;
  std::vector<PotentialStep> steps;  // t = 1..m
  double max_step_bound = 0.0;
  double max_abs_imag = 0.0;
  int violations = 0;  // bound failures (reported, not thrown)
};

/// Tracks Phi_{A,B} along the lifted sequence.  Monomial (constant-gate)
/// steps must leave the potential unchanged; rotation steps are checked
/// against change_constant * rowA * rowB.
PotentialTrace potential_trace(const GateProgram& p,
                               const std::vector<PolyMatrix>& lifted,
                               const PreconditionerPair& pair,
                               double change_constant = kDefaultRotationChangeConstant);

struct EndpointGapReport {
  double phi_identity = 0.0;
  double phi_final = 0.0;
  double gap = 0.0;
  double reference_scale = 0.0;  // ell * n * log2(n) / sqrt(kappa)
  double final_over_reference = 0.0;
  double identity_over_reference = 0.0;
  double max_step_bound = 0.0;
  double implied_steps = 0.0;  // gap / max step bound
  int m = 0;
  bool consistent = false;  // implied_steps <= m
};

/// The counting argument as a consistency certificate: the potential climbs
/// from Phi(Id) to Phi(final) in steps no larger than the per-step bound, so
/// gap / bound must not exceed the actual gate count.
EndpointGapReport endpoint_gap_report(const PotentialTrace& trace, int n,
                                      double kappa, int ell, int m);

}  // namespace paracond
