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
#include <string>

#include "paracond/gates.hpp"
#include "paracond/poly_matrix.hpp"
#include "paracond/potential.hpp"

namespace paracond {

struct OracleResult {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double relative_gap = 0.0;  // |computed - reference| / max(|reference|, 1e-12)
};

OracleResult make_oracle_result(std::string name, double computed,
                                double reference);

struct RotationDeltaResult {
  double max_abs_dphi = 0.0;
  /// max |dphi| / (two-row norm product of MA, MB), the empirical Lemma-2
  /// constant against the two-row normalization.
  double implied_c = 0.0;
  double two_row_product = 0.0;
  int grid = 0;
};

/// Sweeps rotations on the given row pair over an equispaced theta grid
/// (plain and reflected), computing the exact potential change each time.
RotationDeltaResult rotation_delta_oracle(const PolyMatrix& m,
                                          const PreconditionerPair& pair,
                                          int row_i, int row_j, int grid);

struct RotationConstantCalibration {
  double empirical_two_row_c = 0.0;   // worst implied_c across the sweep
  double envelope_two_row_c = kTwoRowChangeEnvelope;
  /// The constant published for trace bounds against the max-row-norm
  /// product: twice the larger of empirical and analytic two-row constants
  /// (the factor 2 converts from the two-row normalization).
  double published_c = kDefaultRotationChangeConstant;
  int grid = 0;
  std::uint64_t seed = 0;
};

/// Runs rotation_delta_oracle over the identity configuration and a set of
/// random paraunitary matrices with standard preconditioners.
RotationConstantCalibration calibrate_rotation_constant(int grid = 256,
                                                        std::uint64_t seed = 0);

struct AppendixBResult {
  int rho = 0;
  int ell = 0;
  double delta = 0.0;
  double candidate_best = 0.0;  // best Lagrange candidate value
  int candidate_best_k = 0;
  double ascent_best = 0.0;     // best projected-gradient ascent value
  double supremum = 0.0;        // max of the two
  double linear_coefficient = 0.0;  // supremum / (delta^rho * ell)
  OracleResult agreement;       // ascent vs candidate
};

/// The constrained supremum of delta^rho * sum tau_k log2(tau_k) over the
/// ball sum tau_k^2 <= ell + 1 (tau >= 0, ell + 1 coordinates): evaluates
/// the two stationary families (one large coordinate with the rest at 1,
/// and K equal coordinates) for every K, and cross-checks with projected
/// gradient ascent from random starts.
AppendixBResult appendixB_supremum(int rho, int ell, double delta,
                                   int starts = 32, std::uint64_t seed = 0);

/// Compares coeff_norm(p)^2 against the circle average of |p|^2 over
/// equispaced samples.  Throws std::invalid_argument when samples
/// < 4 * (deg - val + 1).
OracleResult parseval_oracle(const LaurentPoly& p, int samples);

/// Max-entry deviation between the program's final matrix and a reference.
OracleResult matrix_equiv_oracle(const GateProgram& p,
                                 const Eigen::MatrixXd& reference);

}  // namespace paracond
