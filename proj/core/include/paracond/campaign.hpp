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

#include "paracond/gates.hpp"
#include "paracond/laurent.hpp"
#include "paracond/poly_matrix.hpp"
#include "paracond/rng.hpp"

namespace paracond {

struct CampaignParams {
  int n = 4;
  int m = 50;
  double delta = 0.75;
  int max_exponent = 3;  // constant gates carry delta^k with |k| <= this
};

/// A random delta-integral program of exactly m gates whose final matrix is
/// orthogonal: every constant gate delta^k is later balanced by delta^-k on
/// the same row, with no rotation touching that row in between, so the
/// program computes an orthogonal target like the algorithms under study.
/// Displacing several rows at once is allowed (and likely), which spreads
/// the lifted supports in both directions.
GateProgram random_balanced_program(const CampaignParams& params, Rng& rng);

/// A paraunitary matrix built from random plane rotations and random
/// monomial row shifts.
PolyMatrix random_paraunitary(int n, int steps, Rng& rng);

/// A random Laurent polynomial with the given support bounds; coefficients
/// are standard complex Gaussians.
LaurentPoly random_laurent(LaurentPoly::Exponent lo, LaurentPoly::Exponent hi,
                           Rng& rng);

/// Haar-ish random unitary via QR of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(int n, Rng& rng);

/// Random real orthogonal matrix via QR of a real Gaussian matrix.
Eigen::MatrixXd random_orthogonal(int n, Rng& rng);

}  // namespace paracond
