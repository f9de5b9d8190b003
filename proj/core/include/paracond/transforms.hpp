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

namespace paracond {

enum class TransformKind {
  walsh_hadamard,
  /// Real embedding of the (n/2)-point normalized DFT: complex coordinate k
  /// occupies real coordinates (2k, 2k+1) as (real part, imaginary part),
  /// and each complex entry c + i*d embeds as the 2x2 block [c, -d; d, c].
  dft_real,
};

struct TransformSpec {
  TransformKind kind = TransformKind::walsh_hadamard;
  int n = 2;  // real dimension; must be an integer power of two
};

bool is_power_of_two(int n);

/// The target orthogonal matrix F of the spec'd transform.
/// Throws std::invalid_argument when n is not a power of two (or, for
/// dft_real, when n < 2).
Eigen::MatrixXd target_matrix(const TransformSpec& spec);

/// A rotation-only program whose final matrix equals target_matrix(spec).
///
/// Walsh-Hadamard uses the self-sorting in-place butterfly network:
/// (n/2)*log2(n) reflect-rotations with theta = pi/4 and no data movement,
/// so no permutation is ever needed.  The DFT network requires the
/// bit-reversal permutation, which the gate model can only realize as
/// explicit swap gates (reflect-rotations with theta = pi/2); those are
/// emitted regardless of explicit_permutation, which is accepted for
/// interface compatibility.
GateProgram target_program(const TransformSpec& spec,
                           bool explicit_permutation = false);

/// A delta-integral variant of target_program computing the same final
/// matrix exactly: balanced constant-gate pairs (delta^k then delta^-k on
/// the same coordinate) are interleaved with the rotation network, plus an
/// opening stagger that displaces two rows to opposite window edges so every
/// lifted prefix support stays inside [window_lo, window_hi] and the full
/// spread window_hi - window_lo is attained.
///
/// Requires delta in (2/3, 1) and window_lo <= 0 <= window_hi; throws
/// std::invalid_argument otherwise.
GateProgram scaled_variant(const TransformSpec& spec, double delta,
                           int window_lo, int window_hi);

/// The two-gate program multiplying coordinate 0 by delta and coordinate 1
/// by 1/delta; its algebraic and geometric condition numbers coincide.
GateProgram tightness_program(double delta);

}  // namespace paracond
