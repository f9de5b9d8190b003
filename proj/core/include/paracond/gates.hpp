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
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace paracond {

/// A 2x2 orthogonal operator applied in place to machine-state coordinates
/// i and j (0-based).  Without reflect the block is the plane rotation
///   [cos t, -sin t; sin t, cos t]          (determinant +1);
/// with reflect it is
///   [cos t,  sin t; sin t, -cos t]         (determinant -1).
struct RotationGate {
  int i = 0;
  int j = 0;
  double theta = 0.0;
  bool reflect = false;
};

/// Multiplication of coordinate i by a strictly positive constant.
struct ConstantGate {
  int i = 0;
  double value = 1.0;
};

using Gate = std::variant<RotationGate, ConstantGate>;

inline bool is_rotation(const Gate& g) {
  return std::holds_alternative<RotationGate>(g);
}
inline bool is_constant(const Gate& g) {
  return std::holds_alternative<ConstantGate>(g);
}

Eigen::Matrix2d rotation_block(const RotationGate& g);

/// An in-place algorithm: an ordered gate sequence acting on n coordinates.
/// The empty program denotes the identity algorithm.
struct GateProgram {
  int n = 0;
  std::vector<Gate> gates;
  std::string label;

  int step_count() const { return static_cast<int>(gates.size()); }

  /// Throws std::invalid_argument naming the offending gate index when a
  /// coordinate is out of [0, n), a rotation has i == j, or a constant is
  /// not strictly positive and finite.
  void validate() const;
};

/// The machine state: a real vector of length n.
using MachineState = Eigen::VectorXd;

/// The n x n matrix of a single gate (identity outside the touched rows).
Eigen::MatrixXd gate_matrix(const Gate& g, int n);

/// Left-multiplies m by the gate matrix in place; touches at most two rows.
void apply_gate(const Gate& g, Eigen::MatrixXd& m);

/// Applies the gate to a machine state in place.
void apply_gate(const Gate& g, MachineState& state);

/// M^(t): the product of the first t gate matrices, M^(0) = Id.
/// Throws std::out_of_range unless 0 <= t <= step count.
Eigen::MatrixXd prefix_matrix(const GateProgram& p, int t);

Eigen::MatrixXd final_matrix(const GateProgram& p);

/// Calls visit(t, M^(t)) for t = 0..m without keeping old prefixes alive.
template <typename Visitor>
void for_each_prefix(const GateProgram& p, Visitor&& visit) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(p.n, p.n);
  visit(0, const_cast<const Eigen::MatrixXd&>(m));
  for (int t = 1; t <= p.step_count(); ++t) {
    apply_gate(p.gates[static_cast<size_t>(t - 1)], m);
    visit(t, const_cast<const Eigen::MatrixXd&>(m));
  }
}

/// Streaming evaluation of the whole program on an input state.
/// Throws std::invalid_argument on dimension mismatch.
MachineState run(const GateProgram& p, const MachineState& x);

/// The set of distinct values used by the constant gates.
std::set<double> constants_set(const GateProgram& p);

}  // namespace paracond
