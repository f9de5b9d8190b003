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

#include "paracond/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace paracond {

Eigen::Matrix2d rotation_block(const RotationGate& g) {
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  Eigen::Matrix2d block;
  if (g.reflect) {
    block << c, s, s, -c;
  } else {
    block << c, -s, s, c;
  }
  return block;
}

namespace {

void check_gate(const Gate& g, int n, int index) {
  if (const auto* rot = std::get_if<RotationGate>(&g)) {
    if (rot->i < 0 || rot->i >= n || rot->j < 0 || rot->j >= n) {
      throw std::invalid_argument("gate " + std::to_string(index) +
                                  ": rotation coordinate out of range");
    }
    if (rot->i == rot->j) {
      throw std::invalid_argument("gate " + std::to_string(index) +
                                  ": rotation requires two distinct coordinates");
    }
    if (!std::isfinite(rot->theta)) {
      throw std::invalid_argument("gate " + std::to_string(index) +
                                  ": non-finite rotation angle");
    }
  } else {
    const auto& cst = std::get<ConstantGate>(g);
    if (cst.i < 0 || cst.i >= n) {
      throw std::invalid_argument("gate " + std::to_string(index) +
                                  ": constant coordinate out of range");
    }
    if (!(cst.value > 0.0) || !std::isfinite(cst.value)) {
      throw std::invalid_argument("gate " + std::to_string(index) +
                                  ": constant must be strictly positive");
    }
  }
}

}  // namespace

void GateProgram::validate() const {
  if (n <= 0) throw std::invalid_argument("program dimension must be positive");
  for (int idx = 0; idx < step_count(); ++idx) {
    check_gate(gates[static_cast<size_t>(idx)], n, idx);
  }
}

Eigen::MatrixXd gate_matrix(const Gate& g, int n) {
  check_gate(g, n, 0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  apply_gate(g, m);
  return m;
}

void apply_gate(const Gate& g, Eigen::MatrixXd& m) {
  if (const auto* rot = std::get_if<RotationGate>(&g)) {
    const Eigen::Matrix2d block = rotation_block(*rot);
    const Eigen::RowVectorXd top = m.row(rot->i);
    const Eigen::RowVectorXd bottom = m.row(rot->j);
    m.row(rot->i) = block(0, 0) * top + block(0, 1) * bottom;
    m.row(rot->j) = block(1, 0) * top + block(1, 1) * bottom;
  } else {
    const auto& cst = std::get<ConstantGate>(g);
    m.row(cst.i) *= cst.value;
  }
}

void apply_gate(const Gate& g, MachineState& state) {
  if (const auto* rot = std::get_if<RotationGate>(&g)) {
    const Eigen::Matrix2d block = rotation_block(*rot);
    const double top = state(rot->i);
    const double bottom = state(rot->j);
    state(rot->i) = block(0, 0) * top + block(0, 1) * bottom;
    state(rot->j) = block(1, 0) * top + block(1, 1) * bottom;
  } else {
    const auto& cst = std::get<ConstantGate>(g);
    state(cst.i) *= cst.value;
  }
}

Eigen::MatrixXd prefix_matrix(const GateProgram& p, int t) {
  if (t < 0 || t > p.step_count()) {
    throw std::out_of_range("prefix_matrix: step index out of range");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(p.n, p.n);
  for (int s = 0; s < t; ++s) apply_gate(p.gates[static_cast<size_t>(s)], m);
  return m;
}

Eigen::MatrixXd final_matrix(const GateProgram& p) {
  return prefix_matrix(p, p.step_count());
}

MachineState run(const GateProgram& p, const MachineState& x) {
  if (x.size() != p.n) {
    throw std::invalid_argument("run: state dimension does not match program");
  }
  MachineState state = x;
  for (const Gate& g : p.gates) apply_gate(g, state);
  return state;
}

std::set<double> constants_set(const GateProgram& p) {
  std::set<double> values;
  for (const Gate& g : p.gates) {
    if (const auto* cst = std::get_if<ConstantGate>(&g)) {
      values.insert(cst->value);
    }
  }
  return values;
}

}  // namespace paracond
