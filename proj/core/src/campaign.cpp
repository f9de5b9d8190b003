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

#include "paracond/campaign.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace paracond {

GateProgram random_balanced_program(const CampaignParams& params, Rng& rng) {
  if (params.n < 3 || params.m < 0 || params.max_exponent < 1) {
    throw std::invalid_argument("random_balanced_program: bad parameters");
  }
  GateProgram p;
  p.n = params.n;
  p.label = "campaign";

  // Rows currently displaced by an unbalanced constant, with the pending
  // exponent to cancel.  Rotations stay away from displaced rows so the
  // balancing gate restores the row exactly.
  std::map<int, std::int64_t> open;
  const int max_open = 2;

  auto emit_close = [&](int row) {
    p.gates.push_back(
        ConstantGate{row, std::pow(params.delta, static_cast<double>(-open[row]))});
    open.erase(row);
  };

  while (p.step_count() < params.m) {
    const int remaining = params.m - p.step_count();
    const int need = static_cast<int>(open.size());
    if (remaining <= need) {
      emit_close(open.begin()->first);
      continue;
    }
    std::vector<int> closed;
    for (int r = 0; r < params.n; ++r) {
      if (!open.contains(r)) closed.push_back(r);
    }
    const double draw = rng.uniform();
    if (draw < 0.55 && closed.size() >= 2) {
      const int a = static_cast<int>(rng.uniform_int(0, static_cast<int>(closed.size()) - 1));
      int b = static_cast<int>(rng.uniform_int(0, static_cast<int>(closed.size()) - 2));
      if (b >= a) ++b;
      p.gates.push_back(RotationGate{closed[static_cast<size_t>(a)],
                                     closed[static_cast<size_t>(b)],
                                     rng.uniform(0.0, 2.0 * std::numbers::pi),
                                     rng.bernoulli(0.5)});
    } else if (draw < 0.8 && static_cast<int>(open.size()) < max_open &&
               remaining >= need + 2 && !closed.empty()) {
      const int row = closed[static_cast<size_t>(
          rng.uniform_int(0, static_cast<int>(closed.size()) - 1))];
      std::int64_t k = rng.uniform_int(-params.max_exponent, params.max_exponent);
      if (k == 0) k = params.max_exponent;
      open[row] = k;
      p.gates.push_back(
          ConstantGate{row, std::pow(params.delta, static_cast<double>(k))});
    } else if (!open.empty()) {
      emit_close(open.begin()->first);
    } else if (closed.size() >= 2) {
      p.gates.push_back(RotationGate{closed[0], closed[1],
                                     rng.uniform(0.0, 2.0 * std::numbers::pi),
                                     rng.bernoulli(0.5)});
    }
  }
  return p;
}

PolyMatrix random_paraunitary(int n, int steps, Rng& rng) {
  PolyMatrix m = PolyMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    if (rng.bernoulli(0.3)) {
      m.shift_row(static_cast<int>(rng.uniform_int(0, n - 1)),
                  rng.uniform_int(-2, 2));
    } else {
      int i = static_cast<int>(rng.uniform_int(0, n - 1));
      int j = static_cast<int>(rng.uniform_int(0, n - 2));
      if (j >= i) ++j;
      const RotationGate gate{i, j, rng.uniform(0.0, 2.0 * std::numbers::pi),
                              rng.bernoulli(0.5)};
      m.apply_two_row_block(i, j, rotation_block(gate));
    }
  }
  return m;
}

LaurentPoly random_laurent(LaurentPoly::Exponent lo, LaurentPoly::Exponent hi,
                           Rng& rng) {
  if (lo > hi) throw std::invalid_argument("random_laurent: empty support");
  LaurentPoly p;
  for (auto k = lo; k <= hi; ++k) {
    p.add_coeff(k, {rng.normal(), rng.normal()});
  }
  return p;
}

Eigen::MatrixXcd random_unitary(int n, Rng& rng) {
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = Complex{rng.normal(), rng.normal()};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = rng.normal();
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
}

}  // namespace paracond
