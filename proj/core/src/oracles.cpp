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

#include "paracond/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "paracond/rng.hpp"

namespace paracond {

OracleResult make_oracle_result(std::string name, double computed,
                                double reference) {
  OracleResult r;
  r.name = std::move(name);
  r.computed = computed;
  r.reference = reference;
  r.relative_gap =
      std::abs(computed - reference) / std::max(std::abs(reference), 1e-12);
  return r;
}

RotationDeltaResult rotation_delta_oracle(const PolyMatrix& m,
                                          const PreconditionerPair& pair,
                                          int row_i, int row_j, int grid) {
  if (grid < 8) throw std::invalid_argument("rotation_delta_oracle: grid < 8");
  RotationDeltaResult result;
  result.grid = grid;

  const PolyMatrix ma = m * pair.A;
  const PolyMatrix mb = m * pair.B;
  const double two_row_a = std::sqrt(ma.row_norm(row_i) * ma.row_norm(row_i) +
                                     ma.row_norm(row_j) * ma.row_norm(row_j));
  const double two_row_b = std::sqrt(mb.row_norm(row_i) * mb.row_norm(row_i) +
                                     mb.row_norm(row_j) * mb.row_norm(row_j));
  result.two_row_product = two_row_a * two_row_b;

  const double phi_base = preconditioned_entropy(m, pair).real();
  for (int reflected = 0; reflected < 2; ++reflected) {
    for (int g = 0; g < grid; ++g) {
      const double theta = 2.0 * std::numbers::pi * g / grid;
      PolyMatrix rotated = m;
      rotated.apply_two_row_block(
          row_i, row_j,
          rotation_block(RotationGate{row_i, row_j, theta, reflected == 1}));
      const double phi = preconditioned_entropy(rotated, pair).real();
      result.max_abs_dphi = std::max(result.max_abs_dphi, std::abs(phi - phi_base));
    }
  }
  if (result.two_row_product > 0.0) {
    result.implied_c = result.max_abs_dphi / result.two_row_product;
  }
  return result;
}

namespace {

PolyMatrix random_paraunitary_matrix(int n, int steps, Rng& rng) {
  PolyMatrix m = PolyMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    if (rng.bernoulli(0.25)) {
      const int row = static_cast<int>(rng.uniform_int(0, n - 1));
      m.shift_row(row, rng.uniform_int(-2, 2));
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

}  // namespace

RotationConstantCalibration calibrate_rotation_constant(int grid,
                                                        std::uint64_t seed) {
  RotationConstantCalibration cal;
  cal.grid = grid;
  cal.seed = seed;
  Rng rng(seed);

  const int n = 4;
  // Bare configuration: no preconditioning at all.
  PreconditionerPair plain;
  plain.A = PolyMatrix::identity(n);
  plain.B = PolyMatrix::identity(n);
  plain.delta = 0.75;
  plain.kappa = 1.0;
  plain.rho = 0;
  plain.ell = 1;
  cal.empirical_two_row_c =
      rotation_delta_oracle(PolyMatrix::identity(n), plain, 0, 1, grid).implied_c;

  // Paraunitary matrices against the standard preconditioner shape.
  for (int rep = 0; rep < 6; ++rep) {
    const PolyMatrix u = random_paraunitary_matrix(n, 12, rng);
    const double delta = 0.75;
    const Eigen::MatrixXd f = u.evaluate({delta, 0.0}).real();
    const double kappa = std::exp(static_cast<double>(u.valuation() - u.degree()) *
                                  std::log(delta));
    const PreconditionerPair pair =
        build_preconditioners(u, f, delta, std::max(1.0, kappa));
    for (const auto& row_pair : {std::pair{0, 1}, std::pair{1, 3}}) {
      const auto sweep = rotation_delta_oracle(u, pair, row_pair.first,
                                               row_pair.second, grid);
      cal.empirical_two_row_c = std::max(cal.empirical_two_row_c, sweep.implied_c);
    }
  }
  cal.published_c =
      2.0 * std::max(cal.empirical_two_row_c, cal.envelope_two_row_c);
  return cal;
}

AppendixBResult appendixB_supremum(int rho, int ell, double delta, int starts,
                                   std::uint64_t seed) {
  if (ell < 1 || rho < 0 || !(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("appendixB_supremum: bad parameters");
  }
  AppendixBResult result;
  result.rho = rho;
  result.ell = ell;
  result.delta = delta;

  const double weight = std::pow(delta, rho);
  const int dim = ell + 1;
  const double radius = std::sqrt(static_cast<double>(dim));
  const auto value_of = [&](double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
  };

  // Stationary families of the constrained maximization: one coordinate at
  // sqrt(ell - K + 2) with K - 1 coordinates pinned at 1, and K equal
  // coordinates at sqrt((ell+1)/K).
  for (int k = 1; k <= dim; ++k) {
    const double spike = weight * value_of(std::sqrt(static_cast<double>(ell - k + 2)));
    const double flat =
        weight * k * value_of(std::sqrt(static_cast<double>(dim) / k));
    for (double candidate : {spike, flat}) {
      if (candidate > result.candidate_best) {
        result.candidate_best = candidate;
        result.candidate_best_k = k;
      }
    }
  }

  // Projected gradient ascent on f(tau) = weight * sum tau log2 tau over the
  // ball; starts are stratified over support size so every stationary family
  // is reachable.
  Rng rng(seed);
  const double step = 1e-2;
  const int iterations = 10000;
  for (int s = 0; s < starts; ++s) {
    const int active = 1 + static_cast<int>(rng.uniform_int(0, dim - 1));
    std::vector<double> tau(static_cast<size_t>(dim), 0.0);
    std::vector<int> order(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) order[static_cast<size_t>(i)] = i;
    for (int i = dim - 1; i > 0; --i) {
      std::swap(order[static_cast<size_t>(i)],
                order[static_cast<size_t>(rng.uniform_int(0, i))]);
    }
    const double scale = std::sqrt(static_cast<double>(dim) / active);
    for (int a = 0; a < active; ++a) {
      tau[static_cast<size_t>(order[static_cast<size_t>(a)])] =
          rng.uniform(0.5, 1.5) * scale;
    }
    for (int it = 0; it < iterations; ++it) {
      double norm_sq = 0.0;
      for (int i = 0; i < dim; ++i) {
        double& x = tau[static_cast<size_t>(i)];
        if (x > 0.0) {
          x += step * weight * (std::log2(x) + 1.0 / std::numbers::ln2);
          if (x < 0.0) x = 0.0;
        }
        norm_sq += x * x;
      }
      if (norm_sq > static_cast<double>(dim)) {
        const double shrink = radius / std::sqrt(norm_sq);
        for (double& x : tau) x *= shrink;
      }
    }
    double value = 0.0;
    for (double x : tau) value += value_of(x);
    result.ascent_best = std::max(result.ascent_best, weight * value);
  }

  result.supremum = std::max(result.candidate_best, result.ascent_best);
  result.linear_coefficient = result.supremum / (weight * ell);
  result.agreement = make_oracle_result("appendixB ascent vs candidates",
                                        result.ascent_best, result.candidate_best);
  return result;
}

OracleResult parseval_oracle(const LaurentPoly& p, int samples) {
  std::int64_t width = 1;
  if (!p.is_zero()) width = p.degree() - p.valuation() + 1;
  if (samples < 4 * width) {
    throw std::invalid_argument("parseval_oracle: undersampled circle average");
  }
  double average = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double angle = 2.0 * std::numbers::pi * s / samples;
    average += std::norm(p.evaluate({std::cos(angle), std::sin(angle)}));
  }
  average /= samples;
  const double norm = p.coeff_norm();
  return make_oracle_result("parseval", average, norm * norm);
}

OracleResult matrix_equiv_oracle(const GateProgram& p,
                                 const Eigen::MatrixXd& reference) {
  if (reference.rows() != p.n || reference.cols() != p.n) {
    throw std::invalid_argument("matrix_equiv_oracle: dimension mismatch");
  }
  const double deviation =
      (final_matrix(p) - reference).cwiseAbs().maxCoeff();
  OracleResult r;
  r.name = "matrix_equiv";
  r.computed = deviation;
  r.reference = 0.0;
  r.relative_gap = deviation / 1e-12;
  return r;
}

}  // namespace paracond
