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

#include "paracond/condition.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "paracond/parallel.hpp"

namespace paracond {

namespace {

template <typename MatrixT>
double power_iteration_norm(const MatrixT& m, double rel_tol) {
  if (!m.allFinite()) {
    throw std::invalid_argument("spectral_norm: non-finite entries");
  }
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  using VectorT = Eigen::Matrix<typename MatrixT::Scalar, Eigen::Dynamic, 1>;
  // Gram iteration: v <- M^H M v.  A deterministic, mildly sloped start
  // vector avoids landing in an invariant subspace of structured inputs.
  VectorT v(m.cols());
  for (int i = 0; i < m.cols(); ++i) {
    v(i) = typename MatrixT::Scalar(1.0 + 1e-3 * static_cast<double>(i));
  }
  v.normalize();
  double lambda = 0.0;
  constexpr int kMaxIterations = 500;
  for (int it = 0; it < kMaxIterations; ++it) {
    VectorT w = m.adjoint() * (m * v);
    const double next = std::abs(std::real(std::complex<double>(v.dot(w))));
    const double norm_w = w.norm();
    if (norm_w == 0.0) return 0.0;
    v = w / norm_w;
    if (it > 0 && std::abs(next - lambda) <= rel_tol * std::max(next, 1e-300)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

template <typename MatrixT>
double svd_condition(const MatrixT& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("geometric_condition: non-finite entries");
  }
  Eigen::JacobiSVD<MatrixT> svd(m);
  const auto& sigma = svd.singularValues();
  const double smax = sigma(0);
  const double smin = sigma(sigma.size() - 1);
  if (!(smin > 0.0) || smax / smin > 1e15) {
    throw std::domain_error("geometric_condition: singular matrix");
  }
  return smax / smin;
}

}  // namespace

double spectral_norm(const Eigen::MatrixXd& m, double rel_tol) {
  return power_iteration_norm(m, rel_tol);
}

double spectral_norm(const Eigen::MatrixXcd& m, double rel_tol) {
  return power_iteration_norm(m, rel_tol);
}

double geometric_condition(const Eigen::MatrixXd& m) {
  return svd_condition(m);
}

double geometric_condition(const Eigen::MatrixXcd& m) {
  return svd_condition(m);
}

namespace {

double algebraic_of(const PolyMatrix& lifted, double delta) {
  const auto deg = lifted.degree();
  const auto val = lifted.valuation();
  // delta^(val - deg) with val <= deg and delta < 1, so the value is >= 1.
  return std::exp(static_cast<double>(val - deg) * std::log(delta));
}

}  // namespace

ConditionReport condition_report(const GateProgram& p,
                                 const std::vector<PolyMatrix>& lifted,
                                 double delta) {
  if (lifted.size() != static_cast<size_t>(p.step_count()) + 1) {
    throw std::invalid_argument(
        "condition_report: lifted sequence does not match program length");
  }
  ConditionReport report;
  report.delta = delta;
  int t = 0;
  for_each_prefix(p, [&](int step, const Eigen::MatrixXd& m) {
    ConditionStepRecord rec;
    rec.t = step;
    try {
      rec.geometric = geometric_condition(m);
    } catch (const std::domain_error&) {
      throw std::domain_error("condition_report: singular prefix at step " +
                              std::to_string(step));
    }
    const PolyMatrix& lm = lifted[static_cast<size_t>(step)];
    rec.deg = lm.degree();
    rec.val = lm.valuation();
    rec.algebraic = algebraic_of(lm, delta);
    report.steps.push_back(rec);
    ++t;
  });
  report.algorithm_geometric = 1.0;
  report.algorithm_algebraic = 1.0;
  for (const auto& rec : report.steps) {
    report.algorithm_geometric = std::max(report.algorithm_geometric, rec.geometric);
    report.algorithm_algebraic = std::max(report.algorithm_algebraic, rec.algebraic);
  }
  report.rho = std::log2(report.algorithm_algebraic) /
               (2.0 * std::log2(1.0 / delta));
  return report;
}

ConditionReport geometric_condition_report(const GateProgram& p) {
  ConditionReport report;
  for_each_prefix(p, [&](int step, const Eigen::MatrixXd& m) {
    ConditionStepRecord rec;
    rec.t = step;
    try {
      rec.geometric = geometric_condition(m);
    } catch (const std::domain_error&) {
      throw std::domain_error("condition_report: singular prefix at step " +
                              std::to_string(step));
    }
    report.steps.push_back(rec);
  });
  report.algorithm_geometric = 1.0;
  for (const auto& rec : report.steps) {
    report.algorithm_geometric = std::max(report.algorithm_geometric, rec.geometric);
  }
  return report;
}

GeneralAlgebraicResult general_algebraic_condition(
    const GateProgram& p, const RoundingSchedule& schedule) {
  schedule.validate();
  GeneralAlgebraicResult result;
  for (double delta_q : schedule.deltas) {
    auto [rounded, cert] = round_to_integral_with_cert(p, delta_q);
    const auto lifted = lift_program(rounded, cert);
    double kappa = 1.0;
    for (const PolyMatrix& m : lifted) {
      kappa = std::max(kappa, algebraic_of(m, delta_q));
    }
    result.kappa_q.push_back(kappa);
  }
  result.estimate = result.kappa_q.empty() ? 1.0 : result.kappa_q.back();
  if (result.kappa_q.size() >= 2) {
    const double prev = result.kappa_q[result.kappa_q.size() - 2];
    result.last_relative_step =
        std::abs(result.estimate - prev) / std::max(prev, 1e-300);
    result.converged = result.last_relative_step < 1e-6;
  }
  return result;
}

std::vector<Lemma1Row> lemma1_check(const GateProgram& p,
                                    const IntegralityCertificate& cert,
                                    double tol) {
  const auto lifted = lift_program(p, cert);
  const ConditionReport report = condition_report(p, lifted, cert.delta);
  std::vector<Lemma1Row> rows;
  rows.reserve(report.steps.size());
  for (const auto& rec : report.steps) {
    Lemma1Row row;
    row.t = rec.t;
    row.geometric = rec.geometric;
    row.algebraic = rec.algebraic;
    row.margin = rec.algebraic - rec.geometric;
    row.holds = row.margin >= -tol;
    row.equality = std::abs(row.margin) <= tol;
    rows.push_back(row);
  }
  return rows;
}

MaxModulusRow max_modulus_check(const PolyMatrix& m, double delta, int samples) {
  if (samples < 1) throw std::invalid_argument("max_modulus_check: samples < 1");
  MaxModulusRow row;
  const auto val = m.valuation();
  const auto deg = m.degree();
  const Eigen::MatrixXcd interior = m.evaluate({delta, 0.0});
  row.primal_interior =
      std::exp(-static_cast<double>(val) * std::log(delta)) * spectral_norm(interior);
  const Eigen::MatrixXcd dual_interior = m.adjoint().evaluate({delta, 0.0});
  row.dual_interior =
      std::exp(static_cast<double>(deg) * std::log(delta)) * spectral_norm(dual_interior);
  std::vector<double> norms(static_cast<size_t>(samples), 0.0);
  parallel_for(samples, [&](std::int64_t s) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(s) / samples;
    const Complex omega{std::cos(angle), std::sin(angle)};
    // ||M[omega]|| equals ||M*[omega]||: the adjoint evaluates to the
    // conjugate transpose on the unit circle.
    norms[static_cast<size_t>(s)] = spectral_norm(m.evaluate(omega));
  });
  double circle = 0.0;
  for (double value : norms) circle = std::max(circle, value);
  row.circle_max = circle;
  row.primal_slack = row.circle_max - row.primal_interior;
  row.dual_slack = row.circle_max - row.dual_interior;
  return row;
}

std::vector<MaxModulusRow> max_modulus_sweep(const std::vector<PolyMatrix>& lifted,
                                             double delta, int samples) {
  std::vector<MaxModulusRow> rows;
  rows.reserve(lifted.size());
  for (size_t t = 0; t < lifted.size(); ++t) {
    MaxModulusRow row = max_modulus_check(lifted[t], delta, samples);
    row.t = static_cast<int>(t);
    rows.push_back(row);
  }
  return rows;
}

LowerBoundCertificate lower_bound_certificate(int n, double kappa, int m_actual) {
  if (kappa < 1.0) {
    throw std::invalid_argument("lower_bound_certificate: kappa must be >= 1");
  }
  LowerBoundCertificate cert;
  cert.n = n;
  cert.kappa = kappa;
  cert.m_actual = m_actual;
  cert.bound_value = n * std::log2(static_cast<double>(n)) / std::sqrt(kappa);
  cert.ratio = cert.bound_value > 0.0 ? m_actual / cert.bound_value : 0.0;
  return cert;
}

}  // namespace paracond
