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

#include "paracond/potential.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace paracond {

Complex entropy_kernel(Complex u) {
  const double mag = std::abs(u);
  if (mag == 0.0) return {0.0, 0.0};
  return -u * std::log2(mag);
}

double quasi_entropy(const PolyMatrix& m) {
  double sum = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      for (const auto& [k, c] : m.at(i, j).coefficients()) {
        // |c|^2 is real, so the kernel value is real as well.
        sum += entropy_kernel({std::norm(c), 0.0}).real();
      }
    }
  }
  return sum;
}

PreconditionerPair build_preconditioners(const PolyMatrix& lifted_final,
                                         const Eigen::MatrixXd& f, double delta,
                                         double kappa) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("build_preconditioners: delta outside (0, 1)");
  }
  if (kappa < 1.0) {
    throw std::invalid_argument("build_preconditioners: kappa must be >= 1");
  }
  const Eigen::MatrixXcd evaluated = lifted_final.evaluate({delta, 0.0});
  const double mismatch =
      (evaluated - f.cast<Complex>()).cwiseAbs().maxCoeff();
  if (mismatch > 1e-9) {
    throw std::invalid_argument(
        "build_preconditioners: lifted final matrix does not evaluate to F");
  }

  PreconditionerPair pair;
  pair.delta = delta;
  pair.kappa = kappa;
  pair.mu = 1.0 - delta;
  // rho is real in the analysis; monomial exponents need an integer, and
  // rounding up only widens the window of A.
  const double rho_exact = std::log2(kappa) / (2.0 * std::log2(1.0 / delta));
  pair.rho = static_cast<int>(std::ceil(rho_exact - 1e-12));
  pair.ell = 1;
  while (std::pow(delta, pair.ell) > 0.5) ++pair.ell;

  const int n = lifted_final.rows();
  LaurentPoly series;
  for (int k = 0; k <= pair.rho + pair.ell; ++k) {
    series.add_coeff(-k, {std::pow(delta, k), 0.0});
  }
  pair.A = PolyMatrix::scalar_diagonal(n, series);

  LaurentPoly comb;
  for (int i = pair.rho; i <= pair.rho + pair.ell; ++i) {
    comb.add_coeff(-i, {1.0, 0.0});
  }
  pair.B = lifted_final.adjoint() *
           PolyMatrix::scalar_diagonal(n, comb) * PolyMatrix::from_real(f);
  return pair;
}

namespace {

Complex entropy_of_products(const PolyMatrix& ma, const PolyMatrix& mb) {
  Complex sum{0.0, 0.0};
  for (int i = 0; i < ma.rows(); ++i) {
    for (int j = 0; j < ma.cols(); ++j) {
      const auto& pa = ma.at(i, j).coefficients();
      const auto& pb = mb.at(i, j).coefficients();
      for (const auto& [k, ca] : pa) {
        auto it = pb.find(k);
        if (it == pb.end()) continue;
        sum += entropy_kernel(ca * std::conj(it->second));
      }
    }
  }
  return sum;
}

}  // namespace

Complex preconditioned_entropy(const PolyMatrix& m, const PreconditionerPair& pair) {
  if (m.cols() != pair.A.rows()) {
    throw std::invalid_argument("preconditioned_entropy: dimension mismatch");
  }
  return entropy_of_products(m * pair.A, m * pair.B);
}

CoefficientClaimReport coefficient_claim_check(const PolyMatrix& lifted_final,
                                               const Eigen::MatrixXd& f,
                                               const PreconditionerPair& pair,
                                               double tol) {
  CoefficientClaimReport report;
  report.support_deg = lifted_final.degree();
  report.support_val = lifted_final.valuation();
  const PolyMatrix product = lifted_final * pair.A;
  const int n = lifted_final.rows();
  report.all_covered = true;
  report.all_pass = true;
  for (int i = pair.range_lo(); i <= pair.range_hi(); ++i) {
    CoefficientClaimRow row;
    row.i = i;
    // coeff(M*A, -i) reproduces delta^i * F only when the geometric series
    // window [-i, rho+ell-i] captures the whole support of M.
    row.covered = report.support_val >= -static_cast<std::int64_t>(i) &&
                  report.support_deg <=
                      static_cast<std::int64_t>(pair.rho + pair.ell - i);
    const double scale = std::pow(pair.delta, i);
    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const Complex got = product.at(a, b).coeff(-i);
        worst = std::max(worst, std::abs(got - Complex{scale * f(a, b), 0.0}));
      }
    }
    row.max_abs_error = worst;
    row.pass = worst <= tol;
    report.all_covered = report.all_covered && row.covered;
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

PotentialTrace potential_trace(const GateProgram& p,
                               const std::vector<PolyMatrix>& lifted,
                               const PreconditionerPair& pair,
                               double change_constant) {
  if (lifted.size() != static_cast<size_t>(p.step_count()) + 1) {
    throw std::invalid_argument(
        "potential_trace: lifted sequence does not match program length");
  }
  PotentialTrace trace;
  trace.change_constant = change_constant;

  PolyMatrix prev_a = lifted[0] * pair.A;
  PolyMatrix prev_b = lifted[0] * pair.B;
  Complex prev_phi = entropy_of_products(prev_a, prev_b);
  trace.phi_identity = prev_phi;
  trace.max_abs_imag = std::abs(prev_phi.imag());

  for (int t = 1; t <= p.step_count(); ++t) {
    const Gate& gate = p.gates[static_cast<size_t>(t - 1)];
    PolyMatrix cur_a = lifted[static_cast<size_t>(t)] * pair.A;
    PolyMatrix cur_b = lifted[static_cast<size_t>(t)] * pair.B;
    const Complex phi = entropy_of_products(cur_a, cur_b);

    PotentialStep step;
    step.t = t;
    step.rotation = is_rotation(gate);
    step.phi = phi;
    step.dphi = (phi - prev_phi).real();
    step.row_a = prev_a.max_row_norm();
    step.row_b = prev_b.max_row_norm();
    if (step.rotation) {
      step.bound = change_constant * step.row_a * step.row_b;
      step.bound_ok = std::abs(step.dphi) <= step.bound;
      const auto& rot = std::get<RotationGate>(gate);
      double worst = 0.0;
      // A rotation preserves, for each column and coefficient, the summed
      // two-row inner product of the MA and MB coefficient pairs.
      for (int j = 0; j < cur_a.cols(); ++j) {
        std::map<std::int64_t, Complex> before, after;
        for (int row : {rot.i, rot.j}) {
          for (const auto& [k, ca] : prev_a.at(row, j).coefficients()) {
            const Complex cb = prev_b.at(row, j).coeff(k);
            if (cb != Complex{0.0, 0.0}) before[k] += ca * std::conj(cb);
          }
          for (const auto& [k, ca] : cur_a.at(row, j).coefficients()) {
            const Complex cb = cur_b.at(row, j).coeff(k);
            if (cb != Complex{0.0, 0.0}) after[k] += ca * std::conj(cb);
          }
        }
        for (const auto& [k, v] : before) {
          worst = std::max(worst, std::abs(v - after[k]));
        }
        for (const auto& [k, v] : after) {
          worst = std::max(worst, std::abs(before[k] - v));
        }
      }
      step.inner_product_residual = worst;
    } else {
      // Lemma-part-1 territory: a monomial row multiplication reindexes the
      // coefficient products without changing them.
      step.bound = 0.0;
      step.bound_ok = std::abs(step.dphi) <= 1e-9;
    }
    if (!step.bound_ok) ++trace.violations;
    trace.max_step_bound = std::max(trace.max_step_bound, step.bound);
    trace.max_abs_imag = std::max(trace.max_abs_imag, std::abs(phi.imag()));
    trace.steps.push_back(step);

    prev_a = std::move(cur_a);
    prev_b = std::move(cur_b);
    prev_phi = phi;
  }
  trace.phi_final = prev_phi;
  return trace;
}

EndpointGapReport endpoint_gap_report(const PotentialTrace& trace, int n,
                                      double kappa, int ell, int m) {
  EndpointGapReport report;
  report.phi_identity = trace.phi_identity.real();
  report.phi_final = trace.phi_final.real();
  report.gap = report.phi_final - report.phi_identity;
  report.reference_scale =
      ell * n * std::log2(static_cast<double>(n)) / std::sqrt(kappa);
  if (report.reference_scale > 0.0) {
    report.final_over_reference = report.phi_final / report.reference_scale;
    report.identity_over_reference = report.phi_identity / report.reference_scale;
  }
  report.max_step_bound = trace.max_step_bound;
  report.implied_steps =
      trace.max_step_bound > 0.0 ? report.gap / trace.max_step_bound : 0.0;
  report.m = m;
  report.consistent = report.implied_steps <= static_cast<double>(m);
  return report;
}

}  // namespace paracond
