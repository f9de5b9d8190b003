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

#include "paracond/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "paracond/campaign.hpp"
#include "paracond/condition.hpp"
#include "paracond/lifting.hpp"
#include "paracond/oracles.hpp"
#include "paracond/potential.hpp"
#include "paracond/transforms.hpp"

namespace paracond {

namespace {

CheckResult check_leq(std::string name, double observed, double threshold,
                      std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.observed = observed;
  c.threshold = threshold;
  c.pass = observed <= threshold;
  c.detail = std::move(detail);
  return c;
}

CheckResult check_geq(std::string name, double observed, double threshold,
                      std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.observed = observed;
  c.threshold = threshold;
  c.pass = observed >= threshold;
  c.detail = std::move(detail);
  return c;
}

struct CampaignAnalysis {
  GateProgram program;
  IntegralityCertificate cert;
  std::vector<PolyMatrix> lifted;
  Eigen::MatrixXd final;  // orthogonal by construction
  double kappa = 1.0;
};

CampaignAnalysis analyze(const GateProgram& program, const VerifyOptions& options) {
  CampaignAnalysis a;
  a.program = program;
  const auto integrality = check_integral(program, options.delta);
  if (!integrality.ok()) {
    throw std::logic_error("campaign program failed integrality detection");
  }
  a.cert = *integrality.certificate;
  a.lifted = lift_program(program, a.cert);
  a.final = final_matrix(program);
  for (const PolyMatrix& m : a.lifted) {
    const double alg = std::exp(
        static_cast<double>(m.valuation() - m.degree()) * std::log(options.delta));
    a.kappa = std::max(a.kappa, alg);
  }
  if (options.kappa.has_value()) a.kappa = *options.kappa;
  return a;
}

SuiteResult suite_paraunitary(const VerifyOptions& options) {
  SuiteResult result{"paraunitary", {}};
  double worst_residual = 0.0;
  double worst_unitarity = 0.0;
  double worst_evaluation = 0.0;
  const auto campaign = make_campaign(options);
  for (size_t pi = 0; pi < campaign.size(); ++pi) {
    const auto a = analyze(campaign[pi], options);
    Rng omega_rng(options.seed ^ (0x9e3779b97f4a7c15ULL + pi));
    std::vector<Complex> omegas;
    for (int w = 0; w < 16; ++w) {
      const double angle = omega_rng.uniform(0.0, 2.0 * std::numbers::pi);
      omegas.push_back({std::cos(angle), std::sin(angle)});
    }
    for_each_prefix(a.program, [&](int step, const Eigen::MatrixXd& real_prefix) {
      const PolyMatrix& lifted = a.lifted[static_cast<size_t>(step)];
      worst_residual = std::max(worst_residual, lifted.paraunitary_residual());
      const Eigen::MatrixXcd at_delta = lifted.evaluate({options.delta, 0.0});
      worst_evaluation = std::max(
          worst_evaluation,
          (at_delta - real_prefix.cast<Complex>()).cwiseAbs().maxCoeff());
      for (const Complex& omega : omegas) {
        const Eigen::MatrixXcd e = lifted.evaluate(omega);
        const Eigen::MatrixXcd gram =
            e * e.adjoint() - Eigen::MatrixXcd::Identity(e.rows(), e.cols());
        worst_unitarity = std::max(worst_unitarity, gram.cwiseAbs().maxCoeff());
      }
    });
  }
  const std::string programs = std::to_string(campaign.size()) + " programs";
  result.checks.push_back(check_leq("lifted prefixes paraunitary",
                                    worst_residual, 1e-9, programs));
  result.checks.push_back(check_leq("unit-circle evaluations unitary",
                                    worst_unitarity, 1e-9, "16 points each"));
  result.checks.push_back(check_leq("evaluation identity at delta",
                                    worst_evaluation, 1e-9, programs));
  return result;
}

SuiteResult suite_lemma1(const VerifyOptions& options) {
  SuiteResult result{"lemma1", {}};
  double min_margin = std::numeric_limits<double>::infinity();
  int passed = 0;
  const auto campaign = make_campaign(options);
  for (const auto& program : campaign) {
    const auto a = analyze(program, options);
    bool all = true;
    for (const auto& row : lemma1_check(program, a.cert)) {
      min_margin = std::min(min_margin, row.margin);
      all = all && row.holds;
    }
    if (all) ++passed;
  }
  result.checks.push_back(check_geq(
      "geometric <= algebraic at every step", min_margin, -1e-9,
      std::to_string(passed) + "/" + std::to_string(campaign.size()) +
          " programs"));

  const GateProgram tight = tightness_program(0.75);
  const auto cert = check_integral(tight, 0.75).certificate.value();
  const auto rows = lemma1_check(tight, cert);
  const double expected = 16.0 / 9.0;
  const auto& last = rows.back();
  const double tightness_error = std::max(std::abs(last.geometric - expected),
                                          std::abs(last.algebraic - expected));
  result.checks.push_back(check_leq("tightness example attains 16/9 exactly",
                                    tightness_error, 1e-12));
  return result;
}

SuiteResult suite_lemma2(const VerifyOptions& options) {
  SuiteResult result{"lemma2", {}};
  const auto calibration =
      calibrate_rotation_constant(options.grid, options.seed);
  double worst_monomial = 0.0;
  double worst_rotation_excess = -std::numeric_limits<double>::infinity();
  double worst_inner = 0.0;
  int violations = 0;
  const auto campaign = make_campaign(options);
  for (const auto& program : campaign) {
    const auto a = analyze(program, options);
    const auto pair = build_preconditioners(a.lifted.back(), a.final,
                                            options.delta, a.kappa);
    const auto trace =
        potential_trace(program, a.lifted, pair, calibration.published_c);
    violations += trace.violations;
    for (const auto& step : trace.steps) {
      if (step.rotation) {
        worst_rotation_excess =
            std::max(worst_rotation_excess, std::abs(step.dphi) - step.bound);
        worst_inner = std::max(worst_inner, step.inner_product_residual);
      } else {
        worst_monomial = std::max(worst_monomial, std::abs(step.dphi));
      }
    }
  }
  result.checks.push_back(check_leq("monomial steps leave the potential fixed",
                                    worst_monomial, 1e-9));
  result.checks.push_back(check_leq(
      "rotation steps within C * rowA * rowB", worst_rotation_excess, 0.0,
      "C = " + std::to_string(calibration.published_c)));
  result.checks.push_back(check_leq("bound violations", violations, 0.0));
  result.checks.push_back(check_leq("rotations preserve two-row inner products",
                                    worst_inner, 1e-9));
  return result;
}

SuiteResult suite_claim3(const VerifyOptions& options) {
  SuiteResult result{"claim3", {}};
  for (int n : {4, 8, 16}) {
    const TransformSpec spec{TransformKind::walsh_hadamard, n};
    const GateProgram program = scaled_variant(spec, options.delta, -1, 1);
    const auto a = analyze(program, options);
    const auto pair =
        build_preconditioners(a.lifted.back(), a.final, options.delta, a.kappa);
    const auto report =
        coefficient_claim_check(a.lifted.back(), a.final, pair, 1e-9);
    double worst = 0.0;
    for (const auto& row : report.rows) worst = std::max(worst, row.max_abs_error);
    result.checks.push_back(check_leq(
        "coeff(MA, -i) = delta^i F on scaled WH n=" + std::to_string(n), worst,
        1e-9,
        report.all_covered ? "window fully covered" : "window NOT covered"));
    if (!report.all_covered) result.checks.back().pass = false;
  }
  return result;
}

SuiteResult suite_claim4(const VerifyOptions& options) {
  SuiteResult result{"claim4", {}};
  double worst_a = 0.0;
  double worst_b = 0.0;
  const auto campaign = make_campaign(options);
  for (const auto& program : campaign) {
    const auto a = analyze(program, options);
    const auto pair = build_preconditioners(a.lifted.back(), a.final,
                                            options.delta, a.kappa);
    double series = 0.0;
    for (int k = 0; k <= pair.rho + pair.ell; ++k) {
      series += std::pow(options.delta, 2 * k);
    }
    const double expect_a = std::sqrt(series);
    const double expect_b = std::sqrt(static_cast<double>(pair.ell + 1));
    for (const PolyMatrix& m : a.lifted) {
      worst_a = std::max(worst_a,
                         std::abs((m * pair.A).max_row_norm() - expect_a));
      worst_b = std::max(worst_b,
                         std::abs((m * pair.B).max_row_norm() - expect_b));
    }
  }
  result.checks.push_back(check_leq("||MA|| matches the geometric series",
                                    worst_a, 1e-9));
  result.checks.push_back(check_leq("||MB|| equals sqrt(ell + 1)", worst_b, 1e-9));

  // Factorized family: every row of U p X has norm ||p||.
  Rng rng(options.seed + 17);
  double worst_row = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 3 + static_cast<int>(rng.uniform_int(0, 2));
    const PolyMatrix u = random_paraunitary(n, 10, rng);
    const LaurentPoly p = random_laurent(-3, 3, rng);
    const PolyMatrix x = PolyMatrix::from_complex(random_unitary(n, rng));
    const PolyMatrix y = u * PolyMatrix::scalar_diagonal(n, p) * x;
    const double expected = p.coeff_norm();
    for (int i = 0; i < n; ++i) {
      worst_row = std::max(worst_row, std::abs(y.row_norm(i) - expected));
    }
  }
  result.checks.push_back(check_leq("rows of U p X all have norm ||p||",
                                    worst_row, 1e-9, "50 random triples"));
  return result;
}

SuiteResult suite_maxmod(const VerifyOptions& options) {
  SuiteResult result{"maxmod", {}};
  double min_slack = std::numeric_limits<double>::infinity();
  double worst_circle = 0.0;
  const auto campaign = make_campaign(options);
  for (const auto& program : campaign) {
    const auto a = analyze(program, options);
    for (const auto& row :
         max_modulus_sweep(a.lifted, options.delta, options.samples)) {
      min_slack = std::min({min_slack, row.primal_slack, row.dual_slack});
      worst_circle = std::max(worst_circle, std::abs(row.circle_max - 1.0));
    }
  }
  result.checks.push_back(check_geq(
      "interior norms below the circle maximum", min_slack, -1e-8,
      std::to_string(options.samples) + " circle samples"));
  result.checks.push_back(check_leq(
      "circle maximum is 1 for paraunitary prefixes", worst_circle, 1e-9));
  return result;
}

SuiteResult suite_appendixA(const VerifyOptions&) {
  SuiteResult result{"appendixA", {}};
  const auto schedule = RoundingSchedule::standard();

  GateProgram pi_program;
  pi_program.n = 2;
  pi_program.label = "one_constant_over_pi";
  pi_program.gates.push_back(ConstantGate{0, 1.0 / std::numbers::pi});

  const auto report = convergence_report(pi_program, schedule);
  double dev12 = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (size_t i = 0; i < report.rows.size(); ++i) {
    if (report.rows[i].q == 12) dev12 = report.rows[i].max_deviation;
    if (report.rows[i].q > 6) {
      monotone = monotone &&
                 report.rows[i].max_deviation <= report.rows[i - 1].max_deviation;
    }
  }
  result.checks.push_back(
      check_leq("deviation at q=12 for c=1/pi", dev12, 1e-3));
  result.checks.push_back(check_geq("deviation non-increasing from q=6",
                                    monotone ? 1.0 : 0.0, 1.0));

  const auto general = general_algebraic_condition(pi_program, schedule);
  result.checks.push_back(check_leq("kappa_q relative step at last q",
                                    general.last_relative_step, 1e-3,
                                    "estimate = " + std::to_string(general.estimate)));

  const GateProgram wh = target_program({TransformKind::walsh_hadamard, 8});
  const auto rotation_only = convergence_report(wh, schedule);
  double worst = 0.0;
  for (const auto& row : rotation_only.rows) {
    worst = std::max(worst, row.max_deviation);
  }
  result.checks.push_back(
      check_leq("rotation-only programs never deviate", worst, 0.0));

  const GateProgram tight = tightness_program(0.75);
  const GateProgram exact = round_to_integral(tight, 0.75);
  double fixpoint = 0.0;
  for (size_t g = 0; g < exact.gates.size(); ++g) {
    const auto& original = std::get<ConstantGate>(tight.gates[g]);
    const auto& rounded = std::get<ConstantGate>(exact.gates[g]);
    fixpoint = std::max(fixpoint, std::abs(original.value - rounded.value));
  }
  result.checks.push_back(
      check_leq("exact powers are rounding fixed points", fixpoint, 0.0));
  return result;
}

SuiteResult suite_appendixB(const VerifyOptions& options) {
  SuiteResult result{"appendixB", {}};
  struct Config {
    int rho;
    int ell;
    double delta;
  };
  const Config configs[] = {{1, 3, 0.75}, {2, 7, 0.9}, {3, 15, 0.9535}};
  std::vector<double> normalized;
  for (const auto& cfg : configs) {
    const auto sup = appendixB_supremum(cfg.rho, cfg.ell, cfg.delta, 32,
                                        options.seed);
    result.checks.push_back(check_leq(
        "ascent agrees with Lagrange candidates (rho=" +
            std::to_string(cfg.rho) + ", ell=" + std::to_string(cfg.ell) + ")",
        sup.agreement.relative_gap, 1e-6,
        "sup = " + std::to_string(sup.supremum)));
    normalized.push_back(sup.supremum / std::pow(cfg.delta, cfg.rho));
  }
  double worst_ratio = 1.0;
  for (size_t i = 1; i < normalized.size(); ++i) {
    const double growth = normalized[i] / normalized[i - 1];
    const double linear =
        static_cast<double>(configs[i].ell) / configs[i - 1].ell;
    const double off = std::max(growth / linear, linear / growth);
    worst_ratio = std::max(worst_ratio, off);
  }
  result.checks.push_back(check_leq("growth in ell within factor 2.5 of linear",
                                    worst_ratio, 2.5));
  return result;
}

SuiteResult suite_parseval(const VerifyOptions& options) {
  SuiteResult result{"parseval", {}};
  LaurentPoly one_plus_z;
  one_plus_z.add_coeff(0, {1.0, 0.0});
  one_plus_z.add_coeff(1, {1.0, 0.0});
  result.checks.push_back(check_leq("1 + z over 16 samples",
                                    parseval_oracle(one_plus_z, 16).relative_gap,
                                    1e-8));
  result.checks.push_back(check_leq(
      "z^5 over 64 samples",
      parseval_oracle(LaurentPoly::monomial(5), 64).relative_gap, 1e-8));
  Rng rng(options.seed + 99);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const auto lo = rng.uniform_int(-8, 0);
    const auto hi = lo + rng.uniform_int(1, 10);
    const LaurentPoly p = random_laurent(lo, hi, rng);
    const int needed = static_cast<int>(4 * (hi - lo + 1));
    worst = std::max(worst, parseval_oracle(p, needed).relative_gap);
  }
  result.checks.push_back(
      check_leq("random polynomials at 4x oversampling", worst, 1e-8));
  return result;
}

}  // namespace

std::vector<GateProgram> make_campaign(const VerifyOptions& options) {
  Rng rng(options.seed);
  CampaignParams params;
  params.n = options.n;
  params.m = options.program_length;
  params.delta = options.delta;
  params.max_exponent = options.max_exponent;
  std::vector<GateProgram> programs;
  programs.reserve(static_cast<size_t>(options.random_programs));
  for (int i = 0; i < options.random_programs; ++i) {
    programs.push_back(random_balanced_program(params, rng));
  }
  return programs;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "paraunitary", "lemma1",    "lemma2",    "claim3",  "claim4",
      "maxmod",      "appendixA", "appendixB", "parseval"};
  return names;
}

SuiteResult run_verify_suite(const std::string& name,
                             const VerifyOptions& options) {
  if (name == "paraunitary") return suite_paraunitary(options);
  if (name == "lemma1") return suite_lemma1(options);
  if (name == "lemma2") return suite_lemma2(options);
  if (name == "claim3") return suite_claim3(options);
  if (name == "claim4") return suite_claim4(options);
  if (name == "maxmod") return suite_maxmod(options);
  if (name == "appendixA") return suite_appendixA(options);
  if (name == "appendixB") return suite_appendixB(options);
  if (name == "parseval") return suite_parseval(options);
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options) {
  std::vector<SuiteResult> results;
  for (const auto& name : verify_suite_names()) {
    results.push_back(run_verify_suite(name, options));
  }
  return results;
}

}  // namespace paracond
