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

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "paracond/condition.hpp"
#include "paracond/io.hpp"
#include "paracond/lifting.hpp"
#include "paracond/oracles.hpp"
#include "paracond/potential.hpp"
#include "paracond/transforms.hpp"
#include "paracond/verify.hpp"

namespace {

using namespace paracond;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  std::string transform = "wh";
  int n = 8;
  double delta = 0.75;
  std::string kappa = "auto";
  int samples = 512;
  int grid = 256;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::string input;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(out_path, content);
  }
}

GateProgram build_named_transform(const std::string& name, int n, double delta,
                                  bool scaled, int window_lo, int window_hi,
                                  bool explicit_permutation) {
  if (name == "tightness") return tightness_program(delta);
  TransformSpec spec;
  if (name == "wh") {
    spec.kind = TransformKind::walsh_hadamard;
  } else if (name == "dft") {
    spec.kind = TransformKind::dft_real;
  } else {
    throw CLI::ValidationError("--transform must be wh, dft, or tightness");
  }
  spec.n = n;
  if (scaled) return scaled_variant(spec, delta, window_lo, window_hi);
  return target_program(spec, explicit_permutation);
}

struct IntegralAnalysis {
  GateProgram program;
  IntegralityCertificate cert;
  std::vector<PolyMatrix> lifted;
  ConditionReport condition;
  double kappa = 1.0;
};

IntegralAnalysis analyze_integral(const GateProgram& program, double delta,
                                  const std::string& kappa_flag) {
  IntegralAnalysis a;
  a.program = program;
  const auto result = check_integral(program, delta);
  if (!result.ok()) {
    throw std::runtime_error(
        "program is not integral with respect to delta = " +
        format_double(delta) + " (offending constant " +
        format_double(*result.offending_constant) +
        "); use round-to-integral via `analyze --general` or pick a "
        "different base");
  }
  a.cert = *result.certificate;
  a.lifted = lift_program(program, a.cert);
  a.condition = condition_report(program, a.lifted, a.cert.delta);
  if (kappa_flag == "auto") {
    a.kappa = a.condition.algorithm_algebraic;
  } else {
    a.kappa = std::stod(kappa_flag);
    if (a.kappa < 1.0) throw std::runtime_error("--kappa must be >= 1");
  }
  return a;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"paracond: gate programs, Laurent lifts, condition numbers, "
               "and quasi-entropy potentials for in-place linear algorithms"};
  app.require_subcommand(1);
  CommonFlags flags;

  // ---- build ----
  auto* build = app.add_subcommand(
      "build", "Emit a transform or scaled-variant gate program");
  bool scaled = false;
  bool explicit_permutation = false;
  int window_lo = -1;
  int window_hi = 1;
  std::string label;
  build->add_option("--transform", flags.transform, "wh | dft | tightness")
      ->capture_default_str();
  build->add_option("--n", flags.n, "dimension (power of two)")
      ->capture_default_str();
  build->add_option("--delta", flags.delta, "base for scaled/tightness programs")
      ->capture_default_str();
  build->add_flag("--scaled", scaled, "emit the delta-integral scaled variant");
  build->add_option("--window-lo", window_lo, "lower lifted support bound (<= 0)")
      ->capture_default_str();
  build->add_option("--window-hi", window_hi, "upper lifted support bound (>= 0)")
      ->capture_default_str();
  build->add_flag("--explicit-permutation", explicit_permutation,
                  "force permutations as explicit reflect-rotation swaps");
  build->add_option("--label", label, "program label override");
  build->add_option("--out", flags.out, "output file (default: stdout)");

  // ---- lift ----
  auto* lift = app.add_subcommand(
      "lift", "Emit lifted supports and evaluation residuals per step");
  lift->add_option("input", flags.input, "algorithm file")->required();
  lift->add_option("--delta", flags.delta, "integrality base")
      ->capture_default_str();
  lift->add_option("--out", flags.out, "output file (default: stdout)");

  // ---- analyze ----
  auto* analyze = app.add_subcommand(
      "analyze", "Condition-number report for an algorithm file");
  bool general = false;
  analyze->add_option("input", flags.input, "algorithm file")->required();
  analyze->add_option("--delta", flags.delta, "integrality base")
      ->capture_default_str();
  analyze->add_option("--format", flags.format, "json | csv")
      ->capture_default_str();
  analyze->add_flag("--general", general,
                    "use the rounding schedule for non-integral programs");
  analyze->add_option("--out", flags.out, "output file (default: stdout)");

  // ---- trace ----
  auto* trace_cmd = app.add_subcommand(
      "trace", "Potential trace CSV for an algorithm file");
  double change_constant = kDefaultRotationChangeConstant;
  trace_cmd->add_option("input", flags.input, "algorithm file")->required();
  trace_cmd->add_option("--delta", flags.delta, "integrality base")
      ->capture_default_str();
  trace_cmd->add_option("--kappa", flags.kappa,
                        "auto (measured algebraic condition) or explicit value")
      ->capture_default_str();
  trace_cmd->add_option("--constant", change_constant,
                        "rotation change-bound constant")
      ->capture_default_str();
  trace_cmd->add_option("--out", flags.out, "output file (default: stdout)");

  // ---- verify ----
  auto* verify = app.add_subcommand(
      "verify", "Run a named verification suite (or `all`)");
  std::string suite_name = "all";
  VerifyOptions verify_options;
  verify->add_option("suite", suite_name,
                     "paraunitary | lemma1 | lemma2 | claim3 | claim4 | "
                     "maxmod | appendixA | appendixB | parseval | all")
      ->capture_default_str();
  verify->add_option("--n", verify_options.n, "campaign dimension")
      ->capture_default_str();
  verify->add_option("--random", verify_options.random_programs,
                     "number of random campaign programs")
      ->capture_default_str();
  verify->add_option("--delta", verify_options.delta, "campaign base")
      ->capture_default_str();
  verify->add_option("--samples", verify_options.samples,
                     "unit-circle samples for maxmod")
      ->capture_default_str();
  verify->add_option("--grid", verify_options.grid,
                     "theta grid for rotation calibration")
      ->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "campaign seed")
      ->capture_default_str();
  std::string verify_kappa = "auto";
  verify->add_option("--kappa", verify_kappa, "auto or explicit value")
      ->capture_default_str();
  verify->add_option("--out", flags.out, "also write results as JSON");

  // ---- report ----
  auto* report = app.add_subcommand(
      "report", "Aggregate analysis report (condition + potential + verify)");
  report->add_option("input", flags.input,
                     "algorithm file (omit to use --transform/--n)");
  report->add_option("--transform", flags.transform, "wh | dft | tightness")
      ->capture_default_str();
  report->add_option("--n", flags.n, "dimension when building inline")
      ->capture_default_str();
  report->add_option("--delta", flags.delta, "integrality base")
      ->capture_default_str();
  report->add_option("--kappa", flags.kappa, "auto or explicit value")
      ->capture_default_str();
  report->add_option("--samples", flags.samples, "unit-circle samples")
      ->capture_default_str();
  report->add_option("--seed", flags.seed, "seed for randomized suites")
      ->capture_default_str();
  report->add_option("--grid", flags.grid, "theta grid for rotation calibration")
      ->capture_default_str();
  report->add_option("--format", flags.format, "json | md")
      ->capture_default_str();
  report->add_option("--out", flags.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (build->parsed()) {
    GateProgram program =
        build_named_transform(flags.transform, flags.n, flags.delta, scaled,
                              window_lo, window_hi, explicit_permutation);
    if (!label.empty()) program.label = label;
    emit(flags.out, serialize_algorithm(program));
    return kExitPass;
  }

  if (lift->parsed()) {
    const GateProgram program = load_algorithm(flags.input);
    const auto analysis = analyze_integral(program, flags.delta, "auto");
    emit(flags.out,
         lift_report_csv(analysis.lifted, program, analysis.cert.delta));
    return kExitPass;
  }

  if (analyze->parsed()) {
    const GateProgram program = load_algorithm(flags.input);
    if (general) {
      const auto schedule = RoundingSchedule::standard();
      const auto result = general_algebraic_condition(program, schedule);
      std::string body = "q,delta_q,kappa_q\n";
      for (size_t qi = 0; qi < result.kappa_q.size(); ++qi) {
        body += std::to_string(qi + 1) + "," +
                format_double(schedule.deltas[qi]) + "," +
                format_double(result.kappa_q[qi]) + "\n";
      }
      body += "# estimate," + format_double(result.estimate) +
              ",converged=" + (result.converged ? std::string("yes") : "no") +
              "\n";
      emit(flags.out, body);
      return kExitPass;
    }
    const auto analysis = analyze_integral(program, flags.delta, "auto");
    if (flags.format == "csv") {
      emit(flags.out, condition_report_csv(analysis.condition));
    } else {
      emit(flags.out, condition_report_json(program, analysis.condition));
    }
    return kExitPass;
  }

  if (trace_cmd->parsed()) {
    const GateProgram program = load_algorithm(flags.input);
    const auto analysis = analyze_integral(program, flags.delta, flags.kappa);
    const auto pair =
        build_preconditioners(analysis.lifted.back(), final_matrix(program),
                              analysis.cert.delta, analysis.kappa);
    const auto trace = potential_trace(program, analysis.lifted, pair,
                                       change_constant);
    emit(flags.out, trace_csv(trace, analysis.condition));
    return trace.violations == 0 ? kExitPass : kExitCheckFailure;
  }

  if (verify->parsed()) {
    if (verify_kappa != "auto") {
      verify_options.kappa = std::stod(verify_kappa);
    }
    std::vector<SuiteResult> results;
    if (suite_name == "all") {
      results = run_all_suites(verify_options);
    } else {
      results.push_back(run_verify_suite(suite_name, verify_options));
    }
    bool all_pass = true;
    for (const auto& suite : results) {
      for (const auto& check : suite.checks) {
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << suite.suite << ": "
                  << check.name << " (observed " << format_double(check.observed)
                  << ", threshold " << format_double(check.threshold) << ")";
        if (!check.detail.empty()) std::cout << " -- " << check.detail;
        std::cout << '\n';
      }
      all_pass = all_pass && suite.all_pass();
    }
    if (!flags.out.empty()) write_file_atomic(flags.out, suites_json(results));
    return all_pass ? kExitPass : kExitCheckFailure;
  }

  if (report->parsed()) {
    GateProgram program;
    if (!flags.input.empty()) {
      program = load_algorithm(flags.input);
    } else {
      program = build_named_transform(flags.transform, flags.n, flags.delta,
                                      false, -1, 1, false);
    }
    const auto analysis = analyze_integral(program, flags.delta, flags.kappa);
    const auto pair =
        build_preconditioners(analysis.lifted.back(), final_matrix(program),
                              analysis.cert.delta, analysis.kappa);
    const auto calibration = calibrate_rotation_constant(flags.grid, flags.seed);
    const auto trace = potential_trace(program, analysis.lifted, pair,
                                       calibration.published_c);
    const auto endpoint = endpoint_gap_report(trace, program.n, pair.kappa,
                                              pair.ell, program.step_count());
    VerifyOptions verify_opts;
    verify_opts.seed = flags.seed;
    verify_opts.samples = flags.samples;
    verify_opts.delta = flags.delta;
    verify_opts.grid = flags.grid;
    const auto suites = run_all_suites(verify_opts);
    ReportParameters params;
    params.delta = analysis.cert.delta;
    params.kappa = pair.kappa;
    params.rho = pair.rho;
    params.ell = pair.ell;
    params.change_constant = calibration.published_c;
    params.seed = flags.seed;
    params.samples = flags.samples;
    const std::string body =
        flags.format == "md"
            ? analysis_report_markdown(program, analysis.condition, trace,
                                       endpoint, suites, params)
            : analysis_report_json(program, analysis.condition, trace, endpoint,
                                   suites, params);
    emit(flags.out, body);
    bool all_pass = trace.violations == 0;
    for (const auto& suite : suites) all_pass = all_pass && suite.all_pass();
    return all_pass ? kExitPass : kExitCheckFailure;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
