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

#include "paracond/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace paracond {

using json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

GateProgram parse_algorithm(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("algorithm file: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("algorithm file: expected an object");
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer()) {
    throw SchemaError("algorithm file: missing integer field 'format_version'");
  }
  if (doc["format_version"].get<int>() != kAlgorithmFormatVersion) {
    throw SchemaError("algorithm file: unsupported format_version");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw SchemaError("algorithm file: missing integer field 'n'");
  }
  if (!doc.contains("gates") || !doc["gates"].is_array()) {
    throw SchemaError("algorithm file: missing array field 'gates'");
  }

  GateProgram p;
  p.n = doc["n"].get<int>();
  p.label = doc.value("label", std::string{});
  int index = 0;
  for (const auto& record : doc["gates"]) {
    const std::string where = "gate " + std::to_string(index);
    if (!record.is_object() || !record.contains("type")) {
      throw SchemaError(where + ": expected an object with a 'type' field");
    }
    const std::string type = record["type"].get<std::string>();
    if (type == "rotation") {
      for (const char* field : {"i", "j", "theta", "reflect"}) {
        if (!record.contains(field)) {
          throw SchemaError(where + ": rotation missing field '" + field + "'");
        }
      }
      RotationGate g;
      g.i = record["i"].get<int>();
      g.j = record["j"].get<int>();
      g.theta = record["theta"].get<double>();
      g.reflect = record["reflect"].get<bool>();
      p.gates.emplace_back(g);
    } else if (type == "constant") {
      for (const char* field : {"i", "value"}) {
        if (!record.contains(field)) {
          throw SchemaError(where + ": constant missing field '" + field + "'");
        }
      }
      ConstantGate g;
      g.i = record["i"].get<int>();
      g.value = record["value"].get<double>();
      p.gates.emplace_back(g);
    } else {
      throw SchemaError(where + ": unknown gate type '" + type + "'");
    }
    ++index;
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("algorithm file: ") + e.what());
  }
  return p;
}

std::string serialize_algorithm(const GateProgram& p) {
  json doc;
  doc["format_version"] = kAlgorithmFormatVersion;
  doc["label"] = p.label;
  doc["n"] = p.n;
  doc["gates"] = json::array();
  for (const Gate& gate : p.gates) {
    json record;
    if (const auto* rot = std::get_if<RotationGate>(&gate)) {
      record["type"] = "rotation";
      record["i"] = rot->i;
      record["j"] = rot->j;
      record["theta"] = rot->theta;
      record["reflect"] = rot->reflect;
    } else {
      const auto& cst = std::get<ConstantGate>(gate);
      record["type"] = "constant";
      record["i"] = cst.i;
      record["value"] = cst.value;
    }
    doc["gates"].push_back(std::move(record));
  }
  return doc.dump(2) + "\n";
}

GateProgram load_algorithm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open algorithm file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algorithm(buffer.str());
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " + temp.string());
    }
    out << content;
    if (!out.good()) {
      throw std::runtime_error("write failed: " + temp.string());
    }
  }
  std::filesystem::rename(temp, path);
}

std::string trace_csv(const PotentialTrace& trace, const ConditionReport& report) {
  std::ostringstream out;
  out << "t,gate,phi_re,phi_im,dphi,bound,rowA,rowB,deg,val,alg_cond,geo_cond\n";
  for (const auto& step : trace.steps) {
    const auto& cond = report.steps.at(static_cast<size_t>(step.t));
    out << step.t << ',' << (step.rotation ? "rotation" : "constant") << ','
        << format_double(step.phi.real()) << ',' << format_double(step.phi.imag())
        << ',' << format_double(step.dphi) << ',' << format_double(step.bound)
        << ',' << format_double(step.row_a) << ',' << format_double(step.row_b)
        << ',' << cond.deg << ',' << cond.val << ','
        << format_double(cond.algebraic) << ',' << format_double(cond.geometric)
        << '\n';
  }
  return out.str();
}

std::string lift_report_csv(const std::vector<PolyMatrix>& lifted,
                            const GateProgram& p, double delta) {
  std::ostringstream out;
  out << "t,deg,val,support_width,eval_residual,paraunitary_residual\n";
  for_each_prefix(p, [&](int t, const Eigen::MatrixXd& prefix) {
    const PolyMatrix& m = lifted.at(static_cast<size_t>(t));
    const auto deg = m.degree();
    const auto val = m.valuation();
    const double residual =
        (m.evaluate({delta, 0.0}) - prefix.cast<Complex>()).cwiseAbs().maxCoeff();
    out << t << ',' << deg << ',' << val << ',' << (deg - val + 1) << ','
        << format_double(residual) << ','
        << format_double(m.paraunitary_residual()) << '\n';
  });
  return out.str();
}

namespace {

json condition_to_json(const ConditionReport& report, bool with_steps) {
  json c;
  c["delta"] = report.delta;
  c["algorithm_geometric"] = report.algorithm_geometric;
  c["algorithm_algebraic"] = report.algorithm_algebraic;
  c["rho"] = report.rho;
  if (with_steps) {
    c["steps"] = json::array();
    for (const auto& step : report.steps) {
      json s;
      s["t"] = step.t;
      s["geometric"] = step.geometric;
      s["deg"] = step.deg;
      s["val"] = step.val;
      s["algebraic"] = step.algebraic;
      c["steps"].push_back(std::move(s));
    }
  }
  return c;
}

json suites_to_json(const std::vector<SuiteResult>& suites) {
  json v = json::array();
  for (const auto& suite : suites) {
    json s;
    s["suite"] = suite.suite;
    s["pass"] = suite.all_pass();
    s["checks"] = json::array();
    for (const auto& check : suite.checks) {
      json c;
      c["name"] = check.name;
      c["pass"] = check.pass;
      c["observed"] = check.observed;
      c["threshold"] = check.threshold;
      if (!check.detail.empty()) c["detail"] = check.detail;
      s["checks"].push_back(std::move(c));
    }
    v.push_back(std::move(s));
  }
  return v;
}

json parameters_to_json(const ReportParameters& params) {
  json j;
  j["delta"] = params.delta;
  j["kappa"] = params.kappa;
  j["rho"] = params.rho;
  j["ell"] = params.ell;
  j["change_constant"] = params.change_constant;
  j["seed"] = params.seed;
  j["samples"] = params.samples;
  return j;
}

}  // namespace

std::string analysis_report_json(const GateProgram& p,
                                 const ConditionReport& condition,
                                 const PotentialTrace& trace,
                                 const EndpointGapReport& endpoint,
                                 const std::vector<SuiteResult>& suites,
                                 const ReportParameters& params) {
  json doc;
  doc["tool"] = kToolVersion;
  doc["label"] = p.label;
  doc["n"] = p.n;
  doc["m"] = p.step_count();
  doc["parameters"] = parameters_to_json(params);
  doc["condition"] = condition_to_json(condition, true);
  json potential;
  potential["phi_identity"] = trace.phi_identity.real();
  potential["phi_final"] = trace.phi_final.real();
  potential["max_abs_imag"] = trace.max_abs_imag;
  potential["max_step_bound"] = trace.max_step_bound;
  potential["violations"] = trace.violations;
  doc["potential"] = std::move(potential);
  json gap;
  gap["gap"] = endpoint.gap;
  gap["reference_scale"] = endpoint.reference_scale;
  gap["final_over_reference"] = endpoint.final_over_reference;
  gap["identity_over_reference"] = endpoint.identity_over_reference;
  gap["implied_steps"] = endpoint.implied_steps;
  gap["m"] = endpoint.m;
  gap["consistent"] = endpoint.consistent;
  doc["endpoint_gap"] = std::move(gap);
  doc["verification"] = suites_to_json(suites);
  return doc.dump(2) + "\n";
}

std::string analysis_report_markdown(const GateProgram& p,
                                     const ConditionReport& condition,
                                     const PotentialTrace& trace,
                                     const EndpointGapReport& endpoint,
                                     const std::vector<SuiteResult>& suites,
                                     const ReportParameters& params) {
  std::ostringstream out;
  out << "# Analysis report: " << (p.label.empty() ? "(unnamed)" : p.label)
      << "\n\n";
  out << "Generated by " << kToolVersion << ".\n\n";
  out << "## Parameters\n\n";
  out << "| field | value |\n|---|---|\n";
  out << "| n | " << p.n << " |\n";
  out << "| m | " << p.step_count() << " |\n";
  out << "| delta | " << format_double(params.delta) << " |\n";
  out << "| kappa | " << format_double(params.kappa) << " |\n";
  out << "| rho | " << params.rho << " |\n";
  out << "| ell | " << params.ell << " |\n";
  out << "| change constant | " << format_double(params.change_constant) << " |\n";
  out << "| seed | " << params.seed << " |\n";
  out << "| samples | " << params.samples << " |\n\n";
  out << "## Condition numbers\n\n";
  out << "| quantity | value |\n|---|---|\n";
  out << "| algorithm geometric | " << format_double(condition.algorithm_geometric)
      << " |\n";
  out << "| algorithm algebraic | " << format_double(condition.algorithm_algebraic)
      << " |\n";
  out << "| rho (real) | " << format_double(condition.rho) << " |\n\n";
  out << "## Potential\n\n";
  out << "| quantity | value |\n|---|---|\n";
  out << "| phi(Id) | " << format_double(trace.phi_identity.real()) << " |\n";
  out << "| phi(final) | " << format_double(trace.phi_final.real()) << " |\n";
  out << "| gap | " << format_double(endpoint.gap) << " |\n";
  out << "| max step bound | " << format_double(trace.max_step_bound) << " |\n";
  out << "| implied steps | " << format_double(endpoint.implied_steps) << " |\n";
  out << "| consistent with m | " << (endpoint.consistent ? "yes" : "no")
      << " |\n\n";
  out << "## Verification\n\n";
  out << "| suite | check | result | observed | threshold |\n|---|---|---|---|---|\n";
  for (const auto& suite : suites) {
    for (const auto& check : suite.checks) {
      out << "| " << suite.suite << " | " << check.name << " | "
          << (check.pass ? "pass" : "FAIL") << " | "
          << format_double(check.observed) << " | "
          << format_double(check.threshold) << " |\n";
    }
  }
  out << '\n';
  return out.str();
}

std::string condition_report_json(const GateProgram& p,
                                  const ConditionReport& report) {
  json doc;
  doc["tool"] = kToolVersion;
  doc["label"] = p.label;
  doc["n"] = p.n;
  doc["m"] = p.step_count();
  doc["condition"] = condition_to_json(report, true);
  return doc.dump(2) + "\n";
}

std::string condition_report_csv(const ConditionReport& report) {
  std::ostringstream out;
  out << "t,geo_cond,deg,val,alg_cond\n";
  for (const auto& step : report.steps) {
    out << step.t << ',' << format_double(step.geometric) << ',' << step.deg
        << ',' << step.val << ',' << format_double(step.algebraic) << '\n';
  }
  return out.str();
}

std::string suites_json(const std::vector<SuiteResult>& suites) {
  json doc;
  doc["tool"] = kToolVersion;
  doc["verification"] = suites_to_json(suites);
  return doc.dump(2) + "\n";
}

}  // namespace paracond
