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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "paracond/condition.hpp"
#include "paracond/gates.hpp"
#include "paracond/potential.hpp"
#include "paracond/verify.hpp"

namespace paracond {

inline constexpr int kAlgorithmFormatVersion = 1;
inline constexpr const char* kToolVersion = "paracond 1.0.0";

/// Malformed algorithm document; the message names the offending field or
/// gate index.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the JSON algorithm document
///   {"format_version": 1, "n": ..., "label": ..., "gates": [...]}
/// with gate records {"type":"rotation","i","j","theta","reflect"} and
/// {"type":"constant","i","value"}; indices are 0-based.  Gate invariants
/// are enforced; violations raise SchemaError.
GateProgram parse_algorithm(const std::string& text);

/// Canonical serialization; numbers keep full double precision (17
/// significant digits), so parse . serialize is the identity on canonical
/// documents.
std::string serialize_algorithm(const GateProgram& p);

GateProgram load_algorithm(const std::filesystem::path& path);

/// Writes via a temporary file in the same directory plus an atomic rename.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

/// Fixed column order:
/// t,gate,phi_re,phi_im,dphi,bound,rowA,rowB,deg,val,alg_cond,geo_cond
std::string trace_csv(const PotentialTrace& trace, const ConditionReport& report);

std::string lift_report_csv(const std::vector<PolyMatrix>& lifted,
                            const GateProgram& p, double delta);

struct ReportParameters {
  double delta = 0.75;
  double kappa = 1.0;
  int rho = 0;
  int ell = 1;
  double change_constant = kDefaultRotationChangeConstant;
  std::uint64_t seed = 0;
  int samples = 512;
};

/// The aggregate analysis document: condition summary, potential-trace
/// summary, verification suite results, parameters, and provenance.
std::string analysis_report_json(const GateProgram& p,
                                 const ConditionReport& condition,
                                 const PotentialTrace& trace,
                                 const EndpointGapReport& endpoint,
                                 const std::vector<SuiteResult>& suites,
                                 const ReportParameters& params);

std::string analysis_report_markdown(const GateProgram& p,
                                     const ConditionReport& condition,
                                     const PotentialTrace& trace,
                                     const EndpointGapReport& endpoint,
                                     const std::vector<SuiteResult>& suites,
                                     const ReportParameters& params);

std::string condition_report_json(const GateProgram& p,
                                  const ConditionReport& report);
std::string condition_report_csv(const ConditionReport& report);

std::string suites_json(const std::vector<SuiteResult>& suites);

/// "%.17g" rendering used across CSV and Markdown emitters.
std::string format_double(double value);

}  // namespace paracond
