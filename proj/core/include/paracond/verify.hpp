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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paracond/gates.hpp"

namespace paracond {

struct CheckResult {
  std::string name;
  bool pass = false;
  double observed = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

struct VerifyOptions {
  int n = 4;                  // campaign dimension
  int random_programs = 100;  // campaign size
  int program_length = 50;
  double delta = 0.75;
  int max_exponent = 3;
  int samples = 512;  // unit-circle samples for the maximum modulus sweep
  int grid = 256;     // theta grid for rotation calibration
  std::uint64_t seed = 0;
  std::optional<double> kappa;  // empty = measured algebraic condition
};

/// The shared random campaign: random_programs balanced delta-integral
/// programs drawn from the options' seed.
std::vector<GateProgram> make_campaign(const VerifyOptions& options);

/// paraunitary | lemma1 | lemma2 | claim3 | claim4 | maxmod | appendixA |
/// appendixB | parseval.
const std::vector<std::string>& verify_suite_names();

/// Runs one named suite.  Throws std::invalid_argument for unknown names.
SuiteResult run_verify_suite(const std::string& name,
                             const VerifyOptions& options);

/// All suites in canonical order.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

}  // namespace paracond
