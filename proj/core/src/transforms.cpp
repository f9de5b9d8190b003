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

#include "paracond/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace paracond {

namespace {

constexpr double kPi = std::numbers::pi;

int log2_exact(int n) {
  int bits = 0;
  while ((1 << bits) < n) ++bits;
  return bits;
}

int bit_reverse(int k, int bits) {
  int r = 0;
  for (int b = 0; b < bits; ++b) {
    r = (r << 1) | (k & 1);
    k >>= 1;
  }
  return r;
}

void check_spec(const TransformSpec& spec) {
  if (!is_power_of_two(spec.n)) {
    throw std::invalid_argument("transform dimension must be a power of two");
  }
  if (spec.kind == TransformKind::dft_real && spec.n < 2) {
    throw std::invalid_argument("dft_real requires n >= 2");
  }
}

// One normalized butterfly: (x_i, x_j) -> ((x_i + x_j)/sqrt(2), (x_i - x_j)/sqrt(2)).
Gate butterfly(int i, int j) { return RotationGate{i, j, kPi / 4.0, true}; }

// Exchange of coordinates i and j.
Gate swap_gate(int i, int j) { return RotationGate{i, j, kPi / 2.0, true}; }

GateProgram walsh_hadamard_program(int n) {
  GateProgram p;
  p.n = n;
  p.label = "walsh_hadamard_" + std::to_string(n);
  for (int h = 1; h < n; h *= 2) {
    for (int block = 0; block < n; block += 2 * h) {
      for (int offset = 0; offset < h; ++offset) {
        p.gates.push_back(butterfly(block + offset, block + offset + h));
      }
    }
  }
  return p;
}

GateProgram dft_real_program(int n) {
  GateProgram p;
  p.n = n;
  p.label = "dft_real_" + std::to_string(n);
  const int complex_n = n / 2;
  const int bits = log2_exact(complex_n);
  for (int k = 0; k < complex_n; ++k) {
    const int r = bit_reverse(k, bits);
    if (k < r) {
      p.gates.push_back(swap_gate(2 * k, 2 * r));
      p.gates.push_back(swap_gate(2 * k + 1, 2 * r + 1));
    }
  }
  for (int span = 2; span <= complex_n; span *= 2) {
    const int half = span / 2;
    for (int block = 0; block < complex_n; block += span) {
      for (int j = 0; j < half; ++j) {
        const int u = block + j;
        const int v = block + j + half;
        if (j != 0) {
          // Twiddle w = exp(-2*pi*i*j/span) acting on complex coordinate v.
          const double phi = 2.0 * kPi * j / span;
          p.gates.push_back(RotationGate{2 * v, 2 * v + 1, -phi, false});
        }
        p.gates.push_back(butterfly(2 * u, 2 * v));
        p.gates.push_back(butterfly(2 * u + 1, 2 * v + 1));
      }
    }
  }
  return p;
}

}  // namespace

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Eigen::MatrixXd target_matrix(const TransformSpec& spec) {
  check_spec(spec);
  const int n = spec.n;
  Eigen::MatrixXd f(n, n);
  if (spec.kind == TransformKind::walsh_hadamard) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int parity = __builtin_popcount(static_cast<unsigned>(i & j)) & 1;
        f(i, j) = parity ? -scale : scale;
      }
    }
  } else {
    const int complex_n = n / 2;
    const double scale = 1.0 / std::sqrt(static_cast<double>(complex_n));
    for (int k = 0; k < complex_n; ++k) {
      for (int l = 0; l < complex_n; ++l) {
        const double angle = -2.0 * kPi * k * l / complex_n;
        const double c = scale * std::cos(angle);
        const double d = scale * std::sin(angle);
        f(2 * k, 2 * l) = c;
        f(2 * k, 2 * l + 1) = -d;
        f(2 * k + 1, 2 * l) = d;
        f(2 * k + 1, 2 * l + 1) = c;
      }
    }
  }
  return f;
}

GateProgram target_program(const TransformSpec& spec, bool /*explicit_permutation*/) {
  check_spec(spec);
  if (spec.kind == TransformKind::walsh_hadamard) {
    return walsh_hadamard_program(spec.n);
  }
  return dft_real_program(spec.n);
}

GateProgram scaled_variant(const TransformSpec& spec, double delta,
                           int window_lo, int window_hi) {
  check_spec(spec);
  if (!(delta > 2.0 / 3.0 && delta < 1.0)) {
    throw std::invalid_argument("scaled_variant: delta must lie in (2/3, 1)");
  }
  if (window_lo > 0 || window_hi < 0) {
    throw std::invalid_argument(
        "scaled_variant: window must satisfy lo <= 0 <= hi");
  }
  const GateProgram base = target_program(spec);
  GateProgram p;
  p.n = base.n;
  p.label = base.label + "_scaled";

  auto push_pair = [&](int row, int exponent) {
    if (exponent == 0) return;
    p.gates.push_back(ConstantGate{row, std::pow(delta, exponent)});
    p.gates.push_back(ConstantGate{row, std::pow(delta, -exponent)});
  };

  // Opening stagger: rows 0 and 1 displaced to opposite window edges at the
  // same time, so the algorithm attains the full support spread.
  if (window_hi > 0 && window_lo < 0 && p.n >= 2) {
    p.gates.push_back(ConstantGate{0, std::pow(delta, window_hi)});
    p.gates.push_back(ConstantGate{1, std::pow(delta, window_lo)});
    p.gates.push_back(ConstantGate{0, std::pow(delta, -window_hi)});
    p.gates.push_back(ConstantGate{1, std::pow(delta, -window_lo)});
  }

  const int chunks = std::max(1, log2_exact(p.n));
  const int chunk_size =
      (base.step_count() + chunks - 1) / std::max(1, chunks);
  int emitted = 0;
  for (const Gate& g : base.gates) {
    p.gates.push_back(g);
    ++emitted;
    if (emitted % chunk_size == 0 || emitted == base.step_count()) {
      for (int row = 0; row < p.n; ++row) {
        push_pair(row, row % 2 == 0 ? window_hi : window_lo);
      }
    }
  }
  return p;
}

GateProgram tightness_program(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("tightness_program: delta must lie in (0, 1)");
  }
  GateProgram p;
  p.n = 2;
  p.label = "tightness";
  p.gates.push_back(ConstantGate{0, delta});
  p.gates.push_back(ConstantGate{1, 1.0 / delta});
  return p;
}

}  // namespace paracond
