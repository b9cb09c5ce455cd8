// Copyright 2026 The Authors.
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

#ifndef ARRCOH_SWEEP_HPP_
#define ARRCOH_SWEEP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arrcoh/arrangement.hpp"
#include "arrcoh/complex.hpp"
#include "arrcoh/field.hpp"

namespace arrcoh {

enum class FieldMode { kCyclotomic, kPrime };

struct SweepConfig {
  Arrangement arrangement;
  int m = 2;
  FieldMode mode = FieldMode::kCyclotomic;
  std::uint64_t prime = 0;  // 0 selects default_prime(m)
  std::uint64_t limit = 1000000;  // largest accepted m^n
  int flag_seed = 1;
  unsigned threads = 0;  // 0 uses the hardware concurrency
};

// Smallest prime p with 2m | p - 1.
std::uint64_t default_prime(int m);

// Field the sweep computes in.
FieldDescriptor sweep_field(const SweepConfig& config);

// Character with exponents a in the sweep's field.
CharacterSpec sweep_character(const SweepConfig& config, const std::vector<std::int64_t>& a);

// The code-th exponent vector in lexicographic order over (Z/m)^n.
std::vector<std::int64_t> exponents_at(std::uint64_t code, int m, std::size_t n);

struct CharacterResult {
  std::vector<std::int64_t> exponents;
  bool trivial = false;
  std::vector<long> h;
  std::vector<std::size_t> ranks;
  std::vector<bool> nabla_nonzero;

  // Nontrivial: h^k < b_k for all k. Trivial: h = b.
  bool strict_bound = false;
  // Nontrivial: h^k <= b_k - 2 for 1 <= k <= ell - 1.
  bool refined_bound = false;
  bool euler_ok = false;
  // Nontrivial: nabla_k != 0 for 0 <= k <= ell - 1.
  bool nabla_ok = false;

  bool passed() const { return strict_bound && refined_bound && euler_ok && nabla_ok; }
};

struct SweepReport {
  int m = 0;
  FieldDescriptor field = FieldDescriptor::rationals();
  int flag_seed = 1;
  std::vector<long> betti;
  std::vector<CharacterResult> results;  // lexicographic exponent order

  std::size_t trivial_count = 0;
  std::size_t nontrivial_count = 0;
  std::size_t strict_pass = 0;
  std::size_t refined_pass = 0;
  std::size_t euler_pass = 0;
  std::size_t nabla_pass = 0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
};

// Evaluates all m^n characters. Throws ArrangementError when m < 2 or m^n
// exceeds the limit, FieldError for an unusable prime.
SweepReport run_sweep(const SweepConfig& config);

// Scores one character against the verdicts.
CharacterResult evaluate_character(const ChamberModel& model, const CharacterSpec& chi,
                                   std::vector<std::int64_t> exponents);

struct CrossValidationReport {
  std::size_t sampled = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// For every stride-th character (and always the trivial one): flag seeds
// s and s+7, every single square-root sign flip, the Euler identity, the
// other field realization, and aomoto_betti against the linearized complex
// with w = a over Q and over the prime field.
CrossValidationReport cross_validate(const SweepConfig& config, std::size_t stride = 0);

}  // namespace arrcoh

#endif  // ARRCOH_SWEEP_HPP_
