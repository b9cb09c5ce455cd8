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

#ifndef ARRCOH_SELFTEST_HPP_
#define ARRCOH_SELFTEST_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arrcoh/aomoto.hpp"
#include "arrcoh/arrangement.hpp"
#include "arrcoh/complex.hpp"

namespace arrcoh {

// One row per C in bch^1: deg(C, C^v) against (-1)^{1 - dim X(C)}.
struct OppositeRow {
  std::size_t chamber = 0;
  std::size_t opposite = 0;
  int span_dim = 0;
  int opposite_level = -1;  // stratum of C^v
  int degree = 0;           // 0 when C^v is not in ch^2
  int expected = 0;
  bool ok = false;
};

// Dimension 2 only; empty for point arrangements.
std::vector<OppositeRow> opposite_degree_table(const ChamberModel& model);

// Every unbounded chamber has an unbounded opposite with the same X(C), the
// map is an involution, and Sep(C, C^v) is the set of hyperplanes whose
// closure misses X(C). Returns a description of each violation.
std::vector<std::string> opposite_violations(const Arrangement& a,
                                             const std::vector<Chamber>& chambers);

// Reproducible random weight vectors: entries in [-bound, bound] over Q, or
// uniform residues over F_p.
std::vector<WeightVector> random_weights(const FieldDescriptor& field, std::size_t n,
                                         std::size_t count, std::uint64_t seed, long bound = 5);

struct SelftestCheck {
  std::string arrangement;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  std::vector<int> orders{2, 3};
  std::vector<int> seeds{1, 8};
  std::size_t weight_samples = 20;
  std::uint64_t exhaustive_bound = 100000;
  unsigned threads = 0;
};

// Runs the invariant battery on one arrangement. Exceptions inside a check
// are reported as failures of that check.
std::vector<SelftestCheck> run_selftest(const std::string& name, const Arrangement& a,
                                        const SelftestOptions& options = {});

}  // namespace arrcoh

#endif  // ARRCOH_SELFTEST_HPP_
