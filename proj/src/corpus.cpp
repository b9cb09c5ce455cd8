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

#include "arrcoh/corpus.hpp"

#include <array>
#include <initializer_list>

#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

// Rows (a1, a2, c) for lines a1 x + a2 y = c.
Arrangement lines(std::initializer_list<std::array<long, 3>> rows) {
  std::vector<HyperplaneEquation> eqs;
  for (const auto& r : rows) eqs.push_back({{Rational(r[0]), Rational(r[1])}, Rational(r[2])});
  return normalize_arrangement(2, eqs);
}

Arrangement points(std::initializer_list<long> xs) {
  std::vector<HyperplaneEquation> eqs;
  for (long x : xs) eqs.push_back({{Rational(1)}, Rational(x)});
  return normalize_arrangement(1, eqs);
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  return {
      {"generic3", "x=0, y=0, x+y=1", lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}})},
      {"generic4", "x=0, y=0, x+y=1, x-y=2",
       lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, -1, 2}})},
      {"pencil3", "x=0, y=0, x=y", lines({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}})},
      {"pencil3_plus1", "x=0, y=0, x=y, x-2y=1",
       lines({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, -2, 1}})},
      {"cross", "x=0, y=0", lines({{1, 0, 0}, {0, 1, 0}})},
      {"strip", "x=0, x=1, y=0", lines({{1, 0, 0}, {1, 0, 1}, {0, 1, 0}})},
      {"near_pencil5", "x=0, y=0, x=y, x=-y, x+2y=1",
       lines({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, 1, 0}, {1, 2, 1}})},
      {"braid", "x=0, y=0, x=y, x+y=1", lines({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, 1, 1}})},
      {"deconed_braid", "x=0, x=1, y=0, y=1, x=y",
       lines({{1, 0, 0}, {1, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, -1, 0}})},
      {"points1", "{0}", points({0})},
      {"points2", "{0, 1}", points({0, 1})},
      {"points3", "{0, 1, 2}", points({0, 1, 2})},
  };
}

CorpusEntry corpus_entry(const std::string& name) {
  for (CorpusEntry& e : builtin_corpus()) {
    if (e.name == name) return e;
  }
  throw ArrangementError("unknown corpus arrangement '" + name + "'");
}

}  // namespace arrcoh
