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

// Independent reference computations used only by the tests. None of these
// call into the library code they check.

#ifndef ARRCOH_TESTS_ORACLES_HPP_
#define ARRCOH_TESTS_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "arrcoh/arrangement.hpp"

namespace oracle {

using arrcoh::Integer;
using arrcoh::Rational;

// Moebius function by trial division.
int mobius(int n);

// Phi_M = prod_{d | M} (x^d - 1)^{mu(M/d)}, computed as an exact quotient of
// integer polynomials (constant term first).
std::vector<Integer> cyclotomic(int m);

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b);

// Rank over F_p of a small integer matrix by counting kernel vectors:
// rank = cols - log_p |ker|.
std::size_t rank_by_kernel_count(const std::vector<std::vector<long>>& rows, long p);

// Lines a x + b y = c as integer triples.
struct Line {
  long a, b, c;
};

// Betti numbers of a line arrangement by direct pair counting:
// b2 = #(non-parallel pairs) - sum over points of (C(m,2) - (m - 1)).
std::vector<long> betti_by_pairs(const std::vector<Line>& lines);

// Sign vectors of all chambers. Every chamber has a boundary edge; for each
// edge (a segment between consecutive crossings on a line, or beyond the
// extreme ones) the two chambers beside it are found by stepping off the
// midpoint along the normal by less than the distance to any other line.
std::set<std::vector<int>> chambers_by_edges(const std::vector<Line>& lines);

// Same for points x = c on a line: the intervals between and beyond them.
std::set<std::vector<int>> chambers_of_points(const std::vector<Rational>& points);

}  // namespace oracle

#endif  // ARRCOH_TESTS_ORACLES_HPP_
