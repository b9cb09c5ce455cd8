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

#ifndef ARRCOH_FLAG_HPP_
#define ARRCOH_FLAG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "arrcoh/arrangement.hpp"
#include "arrcoh/chamber.hpp"

namespace arrcoh {

struct Crossing {
  Rational parameter;
  std::size_t hyperplane = 0;
};

// Generic flag F^0 < F^1 near the line at infinity, with F^1 parameterized
// as origin + s * direction. In dimension 1, F^1 is the whole line and the
// parameter is the coordinate itself.
struct Flag {
  int seed = 0;
  int ambient_dim = 2;
  Point normal;  // F^1 = {normal . x = level}; empty in dimension 1
  Rational level;
  Point origin;
  Point direction;
  Rational basepoint;  // parameter of F^0
  Rational ball_lo;    // B^1 = [ball_lo, ball_hi]
  Rational ball_hi;
  std::vector<Crossing> crossings;  // ascending parameter

  Point at(const Rational& s) const;
};

// Tries normals (1, t) for t = seed, seed + 1, ... and keeps the first not
// parallel to any line; F^1 sits one unit beyond the furthest vertex and F^0
// one unit beyond the last crossing. The result passes verify_flag.
Flag build_flag(const Arrangement& a, int seed);

// Throws InternalError when a flag invariant fails.
void verify_flag(const Arrangement& a, const Flag& f);

// Interval C ∩ B^1 for a chamber of ch^1; a missing wall is an endpoint on
// the boundary of the ball.
struct FlagInterval {
  Rational lo;
  Rational hi;
  std::optional<std::size_t> lower_wall;
  std::optional<std::size_t> upper_wall;
};

struct Stratification {
  // strata[k] = ch^k as chamber indices; ch^1 is ordered along F^1.
  std::vector<std::vector<std::size_t>> strata;
  // bounded[k][j]: C ∩ F^k is bounded for C = strata[k][j].
  std::vector<std::vector<bool>> bounded;
  // Aligned with strata[1] (dimension 2 only).
  std::vector<FlagInterval> intervals;
  // level[c] = k with c in ch^k.
  std::vector<int> level;
  // position[c] = index of c within its stratum.
  std::vector<std::size_t> position;

  std::size_t bounded_count(std::size_t k) const;
  std::size_t unbounded_count(std::size_t k) const;
};

// Splits the chambers by the flag and checks the stratum counts against the
// Betti numbers (InternalError on mismatch).
Stratification stratify(const Arrangement& a, const std::vector<Chamber>& chambers,
                        const Flag& f);

// deg(C, C') for C in ch^k, C' in ch^{k+1}. Equal to 1 for k = 0; for k = 1
// it is (sigma(p+) - sigma(p-)) / 2 over the endpoints of C ∩ B^1, where the
// ball boundary points inward and a wall points towards the side holding C'.
int degree(const Arrangement& a, const Flag& f, const Stratification& s,
           const std::vector<Chamber>& chambers, std::size_t c, std::size_t c_prime);

}  // namespace arrcoh

#endif  // ARRCOH_FLAG_HPP_
