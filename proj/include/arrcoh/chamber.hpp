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

#ifndef ARRCOH_CHAMBER_HPP_
#define ARRCOH_CHAMBER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "arrcoh/arrangement.hpp"

namespace arrcoh {

// Entry i is +1 or -1: the side of hyperplane i containing the chamber.
using SignVector = std::vector<int>;

struct RecessionCone {
  enum class Kind { kZero, kRay, kSector };
  Kind kind = Kind::kZero;
  // Primitive integer directions of the extreme rays (0, 1 or 2 of them).
  std::vector<Point> rays;
};

struct Chamber {
  SignVector sign;
  bool bounded = false;
  RecessionCone recession;
  Point witness;
};

// All chambers, sorted by sign vector. Built by inserting hyperplanes one at a
// time into convex polygons clipped to a box around every vertex; the result
// is cross-checked against the Betti numbers (InternalError on mismatch).
std::vector<Chamber> enumerate_chambers(const Arrangement& a);

// Index of the chamber with the given sign vector, if any.
std::optional<std::size_t> find_chamber(const std::vector<Chamber>& chambers,
                                        const SignVector& sign);

// Indices of the hyperplanes whose signs differ.
std::vector<std::size_t> separating(const Chamber& c, const Chamber& d);

// Chamber containing a point off every hyperplane; ArrangementError if the
// point lies on one.
SignVector sign_at(const Arrangement& a, const Point& x);

RecessionCone recession_cone(const Arrangement& a, const SignVector& sign);

// The projective span X(C) of the face at infinity of an unbounded chamber:
// dim 0 carries the single infinity point as a direction, dim ell-1 = 1 means
// the whole line at infinity.
struct InfinitySpan {
  int dim = 0;
  std::optional<Point> direction;
};

// ArrangementError when called on a bounded chamber.
InfinitySpan infinity_span(const Arrangement& a, const Chamber& c);

// Index of the opposite chamber: flips every hyperplane whose closure misses
// X(C). InternalError if the flipped sign vector is not a chamber.
std::size_t opposite_chamber(const Arrangement& a, const std::vector<Chamber>& chambers,
                             const Chamber& c);

}  // namespace arrcoh

#endif  // ARRCOH_CHAMBER_HPP_
