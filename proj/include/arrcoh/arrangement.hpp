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

#ifndef ARRCOH_ARRANGEMENT_HPP_
#define ARRCOH_ARRANGEMENT_HPP_

#include <cstddef>
#include <vector>

#include "arrcoh/rational.hpp"

namespace arrcoh {

// Affine hyperplane equation normal . x = offset as supplied by a caller.
struct HyperplaneEquation {
  std::vector<Rational> normal;
  Rational offset;
};

// Normalized hyperplane: integer entries with gcd 1 and the first nonzero
// normal coordinate positive. The sign of a point is sign(normal . x - offset).
struct Hyperplane {
  std::vector<Integer> normal;
  Integer offset;
  std::size_t index = 0;

  Rational evaluate(const Point& x) const;
  int side(const Point& x) const { return sign(evaluate(x)); }
  bool operator==(const Hyperplane& other) const {
    return normal == other.normal && offset == other.offset;
  }
};

// An essential affine arrangement of points (dim 1) or lines (dim 2).
class Arrangement {
 public:
  int dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

  // Parallelism classes, one per point of the hyperplane at infinity met by
  // the closures of the lines. Empty in dimension 1, where no closure meets
  // infinity.
  const std::vector<std::vector<std::size_t>>& infinity_points() const {
    return infinity_points_;
  }

  bool parallel(std::size_t i, std::size_t j) const;
  // All hyperplanes share a common point.
  bool is_central() const;

  std::vector<HyperplaneEquation> equations() const;

  bool operator==(const Arrangement& other) const {
    return dim_ == other.dim_ && hyperplanes_ == other.hyperplanes_;
  }

 private:
  friend Arrangement normalize_arrangement(int dim, const std::vector<HyperplaneEquation>& raw);
  Arrangement() = default;

  int dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::vector<std::size_t>> infinity_points_;
};

// Canonicalizes each equation and validates the arrangement. Throws
// ArrangementError on a zero normal, a duplicate hyperplane, a dimension
// outside {1, 2}, or a non-essential arrangement.
Arrangement normalize_arrangement(int dim, const std::vector<HyperplaneEquation>& raw);

// Canonical integer form of a single equation (no arrangement checks).
Hyperplane normalize_hyperplane(const HyperplaneEquation& eq);

// Edge of the intersection poset: the ambient space, a hyperplane, or (in
// dimension 2) an intersection point.
struct Edge {
  int dim = 0;
  Point point;                         // set for 0-dimensional edges
  std::vector<std::size_t> hyperplanes;  // hyperplanes containing the edge
  long mobius = 0;
};

struct IntersectionPoset {
  int ambient_dim = 0;
  std::vector<Edge> edges;  // ordered by decreasing dimension, points sorted

  // The 0-dimensional edges, L_0.
  std::vector<const Edge*> vertices() const;
};

IntersectionPoset intersection_poset(const Arrangement& a);

// (b_0, ..., b_ell) of the complexified complement.
std::vector<long> betti(const Arrangement& a);

// Betti numbers via the Whitney sum b_k = sum over codim-k edges of |mu|.
std::vector<long> betti(const IntersectionPoset& poset);

struct Localization {
  Arrangement arrangement;
  std::vector<std::size_t> index_map;  // local index -> index in the parent
};

// The central sub-arrangement of hyperplanes through x. Throws
// ArrangementError unless x is a 0-dimensional edge.
Localization localize(const Arrangement& a, const Point& x);

}  // namespace arrcoh

#endif  // ARRCOH_ARRANGEMENT_HPP_
