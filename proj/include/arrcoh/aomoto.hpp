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

#ifndef ARRCOH_AOMOTO_HPP_
#define ARRCOH_AOMOTO_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arrcoh/arrangement.hpp"
#include "arrcoh/field.hpp"
#include "arrcoh/matrix.hpp"

namespace arrcoh {

// w = sum w_i e_i in degree one.
struct WeightVector {
  std::vector<FieldElem> entries;

  const FieldDescriptor& field() const { return entries.front().field(); }
  std::size_t size() const { return entries.size(); }
  FieldElem total() const;
  bool is_zero() const;

  static WeightVector from_integers(const FieldDescriptor& field, const std::vector<long>& w);
};

// Orlik-Solomon algebra of a point or line arrangement, truncated at the
// top degree. Degree two uses the basis e_{i1} e_j (j > i1) at each
// intersection point with smallest incident line i1; a product e_a e_b at the
// same point with a != i1 rewrites as e_{i1} e_b - e_{i1} e_a, and products of
// parallel lines vanish.
class OSAlgebra {
 public:
  explicit OSAlgebra(const Arrangement& a);

  int ambient_dim() const { return dim_; }
  std::size_t size() const { return n_; }
  // (dim A^0, ..., dim A^ell).
  std::vector<std::size_t> dims() const;
  const std::vector<std::pair<std::size_t, std::size_t>>& degree_two_basis() const {
    return basis_;
  }

  // e_a e_b as (basis index, coefficient) pairs, sorted by basis index.
  std::vector<std::pair<std::size_t, int>> product(std::size_t a, std::size_t b) const;

 private:
  int dim_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> basis_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> basis_index_;
  // Smallest line through the common point of lines i < j, or n_ when the
  // lines are parallel.
  std::vector<std::size_t> lead_;
};

OSAlgebra build_os(const Arrangement& a);

// Matrix of w∪ : A^k -> A^{k+1} (columns indexed by the basis of A^k).
// k must be 0 or 1.
ExactMatrix cup_matrix(const OSAlgebra& os, const WeightVector& w, int k);

// Ranks of w∪ in degrees 0..ell-1.
std::vector<std::size_t> cup_ranks(const OSAlgebra& os, const WeightVector& w);

// Cohomology dimensions of (A^•, w∪).
std::vector<long> aomoto_betti(const Arrangement& a, const WeightVector& w);

struct CupCheckReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;  // "w=(...) k=..." per zero map
  bool passed() const { return violations.empty(); }
};

// Checks that w∪ : A^{k-1} -> A^k is nonzero for 1 <= k <= ell and every
// nonzero w in F_p^n. Throws FieldError for a non-finite field or when
// p^n exceeds exhaustive_bound.
CupCheckReport check_cup_nonzero(const Arrangement& a, const FieldDescriptor& field,
                                 std::size_t exhaustive_bound);

// Same check over supplied weight vectors; zero vectors are skipped.
CupCheckReport check_cup_nonzero(const Arrangement& a, const std::vector<WeightVector>& samples);

}  // namespace arrcoh

#endif  // ARRCOH_AOMOTO_HPP_
