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

#ifndef ARRCOH_TRIPLES_HPP_
#define ARRCOH_TRIPLES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "arrcoh/arrangement.hpp"
#include "arrcoh/complex.hpp"

namespace arrcoh {

// Deletion-restriction triple for an affine distinguished hyperplane H.
struct Triple {
  Arrangement base;
  std::size_t distinguished = 0;

  // Indices (in base) of the hyperplanes of A' = A \ {H}, in order.
  std::vector<std::size_t> deleted_indices;
  // False when the lines of A' are all parallel.
  bool deleted_essential = true;
  // A' when essential; otherwise its essentialization as a point arrangement
  // on a transversal. Empty when A' has no hyperplanes.
  std::optional<Arrangement> deleted;

  // A'' as points on H (dimension 2 only; in dimension 1, A'' is a point).
  std::optional<Arrangement> restricted;
  // For each point of A'', the base indices of the lines through it.
  std::vector<std::vector<std::size_t>> restricted_lines;
};

// Throws ArrangementError for a bad index, or when A' is not essential and
// essential_only is set.
Triple make_triple(const Arrangement& a, std::size_t h, bool essential_only = false);

// Betti numbers of M' padded to length ell+1, and of M'' (length ell).
std::vector<long> deleted_betti(const Triple& t);
std::vector<long> restricted_betti(const Triple& t);

struct InducedCharacters {
  std::optional<CharacterSpec> deleted;     // absent when A' is empty
  std::optional<CharacterSpec> restricted;  // r''_X = prod of r_i, i through X, i != H
};

// Throws ArrangementError unless q_H = 1.
InducedCharacters induce_characters(const Triple& t, const CharacterSpec& chi);

struct AdditivityReport {
  std::vector<long> b, b_deleted, b_restricted;
  bool holds = false;  // b_k = b'_k + b''_{k-1} for every k
};

AdditivityReport betti_additivity(const Arrangement& a, std::size_t h);

struct TripleReport {
  std::vector<long> h, h_deleted, h_restricted;
  std::vector<long> b, b_deleted, b_restricted;
  bool restricted_trivial = true;
  // Per degree k = 0..ell.
  std::vector<bool> inequality;       // h^k <= h'^k + h''^{k-1}
  std::vector<bool> equality_triggered;  // h^k = b_k
  std::vector<bool> equality_holds;      // triggered => h'^k = b'_k and h''^{k-1} = b''_{k-1}
  // On a line, h'' = (0, n''-1) for a nontrivial induced character and
  // (1, n'') for the trivial one.
  bool restricted_closed_form = true;

  bool inequality_holds() const;
  bool equality_ok() const;
  bool passed() const { return inequality_holds() && equality_ok() && restricted_closed_form; }
};

// Throws ArrangementError unless q_H = 1.
TripleReport triple_inequality(const Arrangement& a, std::size_t h, const CharacterSpec& chi,
                               int flag_seed = 1);

}  // namespace arrcoh

#endif  // ARRCOH_TRIPLES_HPP_
