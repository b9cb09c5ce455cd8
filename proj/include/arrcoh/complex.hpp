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

#ifndef ARRCOH_COMPLEX_HPP_
#define ARRCOH_COMPLEX_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arrcoh/arrangement.hpp"
#include "arrcoh/chamber.hpp"
#include "arrcoh/field.hpp"
#include "arrcoh/flag.hpp"
#include "arrcoh/matrix.hpp"

namespace arrcoh {

// Rank-one local system given by chosen square roots r_i of the monodromies
// q_i = r_i^2.
class CharacterSpec {
 public:
  // Throws FieldError on a zero root or a root from another field.
  CharacterSpec(FieldDescriptor field, std::vector<FieldElem> roots);

  // q_i = zeta_m^{a_i} realized in Q(zeta_{2m}) with r_i = zeta_{2m}^{a_i}.
  static CharacterSpec from_exponents(int m, const std::vector<std::int64_t>& exponents);
  // Same character in F_p, using the deterministic 2m-th root of unity;
  // requires 2m | p - 1.
  static CharacterSpec from_exponents_prime(std::uint64_t p, int m,
                                            const std::vector<std::int64_t>& exponents);
  static CharacterSpec trivial(const FieldDescriptor& field, std::size_t n);

  const FieldDescriptor& field() const { return field_; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<FieldElem>& roots() const { return roots_; }
  const FieldElem& root(std::size_t i) const { return roots_[i]; }
  FieldElem monodromy(std::size_t i) const { return roots_[i] * roots_[i]; }
  // q_inf = (q_1 ... q_n)^{-1} and r_inf = (r_1 ... r_n)^{-1}.
  FieldElem monodromy_at_infinity() const;
  FieldElem root_at_infinity() const;
  // Every q_i = 1, i.e. the constant sheaf.
  bool is_trivial() const;

  CharacterSpec with_root_negated(std::size_t i) const;
  CharacterSpec restricted(const std::vector<std::size_t>& indices) const;

 private:
  FieldDescriptor field_;
  std::vector<FieldElem> roots_;
};

// Delta(C, C') = R - R^{-1} with R the product of r_i over Sep(C, C').
FieldElem delta(const Chamber& c, const Chamber& c_prime, const CharacterSpec& chi);

// nabla[k] maps K[ch^k] -> K[ch^{k+1}]: |ch^{k+1}| x |ch^k|, with rows and
// columns in stratum order.
struct ChamberComplex {
  std::vector<ExactMatrix> nabla;
};

// Entry (C', C) = deg(C, C') * Delta(C, C'). InternalError unless the
// composite of consecutive differentials vanishes.
ChamberComplex build_complex(const Arrangement& a, const std::vector<Chamber>& chambers,
                             const Flag& f, const Stratification& s, const CharacterSpec& chi);

// Entry (C', C) = deg(C, C') * sum of w_i over Sep(C, C').
ChamberComplex linearized_complex(const Arrangement& a, const std::vector<Chamber>& chambers,
                                  const Flag& f, const Stratification& s,
                                  const std::vector<FieldElem>& w);

// h^k = dim_k - rank nabla_k - rank nabla_{k-1}.
std::vector<long> cohomology_dims(const std::vector<std::size_t>& dims,
                                  const std::vector<std::size_t>& ranks);

struct CohomologyReport {
  std::vector<long> h;
  std::vector<long> betti;
  std::vector<std::size_t> ranks;  // rank of nabla_k
  std::vector<bool> nabla_nonzero;
  CharacterSpec character;
  int flag_seed = 1;
};

// Everything about an arrangement that does not depend on the character:
// chambers, flag, strata, and the degree/separation tables of each
// differential.
class ChamberModel {
 public:
  explicit ChamberModel(Arrangement a, int flag_seed = 1);

  const Arrangement& arrangement() const { return arrangement_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  const std::vector<long>& betti() const { return betti_; }
  const Flag& flag() const { return flag_; }
  const Stratification& strata() const { return strata_; }

  // deg(C, C') for C = strata[k][col], C' = strata[k+1][row].
  int degree_at(std::size_t k, std::size_t row, std::size_t col) const {
    return tables_[k].degree[row * tables_[k].cols + col];
  }
  const std::vector<std::size_t>& sep_at(std::size_t k, std::size_t row, std::size_t col) const {
    return tables_[k].sep[row * tables_[k].cols + col];
  }

  ChamberComplex complex(const CharacterSpec& chi) const;
  ChamberComplex linearized(const std::vector<FieldElem>& w) const;
  CohomologyReport cohomology(const CharacterSpec& chi) const;

 private:
  struct Table {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<int> degree;
    std::vector<std::vector<std::size_t>> sep;
  };

  Arrangement arrangement_;
  std::vector<Chamber> chambers_;
  std::vector<long> betti_;
  Flag flag_;
  Stratification strata_;
  std::vector<Table> tables_;
};

// Twisted cohomology dimensions via the chamber complex for the flag built
// from `flag_seed`. ArrangementError if the character length does not match.
CohomologyReport local_cohomology(const Arrangement& a, const CharacterSpec& chi,
                                  int flag_seed = 1);

// Rank of every differential.
std::vector<std::size_t> complex_ranks(const ChamberComplex& cx);

}  // namespace arrcoh

#endif  // ARRCOH_COMPLEX_HPP_
