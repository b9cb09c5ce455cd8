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

#include "arrcoh/complex.hpp"

#include <string>
#include <utility>

#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

FieldElem product_over(const std::vector<std::size_t>& indices, const CharacterSpec& chi) {
  FieldElem r = FieldElem::one(chi.field());
  for (std::size_t i : indices) r *= chi.root(i);
  return r;
}

FieldElem delta_of(const std::vector<std::size_t>& sep, const CharacterSpec& chi) {
  const FieldElem r = product_over(sep, chi);
  return r - r.inverse();
}

void require_complex(const ChamberComplex& cx) {
  for (std::size_t k = 0; k + 1 < cx.nabla.size(); ++k) {
    if (!(cx.nabla[k + 1] * cx.nabla[k]).is_zero()) {
      throw InternalError("differentials do not compose to zero at degree " +
                          std::to_string(k));
    }
  }
}

void require_length(const Arrangement& a, std::size_t n) {
  if (n != a.size()) {
    throw ArrangementError("character has " + std::to_string(n) + " entries for " +
                           std::to_string(a.size()) + " hyperplanes");
  }
}

}  // namespace

CharacterSpec::CharacterSpec(FieldDescriptor field, std::vector<FieldElem> roots)
    : field_(std::move(field)), roots_(std::move(roots)) {
  for (const FieldElem& r : roots_) {
    if (!(r.field() == field_)) throw FieldError("character root from another field");
    if (r.is_zero()) throw FieldError("character roots must be nonzero");
  }
}

CharacterSpec CharacterSpec::from_exponents(int m, const std::vector<std::int64_t>& exponents) {
  if (m < 1) throw FieldError("character order must be >= 1");
  const FieldDescriptor field = FieldDescriptor::cyclotomic(2 * m);
  std::vector<FieldElem> roots;
  for (std::int64_t e : exponents) roots.push_back(root_of_unity(field, 2 * m, e));
  return CharacterSpec(field, std::move(roots));
}

CharacterSpec CharacterSpec::from_exponents_prime(std::uint64_t p, int m,
                                                  const std::vector<std::int64_t>& exponents) {
  if (m < 1) throw FieldError("character order must be >= 1");
  const FieldDescriptor field = FieldDescriptor::prime(p);
  std::vector<FieldElem> roots;
  for (std::int64_t e : exponents) roots.push_back(root_of_unity(field, 2 * m, e));
  return CharacterSpec(field, std::move(roots));
}

CharacterSpec CharacterSpec::trivial(const FieldDescriptor& field, std::size_t n) {
  return CharacterSpec(field, std::vector<FieldElem>(n, FieldElem::one(field)));
}

FieldElem CharacterSpec::monodromy_at_infinity() const {
  FieldElem q = FieldElem::one(field_);
  for (std::size_t i = 0; i < roots_.size(); ++i) q *= monodromy(i);
  return q.inverse();
}

FieldElem CharacterSpec::root_at_infinity() const {
  FieldElem r = FieldElem::one(field_);
  for (const FieldElem& x : roots_) r *= x;
  return r.inverse();
}

bool CharacterSpec::is_trivial() const {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (!monodromy(i).is_one()) return false;
  }
  return true;
}

CharacterSpec CharacterSpec::with_root_negated(std::size_t i) const {
  CharacterSpec out = *this;
  out.roots_.at(i) = -out.roots_[i];
  return out;
}

CharacterSpec CharacterSpec::restricted(const std::vector<std::size_t>& indices) const {
  std::vector<FieldElem> roots;
  for (std::size_t i : indices) roots.push_back(roots_.at(i));
  return CharacterSpec(field_, std::move(roots));
}

FieldElem delta(const Chamber& c, const Chamber& c_prime, const CharacterSpec& chi) {
  return delta_of(separating(c, c_prime), chi);
}

std::vector<long> cohomology_dims(const std::vector<std::size_t>& dims,
                                  const std::vector<std::size_t>& ranks) {
  std::vector<long> h;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    long v = static_cast<long>(dims[k]);
    if (k < ranks.size()) v -= static_cast<long>(ranks[k]);
    if (k > 0) v -= static_cast<long>(ranks[k - 1]);
    if (v < 0) throw InternalError("negative cohomology dimension in degree " + std::to_string(k));
    h.push_back(v);
  }
  return h;
}

std::vector<std::size_t> complex_ranks(const ChamberComplex& cx) {
  std::vector<std::size_t> ranks;
  for (const ExactMatrix& m : cx.nabla) ranks.push_back(matrix_rank(m));
  return ranks;
}

ChamberModel::ChamberModel(Arrangement a, int flag_seed)
    : arrangement_(std::move(a)),
      chambers_(enumerate_chambers(arrangement_)),
      betti_(arrcoh::betti(arrangement_)),
      flag_(build_flag(arrangement_, flag_seed)),
      strata_(stratify(arrangement_, chambers_, flag_)) {
  for (std::size_t k = 0; k + 1 < strata_.strata.size(); ++k) {
    const auto& from = strata_.strata[k];
    const auto& to = strata_.strata[k + 1];
    Table t;
    t.rows = to.size();
    t.cols = from.size();
    for (std::size_t row = 0; row < t.rows; ++row) {
      for (std::size_t col = 0; col < t.cols; ++col) {
        t.degree.push_back(degree(arrangement_, flag_, strata_, chambers_, from[col], to[row]));
        t.sep.push_back(separating(chambers_[from[col]], chambers_[to[row]]));
      }
    }
    tables_.push_back(std::move(t));
  }
}

ChamberComplex ChamberModel::complex(const CharacterSpec& chi) const {
  require_length(arrangement_, chi.size());
  ChamberComplex cx;
  for (const Table& t : tables_) {
    ExactMatrix m(chi.field(), t.rows, t.cols);
    for (std::size_t row = 0; row < t.rows; ++row) {
      for (std::size_t col = 0; col < t.cols; ++col) {
        const int d = t.degree[row * t.cols + col];
        if (d == 0) continue;
        m(row, col) = FieldElem::from_integer(chi.field(), d) *
                      delta_of(t.sep[row * t.cols + col], chi);
      }
    }
    cx.nabla.push_back(std::move(m));
  }
  require_complex(cx);
  return cx;
}

ChamberComplex ChamberModel::linearized(const std::vector<FieldElem>& w) const {
  require_length(arrangement_, w.size());
  if (w.empty()) throw ArrangementError("empty weight vector");
  const FieldDescriptor& field = w.front().field();
  ChamberComplex cx;
  for (const Table& t : tables_) {
    ExactMatrix m(field, t.rows, t.cols);
    for (std::size_t row = 0; row < t.rows; ++row) {
      for (std::size_t col = 0; col < t.cols; ++col) {
        const int d = t.degree[row * t.cols + col];
        if (d == 0) continue;
        FieldElem sum = FieldElem::zero(field);
        for (std::size_t i : t.sep[row * t.cols + col]) sum += w[i];
        m(row, col) = FieldElem::from_integer(field, d) * sum;
      }
    }
    cx.nabla.push_back(std::move(m));
  }
  require_complex(cx);
  return cx;
}

CohomologyReport ChamberModel::cohomology(const CharacterSpec& chi) const {
  const ChamberComplex cx = complex(chi);
  std::vector<std::size_t> dims;
  for (const auto& stratum : strata_.strata) dims.push_back(stratum.size());
  CohomologyReport report{{}, betti_, complex_ranks(cx), {}, chi, flag_.seed};
  report.h = cohomology_dims(dims, report.ranks);
  for (const ExactMatrix& m : cx.nabla) report.nabla_nonzero.push_back(!m.is_zero());
  for (std::size_t k = 0; k < report.h.size(); ++k) {
    if (report.h[k] > betti_[k]) throw InternalError("h^k exceeds b_k");
  }
  return report;
}

ChamberComplex build_complex(const Arrangement& a, const std::vector<Chamber>& chambers,
                             const Flag& f, const Stratification& s, const CharacterSpec& chi) {
  require_length(a, chi.size());
  ChamberComplex cx;
  for (std::size_t k = 0; k + 1 < s.strata.size(); ++k) {
    const auto& from = s.strata[k];
    const auto& to = s.strata[k + 1];
    ExactMatrix m(chi.field(), to.size(), from.size());
    for (std::size_t row = 0; row < to.size(); ++row) {
      for (std::size_t col = 0; col < from.size(); ++col) {
        const int d = degree(a, f, s, chambers, from[col], to[row]);
        if (d == 0) continue;
        m(row, col) = FieldElem::from_integer(chi.field(), d) *
                      delta(chambers[from[col]], chambers[to[row]], chi);
      }
    }
    cx.nabla.push_back(std::move(m));
  }
  require_complex(cx);
  return cx;
}

ChamberComplex linearized_complex(const Arrangement& a, const std::vector<Chamber>& chambers,
                                  const Flag& f, const Stratification& s,
                                  const std::vector<FieldElem>& w) {
  require_length(a, w.size());
  const FieldDescriptor& field = w.front().field();
  ChamberComplex cx;
  for (std::size_t k = 0; k + 1 < s.strata.size(); ++k) {
    const auto& from = s.strata[k];
    const auto& to = s.strata[k + 1];
    ExactMatrix m(field, to.size(), from.size());
    for (std::size_t row = 0; row < to.size(); ++row) {
      for (std::size_t col = 0; col < from.size(); ++col) {
        const int d = degree(a, f, s, chambers, from[col], to[row]);
        if (d == 0) continue;
        FieldElem sum = FieldElem::zero(field);
        for (std::size_t i : separating(chambers[from[col]], chambers[to[row]])) sum += w[i];
        m(row, col) = FieldElem::from_integer(field, d) * sum;
      }
    }
    cx.nabla.push_back(std::move(m));
  }
  require_complex(cx);
  return cx;
}

CohomologyReport local_cohomology(const Arrangement& a, const CharacterSpec& chi, int flag_seed) {
  require_length(a, chi.size());
  return ChamberModel(a, flag_seed).cohomology(chi);
}

}  // namespace arrcoh
