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

#include "arrcoh/aomoto.hpp"

#include <algorithm>

#include "arrcoh/complex.hpp"
#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

std::string describe(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w.entries[i].to_string();
  }
  return s + ")";
}

void check_one(const OSAlgebra& os, const WeightVector& w, CupCheckReport& report) {
  if (w.is_zero()) return;
  ++report.checked;
  for (int k = 1; k <= os.ambient_dim(); ++k) {
    if (cup_matrix(os, w, k - 1).is_zero()) {
      report.violations.push_back("w=" + describe(w) + " k=" + std::to_string(k));
    }
  }
}

}  // namespace

FieldElem WeightVector::total() const {
  FieldElem s = FieldElem::zero(field());
  for (const FieldElem& x : entries) s += x;
  return s;
}

bool WeightVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const FieldElem& x) { return x.is_zero(); });
}

WeightVector WeightVector::from_integers(const FieldDescriptor& field, const std::vector<long>& w) {
  WeightVector out;
  for (long x : w) out.entries.push_back(FieldElem::from_integer(field, x));
  return out;
}

OSAlgebra::OSAlgebra(const Arrangement& a) : dim_(a.dim()), n_(a.size()), lead_(n_ * n_, n_) {
  if (dim_ == 1) return;
  const IntersectionPoset poset = intersection_poset(a);
  for (const Edge* v : poset.vertices()) {
    const auto& lines = v->hyperplanes;  // sorted ascending
    const std::size_t i1 = lines.front();
    for (std::size_t j = 1; j < lines.size(); ++j) {
      basis_index_[{i1, lines[j]}] = basis_.size();
      basis_.emplace_back(i1, lines[j]);
    }
    for (std::size_t x = 0; x < lines.size(); ++x) {
      for (std::size_t y = x + 1; y < lines.size(); ++y) lead_[lines[x] * n_ + lines[y]] = i1;
    }
  }
}

std::vector<std::size_t> OSAlgebra::dims() const {
  if (dim_ == 1) return {1, n_};
  return {1, n_, basis_.size()};
}

std::vector<std::pair<std::size_t, int>> OSAlgebra::product(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_) throw ArrangementError("OS generator index out of range");
  if (a == b || dim_ == 1) return {};
  int sign = 1;
  if (a > b) {
    std::swap(a, b);
    sign = -1;
  }
  const std::size_t i1 = lead_[a * n_ + b];
  if (i1 == n_) return {};
  if (a == i1) return {{basis_index_.at({i1, b}), sign}};
  std::vector<std::pair<std::size_t, int>> out{{basis_index_.at({i1, b}), sign},
                                               {basis_index_.at({i1, a}), -sign}};
  std::sort(out.begin(), out.end());
  return out;
}

OSAlgebra build_os(const Arrangement& a) { return OSAlgebra(a); }

ExactMatrix cup_matrix(const OSAlgebra& os, const WeightVector& w, int k) {
  if (w.size() != os.size()) throw ArrangementError("weight vector length mismatch");
  const FieldDescriptor& field = w.field();
  const auto dims = os.dims();
  if (k == 0) {
    ExactMatrix m(field, os.size(), 1);
    for (std::size_t i = 0; i < os.size(); ++i) m(i, 0) = w.entries[i];
    return m;
  }
  if (k != 1) throw ArrangementError("cup_matrix degree must be 0 or 1");
  const std::size_t rows = dims.size() > 2 ? dims[2] : 0;
  ExactMatrix m(field, rows, os.size());
  for (std::size_t j = 0; j < os.size(); ++j) {
    for (std::size_t i = 0; i < os.size(); ++i) {
      if (w.entries[i].is_zero()) continue;
      for (const auto& [row, coeff] : os.product(i, j)) {
        m(row, j) += FieldElem::from_integer(field, coeff) * w.entries[i];
      }
    }
  }
  return m;
}

std::vector<std::size_t> cup_ranks(const OSAlgebra& os, const WeightVector& w) {
  std::vector<std::size_t> ranks;
  for (int k = 0; k < os.ambient_dim(); ++k) ranks.push_back(matrix_rank(cup_matrix(os, w, k)));
  return ranks;
}

std::vector<long> aomoto_betti(const Arrangement& a, const WeightVector& w) {
  const OSAlgebra os(a);
  return cohomology_dims(os.dims(), cup_ranks(os, w));
}

CupCheckReport check_cup_nonzero(const Arrangement& a, const FieldDescriptor& field,
                                 std::size_t exhaustive_bound) {
  if (!field.is_finite()) throw FieldError("exhaustive cup check needs a finite field");
  const std::uint64_t p = field.parameter();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total *= p;
    if (total > exhaustive_bound) {
      throw FieldError("F_" + std::to_string(p) + "^" + std::to_string(a.size()) +
                       " exceeds the exhaustive bound");
    }
  }
  const OSAlgebra os(a);
  CupCheckReport report;
  std::vector<long> digits(a.size(), 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = a.size(); i-- > 0;) {
      digits[i] = static_cast<long>(c % p);
      c /= p;
    }
    check_one(os, WeightVector::from_integers(field, digits), report);
  }
  return report;
}

CupCheckReport check_cup_nonzero(const Arrangement& a, const std::vector<WeightVector>& samples) {
  const OSAlgebra os(a);
  CupCheckReport report;
  for (const WeightVector& w : samples) check_one(os, w, report);
  return report;
}

}  // namespace arrcoh
