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

#include "arrcoh/triples.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

std::vector<long> padded(std::vector<long> v, std::size_t length) {
  v.resize(length, 0);
  return v;
}

long at_or_zero(const std::vector<long>& v, long k) {
  return k >= 0 && static_cast<std::size_t>(k) < v.size() ? v[k] : 0;
}

// Points a.x = c of parallel lines, as coordinates along the shared normal
// of the first one.
Arrangement essentialize(const Arrangement& a, const std::vector<std::size_t>& lines) {
  const Hyperplane& first = a[lines.front()];
  const std::size_t j = first.normal[0] != 0 ? 0 : 1;
  std::vector<HyperplaneEquation> eqs;
  for (std::size_t i : lines) {
    const Rational scale = make_rational(a[i].normal[j], first.normal[j]);
    eqs.push_back({{Rational(1)}, Rational(a[i].offset) / scale});
  }
  return normalize_arrangement(1, eqs);
}

}  // namespace

Triple make_triple(const Arrangement& a, std::size_t h, bool essential_only) {
  if (h >= a.size()) {
    throw ArrangementError("distinguished hyperplane " + std::to_string(h + 1) +
                           " out of range 1.." + std::to_string(a.size()));
  }
  Triple t{a, h, {}, true, std::nullopt, std::nullopt, {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != h) t.deleted_indices.push_back(i);
  }

  if (!t.deleted_indices.empty()) {
    const std::vector<HyperplaneEquation> all = a.equations();
    std::vector<HyperplaneEquation> eqs;
    for (std::size_t i : t.deleted_indices) eqs.push_back(all[i]);
    bool all_parallel = a.dim() == 2;
    for (std::size_t i : t.deleted_indices) {
      if (!a.parallel(t.deleted_indices.front(), i)) all_parallel = false;
    }
    if (all_parallel) {
      if (essential_only) throw ArrangementError("deleted arrangement is not essential");
      t.deleted_essential = false;
      t.deleted = essentialize(a, t.deleted_indices);
    } else {
      t.deleted = normalize_arrangement(a.dim(), eqs);
    }
  }

  if (a.dim() == 2) {
    const Hyperplane& H = a[h];
    const Point p0 = H.normal[0] != 0
                         ? Point{make_rational(H.offset, H.normal[0]), Rational(0)}
                         : Point{Rational(0), make_rational(H.offset, H.normal[1])};
    const Point v{Rational(-H.normal[1]), Rational(H.normal[0])};
    std::map<Rational, std::vector<std::size_t>> points;
    for (std::size_t i : t.deleted_indices) {
      const Rational along = Rational(a[i].normal[0]) * v[0] + Rational(a[i].normal[1]) * v[1];
      if (along == 0) continue;
      points[-a[i].evaluate(p0) / along].push_back(i);
    }
    std::vector<HyperplaneEquation> eqs;
    for (auto& [param, lines] : points) {
      eqs.push_back({{Rational(1)}, param});
      t.restricted_lines.push_back(std::move(lines));
    }
    t.restricted = normalize_arrangement(1, eqs);
  }
  return t;
}

std::vector<long> deleted_betti(const Triple& t) {
  const std::size_t length = static_cast<std::size_t>(t.base.dim()) + 1;
  if (!t.deleted) return padded({1}, length);
  return padded(betti(*t.deleted), length);
}

std::vector<long> restricted_betti(const Triple& t) {
  if (!t.restricted) return {1};
  return betti(*t.restricted);
}

InducedCharacters induce_characters(const Triple& t, const CharacterSpec& chi) {
  if (chi.size() != t.base.size()) {
    throw ArrangementError("character length does not match the arrangement");
  }
  if (!chi.monodromy(t.distinguished).is_one()) {
    throw ArrangementError("monodromy around the distinguished hyperplane is not trivial");
  }
  InducedCharacters out;
  if (t.deleted) out.deleted = chi.restricted(t.deleted_indices);
  if (t.restricted) {
    std::vector<FieldElem> roots;
    for (const auto& lines : t.restricted_lines) {
      FieldElem r = FieldElem::one(chi.field());
      for (std::size_t i : lines) r *= chi.root(i);
      roots.push_back(r);
    }
    out.restricted = CharacterSpec(chi.field(), std::move(roots));
  }
  return out;
}

AdditivityReport betti_additivity(const Arrangement& a, std::size_t h) {
  const Triple t = make_triple(a, h);
  AdditivityReport r{betti(a), deleted_betti(t), restricted_betti(t), true};
  for (std::size_t k = 0; k < r.b.size(); ++k) {
    const long rhs = r.b_deleted[k] + at_or_zero(r.b_restricted, static_cast<long>(k) - 1);
    if (r.b[k] != rhs) r.holds = false;
  }
  return r;
}

bool TripleReport::inequality_holds() const {
  return std::all_of(inequality.begin(), inequality.end(), [](bool b) { return b; });
}

bool TripleReport::equality_ok() const {
  return std::all_of(equality_holds.begin(), equality_holds.end(), [](bool b) { return b; });
}

TripleReport triple_inequality(const Arrangement& a, std::size_t h, const CharacterSpec& chi,
                               int flag_seed) {
  const Triple t = make_triple(a, h);
  const InducedCharacters induced = induce_characters(t, chi);
  const std::size_t length = static_cast<std::size_t>(a.dim()) + 1;

  TripleReport r;
  r.b = betti(a);
  r.b_deleted = deleted_betti(t);
  r.b_restricted = restricted_betti(t);
  r.h = local_cohomology(a, chi, flag_seed).h;
  r.h_deleted = t.deleted ? padded(local_cohomology(*t.deleted, *induced.deleted, flag_seed).h,
                                   length)
                          : padded({1}, length);
  if (t.restricted) {
    r.h_restricted = local_cohomology(*t.restricted, *induced.restricted, flag_seed).h;
    r.restricted_trivial = induced.restricted->is_trivial();
    const long n2 = static_cast<long>(t.restricted->size());
    const std::vector<long> expected =
        r.restricted_trivial ? std::vector<long>{1, n2} : std::vector<long>{0, n2 - 1};
    r.restricted_closed_form = r.h_restricted == expected;
  } else {
    r.h_restricted = {1};
  }

  for (std::size_t k = 0; k < length; ++k) {
    const long km1 = static_cast<long>(k) - 1;
    r.inequality.push_back(r.h[k] <= r.h_deleted[k] + at_or_zero(r.h_restricted, km1));
    const bool triggered = r.h[k] == r.b[k];
    r.equality_triggered.push_back(triggered);
    r.equality_holds.push_back(!triggered ||
                            (r.h_deleted[k] == r.b_deleted[k] &&
                             at_or_zero(r.h_restricted, km1) == at_or_zero(r.b_restricted, km1)));
  }
  return r;
}

}  // namespace arrcoh
