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

#include "arrcoh/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

std::string describe(const Hyperplane& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.normal.size(); ++i) {
    if (i) s += ", ";
    s += h.normal[i].get_str();
  }
  return s + " | " + h.offset.get_str() + ")";
}

// Intersection of two non-parallel lines by Cramer's rule.
Point intersect(const Hyperplane& g, const Hyperplane& h) {
  const Integer det = g.normal[0] * h.normal[1] - g.normal[1] * h.normal[0];
  const Integer x = g.offset * h.normal[1] - g.normal[1] * h.offset;
  const Integer y = g.normal[0] * h.offset - g.offset * h.normal[0];
  return {make_rational(x, det), make_rational(y, det)};
}

}  // namespace

Rational Hyperplane::evaluate(const Point& x) const {
  Rational s = -Rational(offset);
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * x[i];
  return s;
}

Hyperplane normalize_hyperplane(const HyperplaneEquation& eq) {
  Integer lcm = 1;
  for (const Rational& c : eq.normal) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), eq.offset.get_den_mpz_t());

  Hyperplane h;
  for (const Rational& c : eq.normal) {
    const Rational scaled = c * lcm;
    h.normal.push_back(scaled.get_num());
  }
  h.offset = Rational(eq.offset * lcm).get_num();
  if (std::all_of(h.normal.begin(), h.normal.end(), [](const Integer& z) { return z == 0; })) {
    throw ArrangementError("hyperplane with zero normal vector");
  }
  Integer g = abs(h.offset);
  for (const Integer& c : h.normal) g = gcd(g, c);
  const int lead =
      sign(*std::find_if(h.normal.begin(), h.normal.end(), [](const Integer& z) { return z != 0; }));
  if (lead < 0) g = -g;
  for (Integer& c : h.normal) c /= g;
  h.offset /= g;
  return h;
}

Arrangement normalize_arrangement(int dim, const std::vector<HyperplaneEquation>& raw) {
  if (dim != 1 && dim != 2) {
    throw ArrangementError("ambient dimension must be 1 or 2, got " + std::to_string(dim));
  }
  Arrangement a;
  a.dim_ = dim;
  for (const HyperplaneEquation& eq : raw) {
    if (eq.normal.size() != static_cast<std::size_t>(dim)) {
      throw ArrangementError("equation has " + std::to_string(eq.normal.size()) +
                             " normal coordinates in dimension " + std::to_string(dim));
    }
    Hyperplane h = normalize_hyperplane(eq);
    h.index = a.hyperplanes_.size();
    for (const Hyperplane& prior : a.hyperplanes_) {
      if (prior == h) {
        throw ArrangementError("duplicate hyperplane " + describe(h) + " (entries " +
                               std::to_string(prior.index + 1) + " and " +
                               std::to_string(h.index + 1) + ")");
      }
    }
    a.hyperplanes_.push_back(std::move(h));
  }
  if (a.hyperplanes_.empty()) throw ArrangementError("non-essential arrangement: no hyperplanes");

  if (dim == 2) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      bool placed = false;
      for (auto& cls : a.infinity_points_) {
        if (a.parallel(cls.front(), i)) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) a.infinity_points_.push_back({i});
    }
    if (a.infinity_points_.size() < 2) {
      throw ArrangementError("non-essential arrangement: all lines are parallel");
    }
  }
  return a;
}

bool Arrangement::parallel(std::size_t i, std::size_t j) const {
  if (dim_ == 1) return true;
  const auto& a = hyperplanes_[i].normal;
  const auto& b = hyperplanes_[j].normal;
  return a[0] * b[1] - a[1] * b[0] == 0;
}

bool Arrangement::is_central() const {
  if (dim_ == 1) return size() == 1;
  const IntersectionPoset poset = intersection_poset(*this);
  const auto vertices = poset.vertices();
  return vertices.size() == 1 && vertices.front()->hyperplanes.size() == size();
}

std::vector<HyperplaneEquation> Arrangement::equations() const {
  std::vector<HyperplaneEquation> out;
  for (const Hyperplane& h : hyperplanes_) {
    HyperplaneEquation eq;
    for (const Integer& c : h.normal) eq.normal.emplace_back(c);
    eq.offset = h.offset;
    out.push_back(std::move(eq));
  }
  return out;
}

std::vector<const Edge*> IntersectionPoset::vertices() const {
  std::vector<const Edge*> out;
  for (const Edge& e : edges) {
    if (e.dim == 0) out.push_back(&e);
  }
  return out;
}

IntersectionPoset intersection_poset(const Arrangement& a) {
  IntersectionPoset poset;
  poset.ambient_dim = a.dim();
  poset.edges.push_back(Edge{a.dim(), {}, {}, 1});
  for (const Hyperplane& h : a.hyperplanes()) {
    Edge e{a.dim() - 1, {}, {h.index}, -1};
    if (a.dim() == 1) e.point = {make_rational(h.offset, h.normal[0])};
    poset.edges.push_back(std::move(e));
  }
  if (a.dim() == 1) {
    std::sort(poset.edges.begin() + 1, poset.edges.end(),
              [](const Edge& x, const Edge& y) { return x.point < y.point; });
    return poset;
  }

  std::map<Point, std::set<std::size_t>> points;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a.parallel(i, j)) continue;
      auto& members = points[intersect(a[i], a[j])];
      members.insert(i);
      members.insert(j);
    }
  }
  for (const auto& [p, members] : points) {
    Edge e{0, p, {members.begin(), members.end()}, 0};
    e.mobius = static_cast<long>(members.size()) - 1;
    poset.edges.push_back(std::move(e));
  }
  return poset;
}

std::vector<long> betti(const IntersectionPoset& poset) {
  std::vector<long> b(static_cast<std::size_t>(poset.ambient_dim) + 1, 0);
  for (const Edge& e : poset.edges) {
    b[static_cast<std::size_t>(poset.ambient_dim - e.dim)] += std::labs(e.mobius);
  }
  return b;
}

std::vector<long> betti(const Arrangement& a) { return betti(intersection_poset(a)); }

Localization localize(const Arrangement& a, const Point& x) {
  if (x.size() != static_cast<std::size_t>(a.dim())) {
    throw ArrangementError("localization point has the wrong dimension");
  }
  const IntersectionPoset poset = intersection_poset(a);
  const Edge* found = nullptr;
  for (const Edge& e : poset.edges) {
    if (e.dim == 0 && e.point == x) found = &e;
  }
  if (found == nullptr) throw ArrangementError("localization point is not a vertex");
  std::vector<HyperplaneEquation> eqs;
  const auto all = a.equations();
  for (std::size_t i : found->hyperplanes) eqs.push_back(all[i]);
  return Localization{normalize_arrangement(a.dim(), eqs), found->hyperplanes};
}

}  // namespace arrcoh
