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

#include "arrcoh/flag.hpp"

#include <algorithm>
#include <string>

#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InternalError(std::string("flag invariant violated: ") + what);
}

Rational half_min_gap(const Flag& f) {
  Rational gap = 1;
  for (std::size_t i = 0; i + 1 < f.crossings.size(); ++i) {
    const Rational d = f.crossings[i + 1].parameter - f.crossings[i].parameter;
    if (i == 0 || d < gap) gap = d;
  }
  return gap / 2;
}

}  // namespace

Point Flag::at(const Rational& s) const {
  Point p = origin;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += s * direction[i];
  return p;
}

Flag build_flag(const Arrangement& a, int seed) {
  Flag f;
  f.seed = seed;
  f.ambient_dim = a.dim();
  if (a.dim() == 1) {
    f.origin = {Rational(0)};
    f.direction = {Rational(1)};
    for (const Hyperplane& h : a.hyperplanes()) {
      f.crossings.push_back({make_rational(h.offset, h.normal[0]), h.index});
    }
  } else {
    const IntersectionPoset poset = intersection_poset(a);
    for (long t = seed;; ++t) {
      const bool parallel = std::any_of(a.hyperplanes().begin(), a.hyperplanes().end(),
                                        [t](const Hyperplane& h) {
                                          return h.normal[1] == h.normal[0] * t;
                                        });
      if (!parallel) {
        f.normal = {Rational(1), Rational(t)};
        f.direction = {Rational(-t), Rational(1)};
        break;
      }
    }
    bool first = true;
    for (const Edge* v : poset.vertices()) {
      const Rational proj = dot(f.normal, v->point);
      if (first || proj > f.level) f.level = proj;
      first = false;
    }
    f.level += 1;
    f.origin = {f.level, Rational(0)};
    for (const Hyperplane& h : a.hyperplanes()) {
      const Rational along = Rational(h.normal[0]) * f.direction[0] +
                             Rational(h.normal[1]) * f.direction[1];
      f.crossings.push_back({-h.evaluate(f.origin) / along, h.index});
    }
  }
  std::sort(f.crossings.begin(), f.crossings.end(),
            [](const Crossing& x, const Crossing& y) { return x.parameter < y.parameter; });
  f.basepoint = f.crossings.back().parameter + 1;
  f.ball_lo = f.crossings.front().parameter - 1;
  f.ball_hi = f.crossings.back().parameter + 1;
  verify_flag(a, f);
  return f;
}

void verify_flag(const Arrangement& a, const Flag& f) {
  require(f.crossings.size() == a.size(), "one crossing per hyperplane");
  for (std::size_t i = 0; i + 1 < f.crossings.size(); ++i) {
    require(f.crossings[i].parameter < f.crossings[i + 1].parameter,
            "crossing parameters strictly increasing");
  }
  for (const Crossing& c : f.crossings) {
    require(a[c.hyperplane].evaluate(f.at(c.parameter)) == 0, "crossing lies on its hyperplane");
    require(c.parameter < f.basepoint, "F^0 beyond every crossing");
    require(f.ball_lo < c.parameter && c.parameter < f.ball_hi, "crossings inside the ball");
  }
  if (a.dim() == 1) return;
  for (const Hyperplane& h : a.hyperplanes()) {
    require(Rational(h.normal[0]) * f.direction[0] + Rational(h.normal[1]) * f.direction[1] != 0,
            "F^1 parallel to no line");
  }
  require(dot(f.normal, f.origin) == f.level && dot(f.normal, f.direction) == 0,
          "parameterization lies on F^1");
  const IntersectionPoset poset = intersection_poset(a);
  for (const Edge* v : poset.vertices()) {
    require(dot(f.normal, v->point) < f.level, "all vertices strictly on one side of F^1");
  }
}

std::size_t Stratification::bounded_count(std::size_t k) const {
  return static_cast<std::size_t>(std::count(bounded[k].begin(), bounded[k].end(), true));
}

std::size_t Stratification::unbounded_count(std::size_t k) const {
  return bounded[k].size() - bounded_count(k);
}

Stratification stratify(const Arrangement& a, const std::vector<Chamber>& chambers,
                        const Flag& f) {
  const auto ell = static_cast<std::size_t>(a.dim());
  Stratification s;
  s.strata.resize(ell + 1);
  s.bounded.resize(ell + 1);
  s.level.assign(chambers.size(), -1);
  s.position.assign(chambers.size(), 0);

  auto place = [&](std::size_t k, std::size_t c, bool bounded) {
    if (s.level[c] != -1) throw InternalError("chamber assigned to two strata");
    s.level[c] = static_cast<int>(k);
    s.position[c] = s.strata[k].size();
    s.strata[k].push_back(c);
    s.bounded[k].push_back(bounded);
  };
  auto chamber_at = [&](const Rational& param) {
    auto idx = find_chamber(chambers, sign_at(a, f.at(param)));
    if (!idx) throw InternalError("flag point in no enumerated chamber");
    return *idx;
  };

  place(0, chamber_at(f.basepoint), true);

  // Walk F^1 upwards: the open intervals below the last crossing.
  const auto& x = f.crossings;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const bool first = j == 0;
    const Rational lo = first ? f.ball_lo : x[j - 1].parameter;
    const Rational hi = x[j].parameter;
    const Rational probe = first ? Rational(hi - 1) : Rational((lo + hi) / 2);
    const std::size_t c = chamber_at(probe);
    if (ell == 1) {
      place(1, c, chambers[c].bounded);
    } else {
      place(1, c, !first);
      FlagInterval iv{lo, hi, std::nullopt, x[j].hyperplane};
      if (!first) iv.lower_wall = x[j - 1].hyperplane;
      s.intervals.push_back(iv);
    }
  }
  if (ell == 2) {
    for (std::size_t c = 0; c < chambers.size(); ++c) {
      if (s.level[c] == -1) place(2, c, chambers[c].bounded);
    }
  }

  const std::vector<long> b = betti(a);
  for (std::size_t k = 0; k <= ell; ++k) {
    if (static_cast<long>(s.strata[k].size()) != b[k]) {
      throw InternalError("stratum " + std::to_string(k) + " has " +
                          std::to_string(s.strata[k].size()) + " chambers, expected b_" +
                          std::to_string(k) + " = " + std::to_string(b[k]));
    }
    if (k < ell && s.bounded_count(k) != s.unbounded_count(k + 1)) {
      throw InternalError("#bch^" + std::to_string(k) + " != #uch^" + std::to_string(k + 1));
    }
  }
  const auto all_bounded = static_cast<std::size_t>(std::count_if(
      chambers.begin(), chambers.end(), [](const Chamber& c) { return c.bounded; }));
  if (s.bounded_count(ell) != all_bounded) {
    throw InternalError("top stratum does not hold every bounded chamber");
  }
  return s;
}

int degree(const Arrangement& a, const Flag& f, const Stratification& s,
           const std::vector<Chamber>& chambers, std::size_t c, std::size_t c_prime) {
  if (c >= chambers.size() || c_prime >= chambers.size()) {
    throw ArrangementError("degree: chamber index out of range");
  }
  const int k = s.level[c];
  if (k < 0 || k >= a.dim() || s.level[c_prime] != k + 1) {
    throw ArrangementError("degree: chambers are not in consecutive strata ch^k x ch^(k+1)");
  }
  if (k == 0) return 1;

  const FlagInterval& iv = s.intervals[s.position[c]];
  const Rational offset = half_min_gap(f);
  const SignVector& target = chambers[c_prime].sign;
  // +1 when the field at a wall points up the flag parameter.
  auto wall_direction = [&](std::size_t wall, const Rational& param) {
    const int above = a[wall].side(f.at(param + offset));
    return target[wall] == above ? 1 : -1;
  };
  const int lower = iv.lower_wall ? wall_direction(*iv.lower_wall, iv.lo) : 1;
  const int upper = iv.upper_wall ? wall_direction(*iv.upper_wall, iv.hi) : -1;
  return (upper - lower) / 2;
}

}  // namespace arrcoh
