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

#include "arrcoh/chamber.hpp"

#include <algorithm>
#include <string>

#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

struct Polygon {
  std::vector<Point> vertices;
  SignVector sign;
};

Point primitive(const Point& d) {
  Integer lcm = 1;
  for (const Rational& c : d) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> z;
  Integer g = 0;
  for (const Rational& c : d) {
    z.push_back(Rational(c * lcm).get_num());
    g = gcd(g, z.back());
  }
  Point out;
  for (const Integer& c : z) out.emplace_back(g == 0 ? c : Integer(c / g));
  return out;
}

// Splits a convex polygon by f(x) = 0 into its f > 0 and f < 0 parts
// (Sutherland-Hodgman); either part may come back empty.
std::pair<std::vector<Point>, std::vector<Point>> clip(const std::vector<Point>& poly,
                                                       const Hyperplane& h) {
  std::vector<Point> pos, neg;
  const std::size_t n = poly.size();
  std::vector<Rational> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = h.evaluate(poly[i]);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (f[i] >= 0) pos.push_back(poly[i]);
    if (f[i] <= 0) neg.push_back(poly[i]);
    if ((f[i] > 0 && f[j] < 0) || (f[i] < 0 && f[j] > 0)) {
      const Rational t = f[i] / (f[i] - f[j]);
      Point cut{poly[i][0] + t * (poly[j][0] - poly[i][0]),
                poly[i][1] + t * (poly[j][1] - poly[i][1])};
      pos.push_back(cut);
      neg.push_back(cut);
    }
  }
  return {pos, neg};
}

bool has_sign(const std::vector<Rational>& values, int s) {
  return std::any_of(values.begin(), values.end(), [s](const Rational& v) { return sign(v) == s; });
}

Point centroid(const std::vector<Point>& pts) {
  Point c{Rational(0), Rational(0)};
  for (const Point& p : pts) {
    c[0] += p[0];
    c[1] += p[1];
  }
  const Rational k(static_cast<long>(pts.size()));
  c[0] /= k;
  c[1] /= k;
  return c;
}

std::vector<Chamber> enumerate_plane(const Arrangement& a) {
  const IntersectionPoset poset = intersection_poset(a);
  // Box strictly containing every vertex; every chamber closure of an
  // essential arrangement has a vertex, so each chamber meets the box.
  Rational lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  for (const Edge* v : poset.vertices()) {
    const Point& p = v->point;
    if (first || p[0] < lo_x) lo_x = p[0];
    if (first || p[0] > hi_x) hi_x = p[0];
    if (first || p[1] < lo_y) lo_y = p[1];
    if (first || p[1] > hi_y) hi_y = p[1];
    first = false;
  }
  lo_x -= 1;
  lo_y -= 1;
  hi_x += 1;
  hi_y += 1;

  std::vector<Polygon> cells{Polygon{{{lo_x, lo_y}, {hi_x, lo_y}, {hi_x, hi_y}, {lo_x, hi_y}}, {}}};
  for (const Hyperplane& h : a.hyperplanes()) {
    std::vector<Polygon> next;
    next.reserve(cells.size() * 2);
    for (Polygon& cell : cells) {
      std::vector<Rational> f;
      for (const Point& p : cell.vertices) f.push_back(h.evaluate(p));
      const bool pos = has_sign(f, 1);
      const bool neg = has_sign(f, -1);
      if (pos && neg) {
        auto [p_part, n_part] = clip(cell.vertices, h);
        Polygon p{std::move(p_part), cell.sign};
        Polygon q{std::move(n_part), cell.sign};
        p.sign.push_back(1);
        q.sign.push_back(-1);
        next.push_back(std::move(p));
        next.push_back(std::move(q));
      } else {
        cell.sign.push_back(pos ? 1 : -1);
        next.push_back(std::move(cell));
      }
    }
    cells = std::move(next);
  }

  std::vector<Chamber> out;
  for (const Polygon& cell : cells) {
    Chamber c;
    c.sign = cell.sign;
    c.witness = centroid(cell.vertices);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Chamber> enumerate_line(const Arrangement& a) {
  std::vector<Rational> pts;
  for (const Hyperplane& h : a.hyperplanes()) pts.push_back(make_rational(h.offset, h.normal[0]));
  std::sort(pts.begin(), pts.end());
  std::vector<Point> witnesses{{pts.front() - 1}};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    witnesses.push_back({(pts[i] + pts[i + 1]) / 2});
  }
  witnesses.push_back({pts.back() + 1});
  std::vector<Chamber> out;
  for (Point& w : witnesses) {
    Chamber c;
    c.sign = sign_at(a, w);
    c.witness = std::move(w);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

SignVector sign_at(const Arrangement& a, const Point& x) {
  SignVector s;
  s.reserve(a.size());
  for (const Hyperplane& h : a.hyperplanes()) {
    const int v = h.side(x);
    if (v == 0) throw ArrangementError("point lies on hyperplane " + std::to_string(h.index + 1));
    s.push_back(v);
  }
  return s;
}

RecessionCone recession_cone(const Arrangement& a, const SignVector& sign) {
  RecessionCone cone;
  if (a.dim() == 1) {
    // A half-line chamber is on the positive side of every point (going
    // right) or the negative side of every point (going left).
    const bool right = std::all_of(sign.begin(), sign.end(), [](int s) { return s > 0; });
    const bool left = std::all_of(sign.begin(), sign.end(), [](int s) { return s < 0; });
    if (right || left) {
      cone.kind = RecessionCone::Kind::kRay;
      cone.rays.push_back({Rational(right ? 1 : -1)});
    }
    return cone;
  }

  std::vector<Point> constraints;
  for (std::size_t i = 0; i < a.size(); ++i) {
    constraints.push_back({Rational(a[i].normal[0] * sign[i]), Rational(a[i].normal[1] * sign[i])});
  }
  auto feasible = [&](const Point& d) {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const Point& nrm) { return dot(nrm, d) >= 0; });
  };
  // Extreme rays of {d : n_i . d >= 0} lie on some boundary line n_i . d = 0.
  for (const Point& nrm : constraints) {
    for (int orient : {1, -1}) {
      Point d = primitive({-nrm[1] * orient, nrm[0] * orient});
      if (feasible(d) && std::find(cone.rays.begin(), cone.rays.end(), d) == cone.rays.end()) {
        cone.rays.push_back(std::move(d));
      }
    }
  }
  std::sort(cone.rays.begin(), cone.rays.end());
  switch (cone.rays.size()) {
    case 0:
      cone.kind = RecessionCone::Kind::kZero;
      break;
    case 1:
      cone.kind = RecessionCone::Kind::kRay;
      break;
    case 2:
      if (cone.rays[0][0] == -cone.rays[1][0] && cone.rays[0][1] == -cone.rays[1][1]) {
        throw InternalError("recession cone contains a line: arrangement is not essential");
      }
      cone.kind = RecessionCone::Kind::kSector;
      break;
    default:
      throw InternalError("recession cone with more than two extreme rays");
  }
  return cone;
}

std::vector<Chamber> enumerate_chambers(const Arrangement& a) {
  std::vector<Chamber> chambers = a.dim() == 1 ? enumerate_line(a) : enumerate_plane(a);
  for (Chamber& c : chambers) {
    if (sign_at(a, c.witness) != c.sign) {
      throw InternalError("chamber witness does not realize its sign vector");
    }
    c.recession = recession_cone(a, c.sign);
    c.bounded = c.recession.kind == RecessionCone::Kind::kZero;
  }
  std::sort(chambers.begin(), chambers.end(),
            [](const Chamber& x, const Chamber& y) { return x.sign < y.sign; });
  for (std::size_t i = 1; i < chambers.size(); ++i) {
    if (chambers[i].sign == chambers[i - 1].sign) {
      throw InternalError("two chambers share a sign vector");
    }
  }

  const std::vector<long> b = betti(a);
  long total = 0, alternating = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    total += b[k];
    alternating += (k % 2 == 0 ? 1 : -1) * b[k];
  }
  if (a.dim() % 2 == 1) alternating = -alternating;
  const long bounded = std::count_if(chambers.begin(), chambers.end(),
                                     [](const Chamber& c) { return c.bounded; });
  if (static_cast<long>(chambers.size()) != total || bounded != alternating) {
    throw InternalError("chamber count " + std::to_string(chambers.size()) + "/" +
                        std::to_string(bounded) + " bounded disagrees with Betti numbers " +
                        std::to_string(total) + "/" + std::to_string(alternating));
  }
  return chambers;
}

std::optional<std::size_t> find_chamber(const std::vector<Chamber>& chambers,
                                        const SignVector& sign) {
  auto it = std::lower_bound(chambers.begin(), chambers.end(), sign,
                             [](const Chamber& c, const SignVector& s) { return c.sign < s; });
  if (it == chambers.end() || it->sign != sign) return std::nullopt;
  return static_cast<std::size_t>(it - chambers.begin());
}

std::vector<std::size_t> separating(const Chamber& c, const Chamber& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.sign.size(); ++i) {
    if (c.sign[i] != d.sign[i]) out.push_back(i);
  }
  return out;
}

InfinitySpan infinity_span(const Arrangement& a, const Chamber& c) {
  if (c.bounded) throw ArrangementError("infinity_span of a bounded chamber");
  InfinitySpan span;
  if (a.dim() == 1 || c.recession.kind == RecessionCone::Kind::kRay) {
    span.dim = 0;
    span.direction = c.recession.rays.front();
  } else {
    span.dim = 1;
  }
  return span;
}

std::size_t opposite_chamber(const Arrangement& a, const std::vector<Chamber>& chambers,
                             const Chamber& c) {
  const InfinitySpan span = infinity_span(a, c);
  SignVector flipped = c.sign;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool contains = false;
    if (a.dim() == 2 && span.dim == 0) {
      // The closure of a line passes through the infinity point of d exactly
      // when the line is parallel to d.
      const Point& d = *span.direction;
      contains = Rational(a[i].normal[0]) * d[0] + Rational(a[i].normal[1]) * d[1] == 0;
    }
    if (!contains) flipped[i] = -flipped[i];
  }
  auto idx = find_chamber(chambers, flipped);
  if (!idx) throw InternalError("opposite sign vector is not a chamber");
  return *idx;
}

}  // namespace arrcoh
