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

#include "oracles/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {
namespace {

std::vector<Integer> x_power_minus_one(int d) {
  std::vector<Integer> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[d] = 1;
  return p;
}

// Exact quotient of integer polynomials; throws if the remainder is nonzero.
std::vector<Integer> poly_div(std::vector<Integer> num, const std::vector<Integer>& den) {
  std::vector<Integer> q(num.size() - den.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = num[k + den.size() - 1];
    if (top % den.back() != 0) throw std::logic_error("inexact division");
    q[k] = top / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
  }
  for (const Integer& r : num) {
    if (r != 0) throw std::logic_error("nonzero remainder");
  }
  return q;
}

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Rational eval(const Line& l, const Rational& x, const Rational& y) {
  return Rational(l.a) * x + Rational(l.b) * y - Rational(l.c);
}

}  // namespace

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Integer> cyclotomic(int m) {
  std::vector<Integer> num{1};
  std::vector<Integer> den{1};
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    const int mu = mobius(m / d);
    if (mu == 1) num = poly_mul(num, x_power_minus_one(d));
    if (mu == -1) den = poly_mul(den, x_power_minus_one(d));
  }
  return poly_div(num, den);
}

std::size_t rank_by_kernel_count(const std::vector<std::vector<long>>& rows, long p) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cols; ++i) total *= static_cast<std::uint64_t>(p);
  std::uint64_t kernel = 0;
  std::vector<long> v(cols);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < cols; ++i) {
      v[i] = static_cast<long>(c % static_cast<std::uint64_t>(p));
      c /= static_cast<std::uint64_t>(p);
    }
    bool zero = true;
    for (const auto& row : rows) {
      long s = 0;
      for (std::size_t i = 0; i < cols; ++i) s = ((s + row[i] % p * v[i]) % p + p) % p;
      if (s != 0) {
        zero = false;
        break;
      }
    }
    kernel += zero;
  }
  std::size_t nullity = 0;
  while (kernel > 1) {
    kernel /= static_cast<std::uint64_t>(p);
    ++nullity;
  }
  return cols - nullity;
}

std::vector<long> betti_by_pairs(const std::vector<Line>& lines) {
  std::map<std::pair<Rational, Rational>, std::set<std::size_t>> points;
  long pairs = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const long det = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
      if (det == 0) continue;
      ++pairs;
      const Rational x(Rational(lines[i].c * lines[j].b - lines[i].b * lines[j].c) / det);
      const Rational y(Rational(lines[i].a * lines[j].c - lines[i].c * lines[j].a) / det);
      points[{x, y}].insert(i);
      points[{x, y}].insert(j);
    }
  }
  long b2 = pairs;
  for (const auto& [pt, through] : points) {
    const long m = static_cast<long>(through.size());
    b2 -= m * (m - 1) / 2 - (m - 1);
  }
  return {1, static_cast<long>(lines.size()), b2};
}

std::set<std::vector<int>> chambers_by_edges(const std::vector<Line>& lines) {
  std::set<std::vector<int>> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& l = lines[i];
    // Parameterize line i as p0 + t * (-b, a).
    const Rational x0 = l.a != 0 ? Rational(l.c) / l.a : Rational(0);
    const Rational y0 = l.a != 0 ? Rational(0) : Rational(l.c) / l.b;
    std::vector<Rational> ts;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == i) continue;
      const Line& m = lines[j];
      const long along = -m.a * l.b + m.b * l.a;
      if (along == 0) continue;
      ts.push_back(-eval(m, x0, y0) / along);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Rational> probes;
    if (ts.empty()) {
      probes.push_back(0);
    } else {
      probes.push_back(ts.front() - 1);
      for (std::size_t k = 0; k + 1 < ts.size(); ++k) probes.push_back((ts[k] + ts[k + 1]) / 2);
      probes.push_back(ts.back() + 1);
    }
    for (const Rational& t : probes) {
      const Rational x = x0 - t * l.b;
      const Rational y = y0 + t * l.a;
      // Step length below the distance (in normal units) to every other line.
      Rational eps = 1;
      for (std::size_t j = 0; j < lines.size(); ++j) {
        if (j == i) continue;
        const Rational v = eval(lines[j], x, y);
        const Rational v_abs = v < 0 ? Rational(-v) : v;
        long slope = lines[j].a * l.a + lines[j].b * l.b;
        if (slope < 0) slope = -slope;
        const Rational bound = v_abs / (2 * slope + 2);
        if (bound < eps) eps = bound;
      }
      for (int side : {1, -1}) {
        const Rational px = x + side * eps * l.a;
        const Rational py = y + side * eps * l.b;
        std::vector<int> sign;
        for (const Line& m : lines) sign.push_back(sgn(eval(m, px, py)));
        if (std::find(sign.begin(), sign.end(), 0) != sign.end()) {
          throw std::logic_error("oracle probe on a line");
        }
        out.insert(sign);
      }
    }
  }
  return out;
}

std::set<std::vector<int>> chambers_of_points(const std::vector<Rational>& points) {
  std::vector<Rational> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Rational> probes{sorted.front() - 1, sorted.back() + 1};
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    probes.push_back((sorted[k] + sorted[k + 1]) / 2);
  }
  std::set<std::vector<int>> out;
  for (const Rational& x : probes) {
    std::vector<int> sign;
    for (const Rational& p : points) sign.push_back(sgn(x - p));
    out.insert(sign);
  }
  return out;
}

}  // namespace oracle
