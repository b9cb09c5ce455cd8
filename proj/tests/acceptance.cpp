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

// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arrcoh/aomoto.hpp"
#include "arrcoh/chamber.hpp"
#include "arrcoh/complex.hpp"
#include "arrcoh/corpus.hpp"
#include "arrcoh/error.hpp"
#include "arrcoh/field.hpp"
#include "arrcoh/flag.hpp"
#include "arrcoh/matrix.hpp"
#include "arrcoh/report.hpp"
#include "arrcoh/selftest.hpp"
#include "arrcoh/sweep.hpp"
#include "arrcoh/triples.hpp"

using namespace arrcoh;

namespace {

using Clock = std::chrono::steady_clock;

class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks";
    if (failures_) s += ", " + std::to_string(failures_) + " failed: " + detail_;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string detail_;
};

std::string show(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

long alternating(const std::vector<long>& v) {
  long s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k % 2 ? -1 : 1) * v[k];
  return s;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Arrangement lines(const std::vector<std::array<long, 3>>& rows) {
  std::vector<HyperplaneEquation> eqs;
  for (const auto& r : rows) eqs.push_back({{Rational(r[0]), Rational(r[1])}, Rational(r[2])});
  return normalize_arrangement(2, eqs);
}

Arrangement points(const std::vector<long>& xs) {
  std::vector<HyperplaneEquation> eqs;
  for (long x : xs) eqs.push_back({{Rational(1)}, Rational(x)});
  return normalize_arrangement(1, eqs);
}

const std::vector<int> kOrders{2, 3, 4};

// Sweeps shared by several criteria, keyed by (arrangement, m).
struct SweepCache {
  std::map<std::pair<std::string, int>, SweepReport> cyclotomic;
  std::map<std::pair<std::string, int>, SweepReport> prime;
};

std::string tag(const std::string& name, int m) { return name + " m=" + std::to_string(m); }

Outcome criterion1(const SweepCache& cache) {
  Outcome out;
  for (const auto& [key, r] : cache.cyclotomic) {
    const std::string where = tag(key.first, key.second);
    std::size_t trivial = 0;
    for (const CharacterResult& c : r.results) {
      const std::string who = where + " a=" + show({c.exponents.begin(), c.exponents.end()});
      if (c.trivial) {
        ++trivial;
        out.require(c.h == r.betti, who + " trivial h=" + show(c.h));
      } else {
        bool strict = c.h.size() == r.betti.size();
        for (std::size_t k = 0; strict && k < c.h.size(); ++k) strict = c.h[k] < r.betti[k];
        out.require(strict, who + " h=" + show(c.h) + " b=" + show(r.betti));
      }
    }
    out.require(trivial == 1, where + " trivial count");
  }
  return out;
}

Outcome criterion2(const SweepCache& cache) {
  Outcome out;
  for (const auto& [key, r] : cache.cyclotomic) {
    for (const CharacterResult& c : r.results) {
      if (c.trivial) continue;
      const std::string who = tag(key.first, key.second) + " a=" +
                              show({c.exponents.begin(), c.exponents.end()});
      for (std::size_t k = 0; k < c.nabla_nonzero.size(); ++k) {
        out.require(c.nabla_nonzero[k], who + " nabla_" + std::to_string(k) + " = 0");
      }
      out.require(c.nabla_nonzero.size() + 1 == r.betti.size(), who + " differential count");
      if (r.betti.size() == 3) out.require(c.h[1] <= r.betti[1] - 2, who + " h^1 > b_1 - 2");
    }
  }
  return out;
}

Outcome criterion3(const SweepCache& cache) {
  Outcome out;
  for (const CorpusEntry& e : builtin_corpus()) {
    const ChamberModel base(e.arrangement, 1);
    const ChamberModel moved(e.arrangement, 8);
    for (int m : kOrders) {
      const SweepReport& q = cache.cyclotomic.at({e.name, m});
      const SweepReport& p = cache.prime.at({e.name, m});
      const SweepConfig config{e.arrangement, m};
      for (std::size_t i = 0; i < q.results.size(); ++i) {
        const auto& a = q.results[i].exponents;
        const std::string who = tag(e.name, m) + " a=" + show({a.begin(), a.end()});
        const CharacterSpec chi = sweep_character(config, a);
        const ChamberComplex cx = base.complex(chi);
        for (std::size_t k = 0; k + 1 < cx.nabla.size(); ++k) {
          out.require((cx.nabla[k + 1] * cx.nabla[k]).is_zero(), who + " nabla^2 != 0");
        }
        const std::vector<long> h = base.cohomology(chi).h;
        out.require(h == q.results[i].h, who + " sweep/recompute mismatch");
        out.require(moved.cohomology(chi).h == h, who + " flag seed 8 changes h");
        out.require(p.results[i].exponents == a && p.results[i].h == h,
                    who + " F_" + std::to_string(p.field.parameter()) + " changes h");
        if (m == 4) continue;
        for (std::size_t j = 0; j < chi.size(); ++j) {
          out.require(base.cohomology(chi.with_root_negated(j)).h == h,
                      who + " sign flip of r_" + std::to_string(j + 1) + " changes h");
        }
      }
    }
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  for (const CorpusEntry& e : builtin_corpus()) {
    for (int seed : {1, 8}) {
      const ChamberModel model(e.arrangement, seed);
      const Stratification& s = model.strata();
      const std::string who = e.name + " seed=" + std::to_string(seed);
      for (std::size_t k = 0; k < s.strata.size(); ++k) {
        out.require(static_cast<long>(s.strata[k].size()) == model.betti()[k],
                    who + " |ch^" + std::to_string(k) + "| != b_" + std::to_string(k));
        if (k + 1 < s.strata.size()) {
          out.require(s.bounded_count(k) == s.unbounded_count(k + 1),
                      who + " |bch^" + std::to_string(k) + "| != |uch^" + std::to_string(k + 1) + "|");
        }
      }
    }
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  for (const CorpusEntry& e : builtin_corpus()) {
    if (e.arrangement.dim() != 2) continue;
    for (int seed : {1, 8}) {
      const ChamberModel model(e.arrangement, seed);
      const auto rows = opposite_degree_table(model);
      const std::string who = e.name + " seed=" + std::to_string(seed);
      out.require(rows.size() == model.strata().bounded_count(1), who + " bch^1 coverage");
      for (const OppositeRow& r : rows) {
        const int expected = (1 - r.span_dim) % 2 == 0 ? 1 : -1;
        out.require(r.opposite_level == 2, who + " C^v not in ch^2");
        out.require(r.degree == expected, who + " chamber " + std::to_string(r.chamber) +
                                              " deg=" + std::to_string(r.degree));
      }
    }
  }
  return out;
}

Outcome criterion6(const SweepCache& cache) {
  Outcome out;
  for (const auto* sweeps : {&cache.cyclotomic, &cache.prime}) {
    for (const auto& [key, r] : *sweeps) {
      const long chi = alternating(r.betti);
      for (const CharacterResult& c : r.results) {
        out.require(alternating(c.h) == chi,
                    tag(key.first, key.second) + " h=" + show(c.h) + " b=" + show(r.betti));
      }
    }
  }
  return out;
}

Outcome criterion7() {
  Outcome out;
  for (const CorpusEntry& e : builtin_corpus()) {
    const ChamberModel model(e.arrangement);
    std::vector<std::size_t> dims;
    for (const auto& s : model.strata().strata) dims.push_back(s.size());
    for (const FieldDescriptor& f : {FieldDescriptor::prime(7), FieldDescriptor::rationals()}) {
      const auto ws = random_weights(f, e.arrangement.size(), 50, 2026);
      out.require(ws.size() == 50, e.name + " sample count");
      for (const WeightVector& w : ws) {
        const auto lin = cohomology_dims(dims, complex_ranks(model.linearized(w.entries)));
        out.require(lin == aomoto_betti(e.arrangement, w),
                    e.name + " over " + f.to_string() + " linearized " + show(lin));
      }
    }
    for (std::uint64_t p : {2, 3}) {
      if (e.arrangement.size() > 5) continue;
      const CupCheckReport r =
          check_cup_nonzero(e.arrangement, FieldDescriptor::prime(p), 1000000);
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < e.arrangement.size(); ++i) total *= p;
      out.require(r.checked == total - 1, e.name + " F_" + std::to_string(p) + " coverage");
      out.require(r.passed(), e.name + " F_" + std::to_string(p) + " zero cup map");
    }
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  std::size_t central = 0;
  for (const CorpusEntry& e : builtin_corpus()) {
    if (!e.arrangement.is_central()) continue;
    ++central;
    const OSAlgebra os(e.arrangement);
    const std::vector<long> b = betti(e.arrangement);
    std::size_t used = 0;
    for (const WeightVector& w :
         random_weights(FieldDescriptor::rationals(), e.arrangement.size(), 200, 88)) {
      if (w.total().is_zero()) continue;
      if (++used > 20) break;
      const auto h = aomoto_betti(e.arrangement, w);
      out.require(h == std::vector<long>(b.size(), 0), e.name + " h=" + show(h));
      const auto ranks = cup_ranks(os, w);
      long partial = 0;
      for (std::size_t k = 0; k < ranks.size(); ++k) {
        partial += (k % 2 ? -1 : 1) * b[k];
        out.require(static_cast<long>(ranks[k]) == std::labs(partial),
                    e.name + " rank of w on degree " + std::to_string(k));
      }
    }
    out.require(used > 20, e.name + " fewer than 20 samples");
  }
  out.require(central >= 3, "central corpus members");
  return out;
}

Outcome criterion9() {
  Outcome out;
  for (const CorpusEntry& e : builtin_corpus()) {
    const Arrangement& a = e.arrangement;
    for (std::size_t h = 0; h < a.size(); ++h) {
      const std::string who = e.name + " H=" + std::to_string(h + 1);
      const AdditivityReport add = betti_additivity(a, h);
      bool holds = add.b.size() == add.b_deleted.size();
      for (std::size_t k = 0; holds && k < add.b.size(); ++k) {
        holds = add.b[k] == add.b_deleted[k] + (k ? add.b_restricted[k - 1] : 0);
      }
      out.require(holds && add.holds, who + " additivity");
      for (int m : {2, 3}) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < a.size(); ++i) total *= static_cast<std::uint64_t>(m);
        for (std::uint64_t code = 0; code < total; ++code) {
          const auto ex = exponents_at(code, m, a.size());
          if (ex[h] != 0) continue;
          const TripleReport r = triple_inequality(a, h, CharacterSpec::from_exponents(m, ex));
          const std::string w = who + " m=" + std::to_string(m) + " a=" + show({ex.begin(), ex.end()});
          for (std::size_t k = 0; k < r.h.size(); ++k) {
            const long below = k ? r.h_restricted[k - 1] : 0;
            out.require(r.h[k] <= r.h_deleted[k] + below, w + " degree " + std::to_string(k));
          }
          out.require(r.equality_ok(), w + " equality case");
          if (a.dim() == 2 && !r.restricted_trivial) {
            out.require(r.h_restricted == std::vector<long>{0, r.b_restricted[1] - 1},
                        w + " restricted h=" + show(r.h_restricted));
          }
        }
      }
    }
  }
  return out;
}

// Forced values and the small worked examples.
Outcome criterion10() {
  Outcome out;
  const FieldDescriptor q = FieldDescriptor::rationals();

  for (int m : kOrders) {
    const SweepReport r = run_sweep(SweepConfig{corpus_entry("cross").arrangement, m});
    std::size_t nontrivial = 0;
    for (const CharacterResult& c : r.results) {
      if (c.trivial) continue;
      ++nontrivial;
      out.require(c.h == std::vector<long>{0, 0, 0}, "cross m=" + std::to_string(m) + " h=" + show(c.h));
    }
    if (m == 2) out.require(nontrivial == 3, "cross m=2 nontrivial count");
  }
  out.require(local_cohomology(points({0, 1}), CharacterSpec::from_exponents(2, {1, 1})).h ==
                  std::vector<long>{0, 1},
              "{0,1} with q=(-1,-1)");
  for (const CorpusEntry& e : builtin_corpus()) {
    for (const FieldDescriptor& f : {q, FieldDescriptor::prime(5), FieldDescriptor::cyclotomic(6)}) {
      const CharacterSpec chi = CharacterSpec::trivial(f, e.arrangement.size());
      const ChamberModel model(e.arrangement);
      out.require(model.cohomology(chi).h == model.betti(), e.name + " trivial over " + f.to_string());
      for (const ExactMatrix& m : model.complex(chi).nabla) out.require(m.is_zero(), e.name + " trivial nabla");
    }
    CharacterInput one;
    one.m = 1;
    const Json doc = cohomology_document(e.arrangement, one);
    out.require(doc.at("h") == Json(betti(e.arrangement)), e.name + " cohomology m=1");
  }

  // Fields and matrices.
  out.require(cyclotomic_polynomial(1) == IntPoly{-1, 1}, "Phi_1");
  out.require(cyclotomic_polynomial(4) == IntPoly{1, 0, 1}, "Phi_4");
  const FieldDescriptor q4 = FieldDescriptor::cyclotomic(4);
  const FieldElem i4 = FieldElem::generator(q4);
  out.require(i4 * i4 == FieldElem::from_integer(q4, -1), "zeta_4^2");
  const FieldDescriptor f5 = FieldDescriptor::prime(5);
  out.require(FieldElem::from_integer(f5, 2).inverse() == FieldElem::from_integer(f5, 3), "1/2 in F_5");
  const FieldDescriptor q6 = FieldDescriptor::cyclotomic(6);
  out.require(root_of_unity(q6, 6, 3) == FieldElem::from_integer(q6, -1), "zeta_6^3");
  out.require(root_of_unity(q4, 2, 0).is_one(), "exponent 0");
  out.require(matrix_rank(ExactMatrix(q, 0, 4)) == 0, "rank of 0 x n");
  const auto r = [&](long x) { return FieldElem::from_integer(q, x); };
  out.require(matrix_rank(ExactMatrix::from_rows(q, {{r(1), r(2)}, {r(2), r(4)}})) == 1, "rank [[1,2],[2,4]]");

  // Arrangements, posets, chambers.
  const Arrangement g3 = corpus_entry("generic3").arrangement;
  const Arrangement strip = corpus_entry("strip").arrangement;
  const Arrangement cross = corpus_entry("cross").arrangement;
  out.require(g3.size() == 3 && g3.infinity_points().size() == 3, "generic3 infinity classes");
  out.require(strip.infinity_points().size() == 2, "strip infinity classes");
  bool duplicate = false;
  try {
    lines({{1, 0, 0}, {2, 0, 0}});
  } catch (const ArrangementError&) {
    duplicate = true;
  }
  out.require(duplicate, "{x=0, 2x=0} rejected");
  out.require(betti(points({0, 1})) == std::vector<long>{1, 2}, "b({0,1})");
  out.require(betti(cross) == std::vector<long>{1, 2, 1}, "b(cross)");
  const auto ch1 = enumerate_chambers(points({0}));
  out.require(ch1.size() == 2 && !ch1[0].bounded && !ch1[1].bounded, "{0} chambers");

  Chamber c{{1, 1, 1}, false, {}, {}};
  Chamber d{{-1, 1, 1}, false, {}, {}};
  Chamber e{{-1, -1, -1}, false, {}, {}};
  out.require(separating(c, d) == std::vector<std::size_t>{0}, "Sep one sign");
  out.require(separating(c, c).empty(), "Sep(C, C)");
  out.require(separating(c, e) == std::vector<std::size_t>{0, 1, 2}, "Sep all signs");

  const auto cross_ch = enumerate_chambers(cross);
  const auto pp = find_chamber(cross_ch, {1, 1});
  const auto mm = find_chamber(cross_ch, {-1, -1});
  out.require(pp && mm, "cross quadrants");
  if (pp && mm) {
    out.require(infinity_span(cross, cross_ch[*pp]).dim == 1, "dim X(++)");
    out.require(opposite_chamber(cross, cross_ch, cross_ch[*pp]) == *mm, "(++)^v");
  }
  const auto g3_ch = enumerate_chambers(g3);
  bool bounded_error = false;
  for (const Chamber& ch : g3_ch) {
    if (!ch.bounded) continue;
    try {
      infinity_span(g3, ch);
    } catch (const ArrangementError&) {
      bounded_error = true;
    }
  }
  out.require(bounded_error, "X(C) of a bounded chamber");

  const IntersectionPoset g3_poset = intersection_poset(g3);
  for (const Edge* v : g3_poset.vertices()) {
    const Localization loc = localize(g3, v->point);
    out.require(loc.index_map == v->hyperplanes && loc.arrangement.size() == 2, "generic3 localization");
  }
  const Arrangement pencil = corpus_entry("pencil3").arrangement;
  out.require(localize(pencil, {Rational(0), Rational(0)}).index_map ==
                  std::vector<std::size_t>{0, 1, 2},
              "pencil localization");

  // Flags and degrees.
  const Flag skip = build_flag(cross, 0);
  out.require(skip.normal[1] != 0, "candidate parallel to a vertical line skipped");
  for (const CorpusEntry& entry : builtin_corpus()) {
    if (entry.arrangement.dim() != 2) continue;
    const ChamberModel model(entry.arrangement);
    const Flag& f = model.flag();
    const Stratification& s = model.strata();
    for (std::size_t col = 0; col < s.strata[1].size(); ++col) {
      const FlagInterval& iv = s.intervals[col];
      if (!iv.lower_wall || !iv.upper_wall) continue;
      for (std::size_t row = 0; row < s.strata[2].size(); ++row) {
        const SignVector& target = model.chambers()[s.strata[2][row]].sign;
        // +1 when the side of the wall holding C' lies up the flag.
        auto sigma = [&](std::size_t wall) {
          const Hyperplane& h = entry.arrangement[wall];
          const Rational up = Rational(h.normal[0]) * f.direction[0] + Rational(h.normal[1]) * f.direction[1];
          return target[wall] == sign(up) ? 1 : -1;
        };
        if (sigma(*iv.lower_wall) == sigma(*iv.upper_wall)) {
          out.require(model.degree_at(1, row, col) == 0, entry.name + " degree with equal sigma");
        }
      }
    }
  }

  // Delta.
  const FieldElem z4 = root_of_unity(q4, 4, 1);
  const CharacterSpec chi4(q4, {z4, FieldElem::one(q4), FieldElem::one(q4)});
  out.require(delta(c, c, chi4).is_zero(), "Delta with empty Sep");
  out.require(delta(c, d, chi4) == FieldElem::from_integer(q4, 2) * z4, "Delta = 2 zeta_4");

  // Aomoto complex.
  const OSAlgebra strip_os(strip);
  std::size_t x0 = 0, x1 = 0;
  for (std::size_t i = 0; i < strip.size(); ++i) {
    if (strip[i].normal[1] == 0) (strip[i].offset == 0 ? x0 : x1) = i;
  }
  out.require(strip_os.product(x0, x1).empty(), "e1 e2 = 0 for parallel lines");
  for (const CorpusEntry& entry : builtin_corpus()) {
    const WeightVector zero = WeightVector::from_integers(q, std::vector<long>(entry.arrangement.size(), 0));
    const OSAlgebra os(entry.arrangement);
    for (int k = 0; k < entry.arrangement.dim(); ++k) out.require(cup_matrix(os, zero, k).is_zero(), entry.name + " w=0");
    out.require(aomoto_betti(entry.arrangement, zero) == betti(entry.arrangement), entry.name + " w=0 dims");
    for (const WeightVector& w : random_weights(q, entry.arrangement.size(), 5, 9)) {
      if (entry.arrangement.dim() == 2) {
        out.require((cup_matrix(os, w, 1) * cup_matrix(os, w, 0)).is_zero(), entry.name + " (w cup)^2");
      }
    }
    out.require(check_cup_nonzero(entry.arrangement, {zero}).checked == 0, entry.name + " w=0 excluded");
  }

  // Triples.
  const Triple tg = make_triple(g3, 2);
  out.require(tg.deleted && tg.deleted->size() == 2 && tg.restricted && tg.restricted->size() == 2,
              "generic3 H3 triple");
  std::size_t y0 = 0;
  for (std::size_t i = 0; i < strip.size(); ++i) {
    if (strip[i].normal[0] == 0) y0 = i;
  }
  out.require(!make_triple(strip, y0).deleted_essential, "strip H3 deletion flagged");
  const Arrangement p01 = points({0, 1});
  std::size_t zero_pt = p01[0].offset == 0 ? 0 : 1;
  const AdditivityReport add = betti_additivity(p01, zero_pt);
  out.require(add.b == std::vector<long>{1, 2} && add.b_deleted == std::vector<long>{1, 1} &&
                  add.b_restricted == std::vector<long>{1},
              "{0,1} deletion of 0");
  for (const CorpusEntry& entry : builtin_corpus()) {
    for (std::size_t h = 0; h < entry.arrangement.size(); ++h) {
      const TripleReport t =
          triple_inequality(entry.arrangement, h, CharacterSpec::trivial(q, entry.arrangement.size()));
      out.require(t.h == t.b && t.h_deleted == t.b_deleted && t.h_restricted == t.b_restricted,
                  entry.name + " trivial triple");
    }
  }

  // Euler characteristic of a sweep.
  for (const CorpusEntry& entry : builtin_corpus()) {
    if (entry.arrangement.dim() != 2) continue;
    const SweepReport sw = run_sweep(SweepConfig{entry.arrangement, 2});
    const long expected = 1 - static_cast<long>(entry.arrangement.size()) + sw.betti[2];
    for (const CharacterResult& cr : sw.results) out.require(alternating(cr.h) == expected, entry.name + " Euler");
  }
  return out;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, const char* name, const std::function<Outcome()>& body,
                    double budget = 0) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = body();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (budget > 0) out.require(secs < budget, "runtime over budget");
    all = all && out.ok();
    std::printf("%s criterion %d: %s (%s, %.1fs)\n", out.ok() ? "PASS" : "FAIL", n, name,
                out.summary().c_str(), secs);
    std::fflush(stdout);
  };

  SweepCache cache;
  report(1, "strict bound for nontrivial characters, equality for the trivial one", [&] {
    for (const CorpusEntry& e : builtin_corpus()) {
      for (int m : kOrders) {
        cache.cyclotomic.emplace(std::make_pair(e.name, m), run_sweep(SweepConfig{e.arrangement, m}));
        cache.prime.emplace(std::make_pair(e.name, m),
                            run_sweep(SweepConfig{e.arrangement, m, FieldMode::kPrime}));
      }
    }
    return criterion1(cache);
  }, 120);
  report(2, "nonzero differentials and h^1 <= b_1 - 2", [&] { return criterion2(cache); });
  report(3, "complex structure and invariance under flag, sign and field changes",
         [&] { return criterion3(cache); });
  report(4, "stratum sizes and bounded/unbounded balance", criterion4);
  report(5, "degree of opposite pairs", criterion5);
  report(6, "Euler characteristic", [&] { return criterion6(cache); });
  report(7, "linearization matches the Aomoto complex; cup maps nonzero", criterion7, 60);
  report(8, "Aomoto exactness for central arrangements", criterion8);
  report(9, "deletion-restriction triples", criterion9);
  report(10, "forced values and worked examples", criterion10);
  return all ? 0 : 1;
}
