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

#include "arrcoh/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <tuple>
#include <utility>

#include "arrcoh/error.hpp"
#include "arrcoh/sweep.hpp"
#include "arrcoh/triples.hpp"

namespace arrcoh {
namespace {

using Outcome = std::pair<bool, std::string>;

std::string show(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<long> strata_sizes(const ChamberModel& model) {
  std::vector<long> out;
  for (const auto& s : model.strata().strata) out.push_back(static_cast<long>(s.size()));
  return out;
}

Outcome check_strata(const Arrangement& a, int seed) {
  const ChamberModel model(a, seed);
  const Stratification& s = model.strata();
  bool ok = strata_sizes(model) == model.betti();
  for (std::size_t k = 0; k + 1 < s.strata.size(); ++k) {
    if (s.bounded_count(k) != s.unbounded_count(k + 1)) ok = false;
  }
  return {ok, "|ch^k| = " + show(strata_sizes(model)) + ", b = " + show(model.betti())};
}

Outcome check_opposite_degrees(const Arrangement& a) {
  const ChamberModel model(a);
  const auto rows = opposite_degree_table(model);
  std::size_t bad = 0;
  for (const OppositeRow& r : rows) bad += !r.ok;
  return {bad == 0, std::to_string(rows.size()) + " chambers in bch^1, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome check_sweep(const Arrangement& a, int m, const SelftestOptions& opt) {
  SweepConfig cyc{a, m};
  cyc.threads = opt.threads;
  SweepConfig prime = cyc;
  prime.mode = FieldMode::kPrime;
  const SweepReport rc = run_sweep(cyc);
  const SweepReport rp = run_sweep(prime);
  std::size_t disagree = 0;
  for (std::size_t i = 0; i < rc.results.size(); ++i) {
    disagree += rc.results[i].h != rp.results[i].h;
  }
  const bool ok = rc.passed() && rp.passed() && disagree == 0;
  return {ok, std::to_string(rc.results.size()) + " characters, " +
                  std::to_string(rc.failures) + " failures over " + rc.field.to_string() + ", " +
                  std::to_string(rp.failures) + " over " + rp.field.to_string() + ", " +
                  std::to_string(disagree) + " field disagreements"};
}

Outcome check_cross(const Arrangement& a, int m, const SelftestOptions& opt) {
  SweepConfig cfg{a, m};
  cfg.threads = opt.threads;
  const CrossValidationReport r = cross_validate(cfg);
  return {r.passed(), std::to_string(r.checks) + " checks on " + std::to_string(r.sampled) +
                          " characters" + (r.passed() ? "" : ": " + r.failures.front())};
}

Outcome check_linearization(const Arrangement& a, const FieldDescriptor& field,
                            const SelftestOptions& opt) {
  const ChamberModel model(a);
  const OSAlgebra os(a);
  std::size_t bad = 0;
  const auto samples = random_weights(field, a.size(), opt.weight_samples, 17);
  for (const WeightVector& w : samples) {
    std::vector<std::size_t> dims;
    for (const auto& s : model.strata().strata) dims.push_back(s.size());
    const auto lin = cohomology_dims(dims, complex_ranks(model.linearized(w.entries)));
    bad += lin != cohomology_dims(os.dims(), cup_ranks(os, w));
  }
  return {bad == 0, std::to_string(samples.size()) + " weights over " + field.to_string() + ", " +
                        std::to_string(bad) + " disagreements"};
}

Outcome check_cup(const Arrangement& a, std::uint64_t p, const SelftestOptions& opt) {
  const CupCheckReport r = check_cup_nonzero(a, FieldDescriptor::prime(p), opt.exhaustive_bound);
  return {r.passed(), std::to_string(r.checked) + " nonzero weights" +
                          (r.passed() ? "" : ", first zero map at " + r.violations.front())};
}

Outcome check_central(const Arrangement& a, const SelftestOptions& opt) {
  const OSAlgebra os(a);
  const std::vector<long> b = betti(a);
  std::size_t tested = 0;
  std::size_t bad = 0;
  for (const WeightVector& w : random_weights(FieldDescriptor::rationals(), a.size(),
                                              opt.weight_samples, 29)) {
    if (w.total().is_zero()) continue;
    ++tested;
    const auto ranks = cup_ranks(os, w);
    const auto dims = cohomology_dims(os.dims(), ranks);
    bool ok = std::all_of(dims.begin(), dims.end(), [](long d) { return d == 0; });
    long partial = 0;
    for (std::size_t k = 1; k <= ranks.size(); ++k) {
      partial += (k % 2 == 1 ? 1 : -1) * b[k - 1];
      if (static_cast<long>(ranks[k - 1]) != std::abs(partial)) ok = false;
    }
    bad += !ok;
  }
  return {bad == 0 && tested > 0,
          std::to_string(tested) + " weights with nonzero sum, " + std::to_string(bad) + " failures"};
}

Outcome check_localization(const Arrangement& a) {
  const IntersectionPoset poset = intersection_poset(a);
  std::size_t bad = 0;
  std::size_t count = 0;
  for (const Edge* v : poset.vertices()) {
    ++count;
    const Localization loc = localize(a, v->point);
    const long m = static_cast<long>(v->hyperplanes.size());
    const bool ok = loc.arrangement.is_central() && loc.index_map == v->hyperplanes &&
                    betti(loc.arrangement) == std::vector<long>{1, m, m - 1} && v->mobius == m - 1;
    bad += !ok;
  }
  return {bad == 0, std::to_string(count) + " vertices, " + std::to_string(bad) + " failures"};
}

Outcome check_triples(const Arrangement& a, int m) {
  std::size_t tested = 0;
  std::size_t bad = 0;
  std::size_t triggered = 0;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.size(); ++i) total *= static_cast<std::uint64_t>(m);
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (!betti_additivity(a, h).holds) ++bad;
    for (std::uint64_t code = 0; code < total; ++code) {
      const auto exps = exponents_at(code, m, a.size());
      if (exps[h] != 0) continue;
      const CharacterSpec chi = CharacterSpec::from_exponents(m, exps);
      const TripleReport r = triple_inequality(a, h, chi);
      ++tested;
      bad += !r.passed();
      if (!chi.is_trivial()) {
        for (bool t : r.equality_triggered) triggered += t;
      }
    }
  }
  return {bad == 0, std::to_string(a.size()) + " deletions, " + std::to_string(tested) +
                        " characters with q_H = 1, " + std::to_string(bad) + " failures, " +
                        std::to_string(triggered) + " nontrivial equality cases"};
}

}  // namespace

std::vector<OppositeRow> opposite_degree_table(const ChamberModel& model) {
  std::vector<OppositeRow> rows;
  const Arrangement& a = model.arrangement();
  if (a.dim() != 2) return rows;
  const Stratification& s = model.strata();
  const auto& chambers = model.chambers();
  for (std::size_t pos = 0; pos < s.strata[1].size(); ++pos) {
    if (!s.bounded[1][pos]) continue;
    OppositeRow r;
    r.chamber = s.strata[1][pos];
    r.opposite = opposite_chamber(a, chambers, chambers[r.chamber]);
    r.span_dim = infinity_span(a, chambers[r.chamber]).dim;
    r.opposite_level = s.level[r.opposite];
    r.expected = r.span_dim == 1 ? 1 : -1;
    if (r.opposite_level == 2) {
      r.degree = degree(a, model.flag(), s, chambers, r.chamber, r.opposite);
    }
    r.ok = r.opposite_level == 2 && r.degree == r.expected;
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::string> opposite_violations(const Arrangement& a,
                                             const std::vector<Chamber>& chambers) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < chambers.size(); ++c) {
    if (chambers[c].bounded) continue;
    const std::string tag = "chamber " + std::to_string(c) + ": ";
    const std::size_t o = opposite_chamber(a, chambers, chambers[c]);
    if (chambers[o].bounded) {
      out.push_back(tag + "opposite is bounded");
      continue;
    }
    if (opposite_chamber(a, chambers, chambers[o]) != c) out.push_back(tag + "not an involution");
    const InfinitySpan x = infinity_span(a, chambers[c]);
    const InfinitySpan y = infinity_span(a, chambers[o]);
    if (x.dim != y.dim) out.push_back(tag + "X(C) and X(C^v) differ");
    if (a.dim() == 2 && x.dim == 0) {
      // The opposite ray points the other way.
      const Point& d = *x.direction;
      const Point& e = *y.direction;
      if (!(d[0] == -e[0] && d[1] == -e[1])) out.push_back(tag + "opposite ray not antipodal");
    }
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < a.size(); ++i) {
      bool through = false;
      if (a.dim() == 2 && x.dim == 0) {
        const Point& d = *x.direction;
        through = Rational(a[i].normal[0]) * d[0] + Rational(a[i].normal[1]) * d[1] == 0;
      }
      if (!through) expected.push_back(i);
    }
    if (separating(chambers[c], chambers[o]) != expected) {
      out.push_back(tag + "Sep(C, C^v) is not the set of hyperplanes missing X(C)");
    }
  }
  return out;
}

std::vector<WeightVector> random_weights(const FieldDescriptor& field, std::size_t n,
                                         std::size_t count, std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  const bool finite = field.is_finite();
  const long lo = finite ? 0 : -bound;
  const long hi = finite ? static_cast<long>(field.parameter()) - 1 : bound;
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<WeightVector> out;
  while (out.size() < count) {
    std::vector<long> w(n);
    for (long& x : w) x = dist(rng);
    WeightVector wv = WeightVector::from_integers(field, w);
    if (!wv.is_zero()) out.push_back(std::move(wv));
  }
  return out;
}

std::vector<SelftestCheck> run_selftest(const std::string& name, const Arrangement& a,
                                        const SelftestOptions& options) {
  std::vector<SelftestCheck> checks;
  auto run = [&](const std::string& check, const std::function<Outcome()>& body) {
    SelftestCheck c{name, check, false, ""};
    try {
      std::tie(c.passed, c.detail) = body();
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    checks.push_back(std::move(c));
  };

  for (int seed : options.seeds) {
    run("strata_seed" + std::to_string(seed), [&] { return check_strata(a, seed); });
  }
  run("opposite_chambers", [&] {
    const auto v = opposite_violations(a, enumerate_chambers(a));
    return Outcome{v.empty(), v.empty() ? "ok" : v.front()};
  });
  if (a.dim() == 2) run("opposite_degrees", [&] { return check_opposite_degrees(a); });
  for (int m : options.orders) {
    run("sweep_m" + std::to_string(m), [&] { return check_sweep(a, m, options); });
    run("cross_validate_m" + std::to_string(m), [&] { return check_cross(a, m, options); });
    run("triples_m" + std::to_string(m), [&] { return check_triples(a, m); });
  }
  run("linearization_Q",
      [&] { return check_linearization(a, FieldDescriptor::rationals(), options); });
  run("linearization_F7",
      [&] { return check_linearization(a, FieldDescriptor::prime(7), options); });
  for (std::uint64_t p : {2, 3}) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < a.size(); ++i) total *= p;
    if (total <= options.exhaustive_bound) {
      run("cup_nonzero_F" + std::to_string(p), [&] { return check_cup(a, p, options); });
    }
  }
  if (a.dim() == 2) run("localization", [&] { return check_localization(a); });
  if (a.is_central()) run("central_exactness", [&] { return check_central(a, options); });
  return checks;
}

}  // namespace arrcoh
