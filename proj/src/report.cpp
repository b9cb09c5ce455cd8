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

#include "arrcoh/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <regex>
#include <sstream>

#include "arrcoh/aomoto.hpp"
#include "arrcoh/error.hpp"
#include "arrcoh/triples.hpp"

namespace arrcoh {
namespace {

using Clock = std::chrono::steady_clock;

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json rational_json(const Rational& x) { return Json(to_string(x)); }

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const Rational& x : p) out.push_back(rational_json(x));
  return out;
}

Json hyperplane_json(const Hyperplane& h) {
  Json row = Json::array();
  for (const Integer& x : h.normal) row.push_back(integer_json(x));
  row.push_back(integer_json(h.offset));
  return row;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

std::string sign_string(const SignVector& s) {
  std::string out;
  for (int x : s) out += x > 0 ? '+' : '-';
  return out;
}

Json verdict_block(const std::vector<std::pair<std::string, bool>>& verdicts) {
  Json out = Json::object();
  for (const auto& [name, ok] : verdicts) out[name] = ok;
  return out;
}

void finish(Json& doc, Clock::time_point start) {
  bool passed = true;
  for (const auto& [name, ok] : doc["verdicts"].items()) passed = passed && ok.get<bool>();
  doc["passed"] = passed;
  doc["timing_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json start_document(const std::string& command) {
  Json doc = Json::object();
  doc["command"] = command;
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

Json character_json(const CharacterSpec& chi, const CharacterInput* input) {
  Json out = Json::object();
  out["field"] = chi.field().to_string();
  if (input && input->m) out["m"] = *input->m;
  if (input && !input->exponents.empty()) out["exponents"] = input->exponents;
  Json roots = Json::array();
  Json q = Json::array();
  for (std::size_t i = 0; i < chi.size(); ++i) {
    roots.push_back(field_elem_json(chi.root(i)));
    q.push_back(field_elem_json(chi.monodromy(i)));
  }
  out["roots"] = roots;
  out["monodromies"] = q;
  out["monodromy_at_infinity"] = field_elem_json(chi.monodromy_at_infinity());
  out["trivial"] = chi.is_trivial();
  return out;
}

Rational parse_rational(const std::string& s) {
  static const std::regex kRational("([+-]?[0-9]+)(/([0-9]+))?");
  std::smatch m;
  if (!std::regex_match(s, m, kRational)) {
    throw ArrangementError("weight '" + s + "' is not an integer or fraction p/q");
  }
  const Integer num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
  const Integer den = m[3].matched ? Integer(m[3].str(), 10) : Integer(1);
  if (den == 0) throw ArrangementError("weight '" + s + "' has zero denominator");
  return make_rational(num, den);
}

std::string join(const Json& arr) {
  std::string out = "(";
  bool first = true;
  for (const Json& x : arr) {
    if (!first) out += ", ";
    first = false;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out + ")";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

CharacterSpec make_character(const CharacterInput& input, std::size_t n) {
  auto require_length = [n](std::size_t got, const char* what) {
    if (got != n) {
      throw ArrangementError(std::string(what) + " has " + std::to_string(got) +
                             " entries for " + std::to_string(n) + " hyperplanes");
    }
  };
  if (!input.roots.empty()) {
    if (!input.prime) throw ArrangementError("--roots requires --prime");
    if (input.m || !input.exponents.empty()) {
      throw ArrangementError("--roots cannot be combined with --m or --exponents");
    }
    if (!is_prime(*input.prime)) throw FieldError(std::to_string(*input.prime) + " is not prime");
    require_length(input.roots.size(), "--roots");
    const FieldDescriptor field = FieldDescriptor::prime(*input.prime);
    std::vector<FieldElem> roots;
    for (std::int64_t r : input.roots) {
      roots.push_back(FieldElem::from_integer(field, static_cast<long>(r)));
    }
    return CharacterSpec(field, std::move(roots));
  }
  if (!input.m) {
    if (!input.exponents.empty()) throw ArrangementError("--exponents requires --m");
    if (input.prime) throw ArrangementError("--prime requires --m or --roots");
    return CharacterSpec::trivial(FieldDescriptor::rationals(), n);
  }
  const int m = *input.m;
  if (m < 1) throw ArrangementError("--m must be >= 1");
  std::vector<std::int64_t> exps = input.exponents;
  if (exps.empty()) exps.assign(n, 0);
  require_length(exps.size(), "--exponents");
  if (!input.prime) return CharacterSpec::from_exponents(m, exps);
  const std::uint64_t p = *input.prime;
  if (!is_prime(p) || (p - 1) % (2 * static_cast<std::uint64_t>(m)) != 0) {
    throw FieldError("--prime " + std::to_string(p) + " must be a prime with 2m | p - 1");
  }
  return CharacterSpec::from_exponents_prime(p, m, exps);
}

Json field_elem_json(const FieldElem& x) {
  switch (x.field().kind()) {
    case FieldKind::kRationals:
      return rational_json(std::get<Rational>(x.payload()));
    case FieldKind::kPrime:
      return Json(std::get<std::uint64_t>(x.payload()));
    case FieldKind::kCyclotomic: {
      Json out = Json::array();
      for (const Rational& c : x.coefficients()) out.push_back(rational_json(c));
      return out;
    }
  }
  return Json();
}

Json arrangement_summary(const ChamberModel& model) {
  const Arrangement& a = model.arrangement();
  const Stratification& s = model.strata();
  Json out = Json::object();
  out["dim"] = a.dim();
  out["n"] = a.size();
  Json rows = Json::array();
  for (const Hyperplane& h : a.hyperplanes()) rows.push_back(hyperplane_json(h));
  out["hyperplanes"] = rows;
  out["betti"] = model.betti();
  Json chambers = Json::object();
  chambers["total"] = model.chambers().size();
  chambers["bounded"] = std::count_if(model.chambers().begin(), model.chambers().end(),
                                      [](const Chamber& c) { return c.bounded; });
  Json sizes = Json::array();
  Json bounded = Json::array();
  Json unbounded = Json::array();
  for (std::size_t k = 0; k < s.strata.size(); ++k) {
    sizes.push_back(s.strata[k].size());
    bounded.push_back(s.bounded_count(k));
    unbounded.push_back(s.unbounded_count(k));
  }
  chambers["per_stratum"] = sizes;
  chambers["bounded_per_stratum"] = bounded;
  chambers["unbounded_per_stratum"] = unbounded;
  out["chambers"] = chambers;
  out["flag_seed"] = model.flag().seed;
  return out;
}

Json analyze_document(const Arrangement& a, int flag_seed) {
  const auto start = Clock::now();
  Json doc = start_document("analyze");
  const ChamberModel model(a, flag_seed);
  doc["arrangement"] = arrangement_summary(model);

  const IntersectionPoset poset = intersection_poset(a);
  Json vertices = Json::array();
  for (const Edge* v : poset.vertices()) {
    vertices.push_back({{"point", point_json(v->point)},
                        {"hyperplanes", one_based(v->hyperplanes)},
                        {"mobius", v->mobius}});
  }
  Json infinity = Json::array();
  for (const auto& cls : a.infinity_points()) infinity.push_back(one_based(cls));
  doc["poset"] = {{"vertices", vertices}, {"infinity_points", infinity}};

  const Stratification& s = model.strata();
  Json chambers = Json::array();
  for (std::size_t c = 0; c < model.chambers().size(); ++c) {
    const Chamber& ch = model.chambers()[c];
    Json rays = Json::array();
    for (const Point& r : ch.recession.rays) rays.push_back(point_json(r));
    chambers.push_back({{"index", c},
                        {"sign", sign_string(ch.sign)},
                        {"bounded", ch.bounded},
                        {"stratum", s.level[c]},
                        {"witness", point_json(ch.witness)},
                        {"recession_rays", rays}});
  }
  doc["chambers"] = chambers;

  const Flag& f = model.flag();
  Json crossings = Json::array();
  for (const Crossing& x : f.crossings) {
    crossings.push_back({{"parameter", rational_json(x.parameter)}, {"hyperplane", x.hyperplane + 1}});
  }
  doc["flag"] = {{"seed", f.seed},
                 {"normal", point_json(f.normal)},
                 {"level", rational_json(f.level)},
                 {"origin", point_json(f.origin)},
                 {"direction", point_json(f.direction)},
                 {"basepoint", rational_json(f.basepoint)},
                 {"crossings", crossings}};
  doc["strata"] = s.strata;

  Json opposite = Json::array();
  bool opposite_ok = true;
  for (const OppositeRow& r : opposite_degree_table(model)) {
    opposite.push_back({{"chamber", r.chamber},
                        {"opposite", r.opposite},
                        {"dim_X", r.span_dim},
                        {"opposite_stratum", r.opposite_level},
                        {"degree", r.degree},
                        {"expected", r.expected},
                        {"ok", r.ok}});
    opposite_ok = opposite_ok && r.ok;
  }
  doc["opposite_pairs"] = opposite;

  const auto violations = opposite_violations(a, model.chambers());
  doc["verdicts"] = verdict_block({{"strata_match_betti", true},
                                   {"opposite_chambers", violations.empty()},
                                   {"opposite_degrees", opposite_ok}});
  finish(doc, start);
  return doc;
}

Json cohomology_document(const Arrangement& a, const CharacterInput& input, int flag_seed) {
  const auto start = Clock::now();
  Json doc = start_document("cohomology");
  const CharacterSpec chi = make_character(input, a.size());
  const ChamberModel model(a, flag_seed);
  doc["arrangement"] = arrangement_summary(model);
  doc["character"] = character_json(chi, &input);
  const CharacterResult r = evaluate_character(model, chi, input.exponents);
  doc["h"] = r.h;
  doc["ranks"] = r.ranks;
  doc["nabla_nonzero"] = r.nabla_nonzero;
  bool bounded = true;
  for (std::size_t k = 0; k < r.h.size(); ++k) bounded = bounded && r.h[k] <= model.betti()[k];
  doc["verdicts"] = verdict_block({{"h_at_most_b", bounded},
                                   {"strict_or_trivial", r.strict_bound},
                                   {"refined_bound", r.refined_bound},
                                   {"euler", r.euler_ok},
                                   {"nabla_nonzero", r.nabla_ok}});
  finish(doc, start);
  return doc;
}

Json sweep_document(const SweepConfig& config, bool include_characters) {
  const auto start = Clock::now();
  Json doc = start_document("sweep");
  const SweepReport r = run_sweep(config);
  doc["arrangement"] = arrangement_summary(ChamberModel(config.arrangement, config.flag_seed));
  doc["m"] = r.m;
  doc["field"] = r.field.to_string();
  doc["summary"] = {{"characters", r.results.size()},
                    {"trivial", r.trivial_count},
                    {"nontrivial", r.nontrivial_count},
                    {"strict_pass", r.strict_pass},
                    {"refined_bound_pass", r.refined_pass},
                    {"euler_pass", r.euler_pass},
                    {"nabla_nonzero_pass", r.nabla_pass},
                    {"failures", r.failures}};
  if (include_characters) {
    Json rows = Json::array();
    for (const CharacterResult& c : r.results) {
      rows.push_back({{"exponents", c.exponents},
                      {"trivial", c.trivial},
                      {"h", c.h},
                      {"ranks", c.ranks},
                      {"strict_or_trivial", c.strict_bound},
                      {"refined_bound", c.refined_bound},
                      {"euler", c.euler_ok},
                      {"nabla_nonzero", c.nabla_ok}});
    }
    doc["characters"] = rows;
  }
  doc["verdicts"] = verdict_block({{"strict_or_trivial", r.strict_pass == r.results.size()},
                                   {"refined_bound", r.refined_pass == r.results.size()},
                                   {"euler", r.euler_pass == r.results.size()},
                                   {"nabla_nonzero", r.nabla_pass == r.results.size()}});
  finish(doc, start);
  return doc;
}

Json aomoto_document(const Arrangement& a, const std::vector<std::string>& weights,
                     const FieldDescriptor& field, int flag_seed) {
  const auto start = Clock::now();
  Json doc = start_document("aomoto");
  if (weights.size() != a.size()) {
    throw ArrangementError("--weights has " + std::to_string(weights.size()) + " entries for " +
                           std::to_string(a.size()) + " hyperplanes");
  }
  WeightVector w;
  for (const std::string& s : weights) w.entries.push_back(FieldElem::from_rational(field, parse_rational(s)));
  const ChamberModel model(a, flag_seed);
  const OSAlgebra os(a);
  doc["arrangement"] = arrangement_summary(model);
  Json wj = Json::array();
  for (const FieldElem& x : w.entries) wj.push_back(field_elem_json(x));
  doc["field"] = field.to_string();
  doc["weights"] = wj;
  doc["weight_sum"] = field_elem_json(w.total());

  const auto ranks = cup_ranks(os, w);
  const auto dims = cohomology_dims(os.dims(), ranks);
  std::vector<std::size_t> strata;
  for (const auto& s : model.strata().strata) strata.push_back(s.size());
  const auto lin_ranks = complex_ranks(model.linearized(w.entries));
  const auto lin = cohomology_dims(strata, lin_ranks);
  doc["os_dims"] = os.dims();
  doc["cup_ranks"] = ranks;
  doc["aomoto_dims"] = dims;
  doc["linearized_ranks"] = lin_ranks;
  doc["linearized_dims"] = lin;

  std::vector<std::pair<std::string, bool>> verdicts{{"linearization_agrees", lin == dims}};
  if (!w.is_zero()) {
    verdicts.emplace_back("cup_nonzero",
                          std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r > 0; }));
  }
  if (a.is_central() && !w.total().is_zero()) {
    bool exact = std::all_of(dims.begin(), dims.end(), [](long d) { return d == 0; });
    long partial = 0;
    for (std::size_t k = 1; k <= ranks.size(); ++k) {
      partial += (k % 2 == 1 ? 1 : -1) * model.betti()[k - 1];
      exact = exact && static_cast<long>(ranks[k - 1]) == std::abs(partial);
    }
    verdicts.emplace_back("central_exact", exact);
  }
  doc["verdicts"] = verdict_block(verdicts);
  finish(doc, start);
  return doc;
}

Json triple_document(const Arrangement& a, std::size_t h, const CharacterInput& input,
                     int flag_seed) {
  const auto start = Clock::now();
  Json doc = start_document("triple");
  const CharacterSpec chi = make_character(input, a.size());
  const Triple t = make_triple(a, h);
  const TripleReport r = triple_inequality(a, h, chi, flag_seed);
  const AdditivityReport add = betti_additivity(a, h);
  doc["arrangement"] = arrangement_summary(ChamberModel(a, flag_seed));
  doc["character"] = character_json(chi, &input);
  doc["distinguished"] = h + 1;

  Json deleted = Json::object();
  deleted["hyperplanes"] = one_based(t.deleted_indices);
  deleted["essential"] = t.deleted_essential;
  deleted["betti"] = r.b_deleted;
  deleted["h"] = r.h_deleted;
  doc["deleted"] = deleted;

  Json restricted = Json::object();
  Json points = Json::array();
  if (t.restricted) {
    for (std::size_t i = 0; i < t.restricted->size(); ++i) {
      const Hyperplane& pt = (*t.restricted)[i];
      points.push_back({{"position", rational_json(make_rational(pt.offset, pt.normal[0]))},
                        {"hyperplanes", one_based(t.restricted_lines[i])}});
    }
  }
  restricted["points"] = points;
  restricted["betti"] = r.b_restricted;
  restricted["h"] = r.h_restricted;
  restricted["trivial"] = r.restricted_trivial;
  doc["restricted"] = restricted;
  doc["h"] = r.h;
  doc["betti"] = r.b;

  Json degrees = Json::array();
  bool any_trigger = false;
  for (std::size_t k = 0; k < r.h.size(); ++k) {
    degrees.push_back({{"k", k},
                       {"inequality", r.inequality[k]},
                       {"equality_case", r.equality_triggered[k]},
                       {"summands_at_betti", r.equality_holds[k]}});
    any_trigger = any_trigger || r.equality_triggered[k];
  }
  doc["degrees"] = degrees;
  doc["equality_case"] = any_trigger ? "triggered" : "hypothesis not triggered";
  doc["verdicts"] = verdict_block({{"betti_additivity", add.holds},
                                   {"inequality", r.inequality_holds()},
                                   {"equality_case_summands", r.equality_ok()},
                                   {"restricted_closed_form", r.restricted_closed_form}});
  finish(doc, start);
  return doc;
}

Json selftest_document(const std::vector<CorpusEntry>& entries, const SelftestOptions& options) {
  const auto start = Clock::now();
  Json doc = start_document("selftest");
  Json checks = Json::array();
  Json arrangements = Json::array();
  std::size_t failed = 0;
  std::vector<std::pair<std::string, bool>> verdicts;
  for (const CorpusEntry& e : entries) {
    bool ok = true;
    for (const SelftestCheck& c : run_selftest(e.name, e.arrangement, options)) {
      checks.push_back({{"arrangement", c.arrangement},
                        {"check", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail}});
      ok = ok && c.passed;
      failed += !c.passed;
    }
    arrangements.push_back({{"name", e.name}, {"description", e.description},
                            {"n", e.arrangement.size()}, {"dim", e.arrangement.dim()}});
    verdicts.emplace_back(e.name, ok);
  }
  doc["arrangements"] = arrangements;
  doc["checks"] = checks;
  doc["failed_checks"] = failed;
  doc["verdicts"] = verdict_block(verdicts);
  finish(doc, start);
  return doc;
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  const std::string command = doc.value("command", "");
  if (doc.contains("arrangement")) {
    const Json& a = doc["arrangement"];
    out << "arrangement: dim " << a["dim"] << ", n " << a["n"] << ", betti " << join(a["betti"])
        << ", chambers " << a["chambers"]["total"] << " (" << a["chambers"]["bounded"]
        << " bounded), strata " << join(a["chambers"]["per_stratum"]) << "\n";
  }
  if (command == "analyze") {
    out << "vertices:\n";
    for (const Json& v : doc["poset"]["vertices"]) {
      out << "  " << pad(join(v["point"]), 16) << " lines " << pad(join(v["hyperplanes"]), 14)
          << " mu " << v["mobius"] << "\n";
    }
    out << "chambers:\n  idx  sign        stratum  bounded  witness\n";
    for (const Json& c : doc["chambers"]) {
      out << "  " << pad(c["index"].dump(), 4) << " " << pad(c["sign"].get<std::string>(), 11)
          << " " << pad(c["stratum"].dump(), 8) << " " << pad(c["bounded"] ? "yes" : "no", 8)
          << " " << join(c["witness"]) << "\n";
    }
    if (!doc["opposite_pairs"].empty()) {
      out << "opposite pairs (C in bch^1):\n  C    C^v  dim X  deg  expected\n";
      for (const Json& r : doc["opposite_pairs"]) {
        out << "  " << pad(r["chamber"].dump(), 4) << " " << pad(r["opposite"].dump(), 4) << " "
            << pad(r["dim_X"].dump(), 6) << " " << pad(r["degree"].dump(), 4) << " "
            << r["expected"] << "\n";
      }
    }
  } else if (command == "cohomology") {
    out << "character: field " << doc["character"]["field"].get<std::string>() << ", q "
        << join(doc["character"]["monodromies"]) << "\n";
    out << "h = " << join(doc["h"]) << "   ranks " << join(doc["ranks"]) << "\n";
  } else if (command == "sweep") {
    const Json& s = doc["summary"];
    out << "m = " << doc["m"] << " over " << doc["field"].get<std::string>() << ": "
        << s["characters"] << " characters, " << s["nontrivial"] << " nontrivial, "
        << s["failures"] << " failures\n";
    if (doc.contains("characters")) {
      out << "  exponents        h             pass\n";
      for (const Json& c : doc["characters"]) {
        const bool ok = c["strict_or_trivial"] && c["refined_bound"] && c["euler"] &&
                        c["nabla_nonzero"];
        out << "  " << pad(join(c["exponents"]), 16) << " " << pad(join(c["h"]), 13) << " "
            << (ok ? "yes" : "NO") << "\n";
      }
    }
  } else if (command == "aomoto") {
    out << "weights " << join(doc["weights"]) << " over " << doc["field"].get<std::string>()
        << "\n";
    out << "aomoto dims " << join(doc["aomoto_dims"]) << ", cup ranks " << join(doc["cup_ranks"])
        << ", linearized dims " << join(doc["linearized_dims"]) << "\n";
  } else if (command == "triple") {
    out << "delete H" << doc["distinguished"] << ": h " << join(doc["h"]) << ", h' "
        << join(doc["deleted"]["h"]) << ", h'' " << join(doc["restricted"]["h"]) << "\n";
    out << "betti " << join(doc["betti"]) << " = " << join(doc["deleted"]["betti"]) << " + shifted "
        << join(doc["restricted"]["betti"]) << "\n";
    out << "equality case: " << doc["equality_case"].get<std::string>() << "\n";
  } else if (command == "selftest") {
    for (const Json& c : doc["checks"]) {
      out << (c["passed"] ? "PASS " : "FAIL ") << pad(c["arrangement"].get<std::string>(), 16)
          << pad(c["check"].get<std::string>(), 22) << c["detail"].get<std::string>() << "\n";
    }
  }
  out << "verdicts:";
  for (const auto& [name, ok] : doc["verdicts"].items()) {
    out << " " << name << "=" << (ok.get<bool>() ? "pass" : "FAIL");
  }
  out << "\n" << (doc["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace arrcoh
