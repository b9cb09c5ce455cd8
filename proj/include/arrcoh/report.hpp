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

#ifndef ARRCOH_REPORT_HPP_
#define ARRCOH_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrcoh/arrangement.hpp"
#include "arrcoh/complex.hpp"
#include "arrcoh/corpus.hpp"
#include "arrcoh/selftest.hpp"
#include "arrcoh/sweep.hpp"
#include "json.hpp"

namespace arrcoh {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Character as given on the command line: exponents a_i with q_i = zeta_m^{a_i}
// (in Q(zeta_{2m}), or in F_p when prime is set), or raw square roots r_i in
// F_p. Missing exponents mean the trivial character.
struct CharacterInput {
  std::optional<int> m;
  std::vector<std::int64_t> exponents;
  std::optional<std::uint64_t> prime;
  std::vector<std::int64_t> roots;
};

// Throws ArrangementError or FieldError on an infeasible combination.
CharacterSpec make_character(const CharacterInput& input, std::size_t n);

// Exact JSON renderings. Rationals are strings "p/q", F_p residues are
// integers, cyclotomic elements are coefficient lists (strings) in the power
// basis of zeta.
Json field_elem_json(const FieldElem& x);
Json arrangement_summary(const ChamberModel& model);

// Report documents. Each carries "command", "schema_version", "arrangement",
// "verdicts" (name -> bool), "passed" and "timing_ms".
Json analyze_document(const Arrangement& a, int flag_seed = 1);
Json cohomology_document(const Arrangement& a, const CharacterInput& chi, int flag_seed = 1);
Json sweep_document(const SweepConfig& config, bool include_characters = true);
// Weights are integers or fractions "p/q".
Json aomoto_document(const Arrangement& a, const std::vector<std::string>& weights,
                     const FieldDescriptor& field, int flag_seed = 1);
// h is 0-based.
Json triple_document(const Arrangement& a, std::size_t h, const CharacterInput& chi,
                     int flag_seed = 1);
Json selftest_document(const std::vector<CorpusEntry>& entries, const SelftestOptions& options);

// Plain-text tables for a report document.
std::string render_text(const Json& doc);

}  // namespace arrcoh

#endif  // ARRCOH_REPORT_HPP_
