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

// Command-line front end: analyze, cohomology, sweep, aomoto, triple,
// selftest. Exit status 0 when every verdict passes, 1 on a verdict failure,
// 2 on usage, parse, or input errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arrcoh/corpus.hpp"
#include "arrcoh/error.hpp"
#include "arrcoh/io.hpp"
#include "arrcoh/report.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kVerdictFailure = 1;
constexpr int kUsageError = 2;

struct CharacterFlags {
  std::optional<int> m;
  std::vector<std::int64_t> exponents;
  std::optional<std::uint64_t> prime;
  std::vector<std::int64_t> roots;

  arrcoh::CharacterInput input() const { return {m, exponents, prime, roots}; }
};

void add_character_flags(CLI::App* cmd, CharacterFlags& flags) {
  cmd->add_option("--m", flags.m, "Character order: q_i = zeta_m^{a_i}");
  cmd->add_option("--exponents", flags.exponents, "Exponents a_1,...,a_n")->delimiter(',');
  cmd->add_option("--prime", flags.prime, "Work in F_p (requires 2m | p - 1 with --m)");
  cmd->add_option("--roots", flags.roots, "Square roots r_1,...,r_n in F_p")->delimiter(',');
}

int emit(const arrcoh::Json& doc, bool json) {
  if (json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << arrcoh::render_text(doc);
  }
  return doc["passed"].get<bool>() ? kPass : kVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-one local system cohomology of real line arrangement complements"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  int seed = 1;
  app.add_flag("--json", json, "Print the JSON report instead of tables");
  app.add_option("--seed", seed, "Generic flag seed")->check(CLI::PositiveNumber);

  std::string file;
  CharacterFlags chi;

  auto* analyze = app.add_subcommand("analyze", "Poset, Betti numbers, chambers, strata, opposite pairs");
  analyze->add_option("file", file, "Arrangement file")->required();

  auto* cohomology = app.add_subcommand("cohomology", "Twisted cohomology for one character");
  cohomology->add_option("file", file, "Arrangement file")->required();
  add_character_flags(cohomology, chi);

  int sweep_m = 2;
  std::optional<std::uint64_t> sweep_prime;
  std::uint64_t limit = 1000000;
  bool summary_only = false;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "All m^n characters of order dividing m");
  sweep->add_option("file", file, "Arrangement file")->required();
  sweep->add_option("--m", sweep_m, "Character order")->required();
  sweep->add_option("--prime", sweep_prime, "Compute in F_p instead of Q(zeta_2m)");
  sweep->add_option("--limit", limit, "Largest accepted m^n");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");
  sweep->add_flag("--summary", summary_only, "Omit the per-character table");

  std::vector<std::string> weights;
  std::string field_name = "Q";
  auto* aomoto = app.add_subcommand("aomoto", "Aomoto complex for a weight vector");
  aomoto->add_option("file", file, "Arrangement file")->required();
  aomoto->add_option("--weights", weights, "Weights w_1,...,w_n (integers or p/q)")
      ->delimiter(',')
      ->required();
  aomoto->add_option("--field", field_name, "Q or a prime p");

  std::size_t deleted = 0;
  auto* triple = app.add_subcommand("triple", "Deletion-restriction triple");
  triple->add_option("file", file, "Arrangement file")->required();
  triple->add_option("--delete", deleted, "Distinguished hyperplane (1-based)")->required();
  add_character_flags(triple, chi);

  std::string selftest_file;
  auto* selftest = app.add_subcommand("selftest", "Invariant battery on the built-in corpus or a file");
  selftest->add_option("file", selftest_file, "Arrangement file (default: built-in corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (*analyze) return emit(arrcoh::analyze_document(arrcoh::read_arrangement_file(file), seed), json);
    if (*cohomology) {
      return emit(arrcoh::cohomology_document(arrcoh::read_arrangement_file(file), chi.input(), seed),
                  json);
    }
    if (*sweep) {
      arrcoh::SweepConfig config{arrcoh::read_arrangement_file(file), sweep_m};
      if (sweep_prime) {
        config.mode = arrcoh::FieldMode::kPrime;
        config.prime = *sweep_prime;
      }
      config.limit = limit;
      config.flag_seed = seed;
      config.threads = threads;
      return emit(arrcoh::sweep_document(config, !summary_only), json);
    }
    if (*aomoto) {
      arrcoh::FieldDescriptor field = arrcoh::FieldDescriptor::rationals();
      if (field_name != "Q") {
        std::uint64_t p = 0;
        try {
          p = std::stoull(field_name);
        } catch (const std::exception&) {
          throw arrcoh::FieldError("--field must be Q or a prime, got '" + field_name + "'");
        }
        if (!arrcoh::is_prime(p)) throw arrcoh::FieldError(field_name + " is not prime");
        field = arrcoh::FieldDescriptor::prime(p);
      }
      return emit(arrcoh::aomoto_document(arrcoh::read_arrangement_file(file), weights, field, seed),
                  json);
    }
    if (*triple) {
      const arrcoh::Arrangement a = arrcoh::read_arrangement_file(file);
      if (deleted < 1 || deleted > a.size()) {
        throw arrcoh::ArrangementError("--delete must be between 1 and " + std::to_string(a.size()));
      }
      return emit(arrcoh::triple_document(a, deleted - 1, chi.input(), seed), json);
    }
    if (*selftest) {
      std::vector<arrcoh::CorpusEntry> entries;
      if (selftest_file.empty()) {
        entries = arrcoh::builtin_corpus();
      } else {
        entries.push_back({selftest_file, selftest_file, arrcoh::read_arrangement_file(selftest_file)});
      }
      return emit(arrcoh::selftest_document(entries, {}), json);
    }
  } catch (const arrcoh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const arrcoh::InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kVerdictFailure;
  }
  return kUsageError;
}
