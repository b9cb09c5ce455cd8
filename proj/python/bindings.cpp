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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrcoh/arrangement.hpp"
#include "arrcoh/error.hpp"
#include "arrcoh/io.hpp"
#include "arrcoh/report.hpp"

namespace py = pybind11;

namespace {

using arrcoh::CharacterInput;

CharacterInput character(std::optional<int> m, std::vector<std::int64_t> exponents,
                         std::optional<std::uint64_t> prime, std::vector<std::int64_t> roots) {
  return {m, std::move(exponents), prime, std::move(roots)};
}

arrcoh::FieldDescriptor field_of(const std::string& name) {
  if (name == "Q") return arrcoh::FieldDescriptor::rationals();
  std::uint64_t p = 0;
  try {
    p = std::stoull(name);
  } catch (const std::exception&) {
    throw arrcoh::FieldError("field must be Q or a prime, got '" + name + "'");
  }
  if (!arrcoh::is_prime(p)) throw arrcoh::FieldError(name + " is not prime");
  return arrcoh::FieldDescriptor::prime(p);
}

}  // namespace

PYBIND11_MODULE(_arrcoh, mod) {
  mod.doc() = "Exact twisted cohomology of real line and point arrangements (JSON reports).";

  py::register_exception<arrcoh::ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<arrcoh::InternalError>(mod, "InternalError", PyExc_RuntimeError);

  mod.attr("schema_version") = arrcoh::kSchemaVersion;

  mod.def("normalize", [](const std::string& text) {
    return arrcoh::format_arrangement(arrcoh::parse_arrangement(text));
  }, py::arg("text"), "Canonical text of an arrangement.");

  mod.def("betti", [](const std::string& text) {
    return arrcoh::betti(arrcoh::parse_arrangement(text));
  }, py::arg("text"));

  mod.def("analyze", [](const std::string& text, int seed) {
    return arrcoh::analyze_document(arrcoh::parse_arrangement(text), seed).dump();
  }, py::arg("text"), py::arg("seed") = 1);

  mod.def("cohomology",
          [](const std::string& text, std::optional<int> m, std::vector<std::int64_t> exponents,
             std::optional<std::uint64_t> prime, std::vector<std::int64_t> roots, int seed) {
            return arrcoh::cohomology_document(arrcoh::parse_arrangement(text),
                                               character(m, exponents, prime, roots), seed)
                .dump();
          },
          py::arg("text"), py::arg("m") = py::none(), py::arg("exponents") = std::vector<std::int64_t>{},
          py::arg("prime") = py::none(), py::arg("roots") = std::vector<std::int64_t>{},
          py::arg("seed") = 1);

  mod.def("sweep",
          [](const std::string& text, int m, std::optional<std::uint64_t> prime, bool characters,
             std::uint64_t limit, unsigned threads, int seed) {
            arrcoh::SweepConfig config{arrcoh::parse_arrangement(text), m};
            if (prime) {
              config.mode = arrcoh::FieldMode::kPrime;
              config.prime = *prime;
            }
            config.limit = limit;
            config.threads = threads;
            config.flag_seed = seed;
            py::gil_scoped_release release;
            return arrcoh::sweep_document(config, characters).dump();
          },
          py::arg("text"), py::arg("m"), py::arg("prime") = py::none(),
          py::arg("characters") = true, py::arg("limit") = 1000000, py::arg("threads") = 0,
          py::arg("seed") = 1);

  mod.def("aomoto",
          [](const std::string& text, std::vector<std::string> weights, const std::string& field,
             int seed) {
            return arrcoh::aomoto_document(arrcoh::parse_arrangement(text), weights,
                                           field_of(field), seed)
                .dump();
          },
          py::arg("text"), py::arg("weights"), py::arg("field") = "Q", py::arg("seed") = 1);

  mod.def("triple",
          [](const std::string& text, std::size_t delete_, std::optional<int> m,
             std::vector<std::int64_t> exponents, std::optional<std::uint64_t> prime,
             std::vector<std::int64_t> roots, int seed) {
            const arrcoh::Arrangement a = arrcoh::parse_arrangement(text);
            if (delete_ < 1 || delete_ > a.size()) {
              throw arrcoh::ArrangementError("delete must be between 1 and " +
                                             std::to_string(a.size()));
            }
            return arrcoh::triple_document(a, delete_ - 1, character(m, exponents, prime, roots),
                                           seed)
                .dump();
          },
          py::arg("text"), py::arg("delete"), py::arg("m") = py::none(),
          py::arg("exponents") = std::vector<std::int64_t>{}, py::arg("prime") = py::none(),
          py::arg("roots") = std::vector<std::int64_t>{}, py::arg("seed") = 1);

  mod.def("corpus", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const arrcoh::CorpusEntry& e : arrcoh::builtin_corpus()) {
      out.emplace_back(e.name, arrcoh::format_arrangement(e.arrangement));
    }
    return out;
  }, "Built-in arrangements as (name, text) pairs.");
}
