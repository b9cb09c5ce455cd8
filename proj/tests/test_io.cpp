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

#include <filesystem>

#include "arrcoh/io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace testing;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_arrangement(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("parsing") {
  const Arrangement a = parse_arrangement("# three lines\n\ndim 2\n1 0 0\n0 1 0  # y\n1 1 1\n");
  CHECK(a == corpus("generic3"));
  CHECK(parse_arrangement("dim 1\n1 0\n1 1\n") == points({0, 1}));
  CHECK(parse_arrangement("dim 2\n2 0 4\n0 -3 0\n") == lines({{1, 0, 2}, {0, 1, 0}}));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("dim 3\n1 0 0 0\n") == 1);
  CHECK(parse_error_line("1 0 0\n") == 1);
  CHECK(parse_error_line("# c\ndim 2\n1 0\n") == 3);
  CHECK(parse_error_line("dim 2\n1 0 0\n1 x 0\n") == 3);
  CHECK(parse_error_line("dim 2\n1 0 0\n0 0 1\n") == 3);
  CHECK(parse_error_line("dim 2\n1 0 0\n0 1 0\n2 0 0\n") == 4);
  CHECK(parse_error_line("dim 2\n1 0 0\n0 1 0\n1.5 1 0\n") == 4);
  try {
    parse_arrangement("dim 2\n1 0 0\n0 1 0\n2 0 0\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_arrangement("dim 2\n1 0 0\n1 0 1\n"), ArrangementError);
  CHECK_THROWS_AS(parse_arrangement("dim 2\n"), ArrangementError);
  CHECK_THROWS_AS(read_arrangement_file("/nonexistent/file.arr"), ParseError);
}

TEST_CASE("format round trip") {
  std::vector<Arrangement> all = random_arrangements(81, 50, 6, 4);
  for (const CorpusEntry& e : builtin_corpus()) all.push_back(e.arrangement);
  for (const Arrangement& a : all) {
    const std::string text = format_arrangement(a);
    CHECK(parse_arrangement(text) == a);
    CHECK(format_arrangement(parse_arrangement(text)) == text);
  }
  CHECK(format_arrangement(points({0, 2})) == "dim 1\n1 0\n1 2\n");
}

TEST_CASE("corpus files match the builtin corpus") {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ARRCOH_CORPUS_DIR)) {
    if (entry.path().extension() != ".arr") continue;
    ++files;
    CAPTURE(entry.path().string());
    CHECK(read_arrangement_file(entry.path().string()) ==
          corpus_entry(entry.path().stem().string()).arrangement);
  }
  CHECK(files == builtin_corpus().size());
}
