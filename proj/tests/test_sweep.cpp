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

#include "arrcoh/sweep.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace testing;

TEST_CASE("default primes") {
  CHECK(default_prime(2) == 5);
  CHECK(default_prime(3) == 7);
  CHECK(default_prime(4) == 17);
  for (int m = 2; m <= 12; ++m) {
    const std::uint64_t p = default_prime(m);
    CHECK((p - 1) % static_cast<std::uint64_t>(2 * m) == 0);
    CHECK(is_prime(p));
    for (std::uint64_t q = 2; q < p; ++q) CHECK_FALSE((is_prime(q) && (q - 1) % (2 * m) == 0));
  }
}

TEST_CASE("lexicographic enumeration") {
  CHECK(exponents_at(0, 3, 2) == std::vector<std::int64_t>{0, 0});
  CHECK(exponents_at(1, 3, 2) == std::vector<std::int64_t>{0, 1});
  CHECK(exponents_at(3, 3, 2) == std::vector<std::int64_t>{1, 0});
  CHECK(exponents_at(8, 3, 2) == std::vector<std::int64_t>{2, 2});
  const SweepReport r = run_sweep(SweepConfig{corpus("cross"), 3});
  REQUIRE(r.results.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) CHECK(r.results[i].exponents == exponents_at(i, 3, 2));
}

TEST_CASE("generic3 at m = 2") {
  const SweepReport r = run_sweep(SweepConfig{corpus("generic3"), 2});
  CHECK(r.results.size() == 8);
  CHECK(r.trivial_count == 1);
  CHECK(r.nontrivial_count == 7);
  CHECK(r.strict_pass == 8);
  CHECK(r.passed());
  CHECK(r.results[0].trivial);
  CHECK(r.results[0].h == std::vector<long>{1, 3, 3});
  CHECK(r.results[7].h == std::vector<long>{0, 0, 1});
}

TEST_CASE("pencil3 at m = 3") {
  const SweepReport r = run_sweep(SweepConfig{corpus("pencil3"), 3});
  CHECK(r.results.size() == 27);
  CHECK(r.nontrivial_count == 26);
  CHECK(r.passed());
  for (const CharacterResult& c : r.results) {
    if (!c.trivial) CHECK(c.h[1] <= 1);
  }
}

TEST_CASE("cross: nontrivial characters are acyclic") {
  for (int m : {2, 3, 4}) {
    const SweepReport r = run_sweep(SweepConfig{corpus("cross"), m});
    CHECK(r.passed());
    for (const CharacterResult& c : r.results) {
      if (!c.trivial) CHECK(c.h == std::vector<long>{0, 0, 0});
    }
  }
}

TEST_CASE("Euler characteristic is constant") {
  for (const CorpusEntry& e : builtin_corpus()) {
    const SweepReport r = run_sweep(SweepConfig{e.arrangement, 2});
    long chi = 0;
    for (std::size_t k = 0; k < r.betti.size(); ++k) chi += (k % 2 ? -1 : 1) * r.betti[k];
    for (const CharacterResult& c : r.results) {
      long x = 0;
      for (std::size_t k = 0; k < c.h.size(); ++k) x += (k % 2 ? -1 : 1) * c.h[k];
      CHECK(x == chi);
      CHECK(c.passed());
    }
    CHECK(r.euler_pass == r.results.size());
  }
}

TEST_CASE("guards and field selection") {
  SweepConfig c{corpus("near_pencil5"), 3};
  c.limit = 100;
  CHECK_THROWS_AS(run_sweep(c), ArrangementError);
  CHECK_THROWS_AS(run_sweep(SweepConfig{corpus("cross"), 1}), ArrangementError);
  SweepConfig bad{corpus("cross"), 2, FieldMode::kPrime, 7};
  CHECK_THROWS_AS(run_sweep(bad), FieldError);
  CHECK(sweep_field(SweepConfig{corpus("cross"), 3}).to_string() == "Q(zeta_6)");
  CHECK(sweep_field(SweepConfig{corpus("cross"), 3, FieldMode::kPrime}).to_string() == "F_7");
  CHECK(sweep_field(SweepConfig{corpus("cross"), 3, FieldMode::kPrime, 13}).to_string() == "F_13");
}

TEST_CASE("thread count does not change results") {
  for (const char* name : {"near_pencil5", "braid"}) {
    SweepConfig one{corpus(name), 3};
    one.threads = 1;
    SweepConfig four = one;
    four.threads = 4;
    const SweepReport a = run_sweep(one);
    const SweepReport b = run_sweep(four);
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
      CHECK(a.results[i].exponents == b.results[i].exponents);
      CHECK(a.results[i].h == b.results[i].h);
      CHECK(a.results[i].ranks == b.results[i].ranks);
    }
  }
}

TEST_CASE("cyclotomic and prime sweeps agree") {
  for (const CorpusEntry& e : builtin_corpus()) {
    for (int m : {2, 3, 4}) {
      const SweepReport q = run_sweep(SweepConfig{e.arrangement, m});
      const SweepReport p = run_sweep(SweepConfig{e.arrangement, m, FieldMode::kPrime});
      REQUIRE(q.results.size() == p.results.size());
      for (std::size_t i = 0; i < q.results.size(); ++i) CHECK(q.results[i].h == p.results[i].h);
    }
  }
}

TEST_CASE("cross validation") {
  for (const CorpusEntry& e : builtin_corpus()) {
    CAPTURE(e.name);
    for (int m : {2, 3}) {
      const CrossValidationReport r = cross_validate(SweepConfig{e.arrangement, m});
      CHECK(r.passed());
      CHECK(r.sampled >= 1);
      CHECK(r.checks > r.sampled);
    }
  }
}
