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

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "arrcoh/aomoto.hpp"
#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

long alternating_sum(const std::vector<long>& v) {
  long s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * v[k];
  return s;
}

std::uint64_t character_count(const SweepConfig& config) {
  if (config.m < 2) throw ArrangementError("sweep order m must be >= 2");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < config.arrangement.size(); ++i) {
    total *= static_cast<std::uint64_t>(config.m);
    if (total > config.limit) {
      throw ArrangementError(std::to_string(config.m) + "^" +
                             std::to_string(config.arrangement.size()) +
                             " characters exceed the sweep limit " +
                             std::to_string(config.limit));
    }
  }
  return total;
}

std::string label(const std::vector<std::int64_t>& a) {
  std::string s = "a=(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

std::string show(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Runs body(i) for i in [0, count) on a pool of threads; rethrows the first
// exception.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::uint64_t default_prime(int m) {
  if (m < 1) throw FieldError("character order must be >= 1");
  const std::uint64_t step = 2 * static_cast<std::uint64_t>(m);
  for (std::uint64_t p = step + 1;; p += step) {
    if (is_prime(p)) return p;
  }
}

FieldDescriptor sweep_field(const SweepConfig& config) {
  if (config.mode == FieldMode::kCyclotomic) return FieldDescriptor::cyclotomic(2 * config.m);
  const std::uint64_t p = config.prime ? config.prime : default_prime(config.m);
  if (!is_prime(p) || (p - 1) % (2 * static_cast<std::uint64_t>(config.m)) != 0) {
    throw FieldError("prime " + std::to_string(p) + " does not satisfy 2m | p - 1 for m = " +
                     std::to_string(config.m));
  }
  return FieldDescriptor::prime(p);
}

CharacterSpec sweep_character(const SweepConfig& config, const std::vector<std::int64_t>& a) {
  if (config.mode == FieldMode::kCyclotomic) return CharacterSpec::from_exponents(config.m, a);
  return CharacterSpec::from_exponents_prime(sweep_field(config).parameter(), config.m, a);
}

std::vector<std::int64_t> exponents_at(std::uint64_t code, int m, std::size_t n) {
  std::vector<std::int64_t> a(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    a[i] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(m));
    code /= static_cast<std::uint64_t>(m);
  }
  return a;
}

CharacterResult evaluate_character(const ChamberModel& model, const CharacterSpec& chi,
                                   std::vector<std::int64_t> exponents) {
  const CohomologyReport rep = model.cohomology(chi);
  const std::vector<long>& b = model.betti();
  CharacterResult r;
  r.exponents = std::move(exponents);
  r.trivial = chi.is_trivial();
  r.h = rep.h;
  r.ranks = rep.ranks;
  r.nabla_nonzero = rep.nabla_nonzero;
  r.euler_ok = alternating_sum(r.h) == alternating_sum(b);
  if (r.trivial) {
    r.strict_bound = r.h == b;
    r.refined_bound = true;
    r.nabla_ok = true;
    return r;
  }
  r.strict_bound = true;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (r.h[k] >= b[k]) r.strict_bound = false;
  }
  r.refined_bound = true;
  for (std::size_t k = 1; k + 1 < b.size(); ++k) {
    if (r.h[k] > b[k] - 2) r.refined_bound = false;
  }
  r.nabla_ok = std::all_of(r.nabla_nonzero.begin(), r.nabla_nonzero.end(),
                           [](bool nz) { return nz; });
  return r;
}

SweepReport run_sweep(const SweepConfig& config) {
  const std::uint64_t total = character_count(config);
  const ChamberModel model(config.arrangement, config.flag_seed);
  SweepReport report;
  report.m = config.m;
  report.field = sweep_field(config);
  report.flag_seed = config.flag_seed;
  report.betti = model.betti();
  report.results.resize(total);
  const std::size_t n = config.arrangement.size();
  parallel_for(total, config.threads, [&](std::uint64_t code) {
    std::vector<std::int64_t> a = exponents_at(code, config.m, n);
    const CharacterSpec chi = sweep_character(config, a);
    report.results[code] = evaluate_character(model, chi, std::move(a));
  });
  for (const CharacterResult& r : report.results) {
    (r.trivial ? report.trivial_count : report.nontrivial_count)++;
    report.strict_pass += r.strict_bound;
    report.refined_pass += r.refined_bound;
    report.euler_pass += r.euler_ok;
    report.nabla_pass += r.nabla_ok;
    report.failures += !r.passed();
  }
  return report;
}

CrossValidationReport cross_validate(const SweepConfig& config, std::size_t stride) {
  const std::uint64_t total = character_count(config);
  if (stride == 0) stride = static_cast<std::size_t>(std::max<std::uint64_t>(1, total / 64));
  const Arrangement& a = config.arrangement;
  const ChamberModel model(a, config.flag_seed);
  const ChamberModel other_flag(a, config.flag_seed + 7);
  SweepConfig swapped = config;
  swapped.mode = config.mode == FieldMode::kCyclotomic ? FieldMode::kPrime : FieldMode::kCyclotomic;
  const FieldDescriptor prime_field =
      FieldDescriptor::prime(config.mode == FieldMode::kPrime ? sweep_field(config).parameter()
                                                              : default_prime(config.m));
  const OSAlgebra os(a);
  std::vector<std::size_t> strata_dims;
  for (const auto& s : model.strata().strata) strata_dims.push_back(s.size());

  CrossValidationReport report;
  auto check = [&](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.failures.push_back(what);
  };
  for (std::uint64_t code = 0; code < total; code += stride) {
    ++report.sampled;
    const std::vector<std::int64_t> exps = exponents_at(code, config.m, a.size());
    const std::string tag = label(exps);
    const CharacterSpec chi = sweep_character(config, exps);
    const std::vector<long> h = model.cohomology(chi).h;

    const std::vector<long> h_seed = other_flag.cohomology(chi).h;
    check(h_seed == h, tag + ": flag seed change " + show(h) + " vs " + show(h_seed));
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::vector<long> h_flip = model.cohomology(chi.with_root_negated(i)).h;
      check(h_flip == h, tag + ": sign flip of r_" + std::to_string(i + 1) + " " + show(h) +
                             " vs " + show(h_flip));
    }
    check(alternating_sum(h) == alternating_sum(model.betti()), tag + ": Euler identity");
    const std::vector<long> h_field = model.cohomology(sweep_character(swapped, exps)).h;
    check(h_field == h, tag + ": field swap " + show(h) + " vs " + show(h_field));

    for (const FieldDescriptor& field : {FieldDescriptor::rationals(), prime_field}) {
      std::vector<long> w(exps.begin(), exps.end());
      const WeightVector wv = WeightVector::from_integers(field, w);
      const std::vector<long> lin =
          cohomology_dims(strata_dims, complex_ranks(model.linearized(wv.entries)));
      const std::vector<long> ao = cohomology_dims(os.dims(), cup_ranks(os, wv));
      check(lin == ao, tag + ": linearization over " + field.to_string() + " " + show(lin) +
                           " vs aomoto " + show(ao));
    }
  }
  return report;
}

}  // namespace arrcoh
