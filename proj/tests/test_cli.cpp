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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ARRCOH_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& name) {
  return std::string(ARRCOH_CORPUS_DIR) + "/" + name + ".arr";
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/arrcoh_cli_" + name + ".arr";
  std::ofstream(path) << text;
  return path;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("successful commands exit 0 with a JSON report") {
  const Run a = run("--json analyze " + corpus("braid") + " --seed 8");
  CHECK(a.code == 0);
  CHECK(json_of(a).at("arrangement").at("flag_seed") == 8);

  const Run c = run("cohomology " + corpus("generic3") + " --m 2 --exponents 1,1,1 --json");
  CHECK(c.code == 0);
  CHECK(json_of(c).at("h") == nlohmann::json::array({0, 0, 1}));

  const Run p = run("--json cohomology " + corpus("generic3") + " --m 2 --exponents 1,1,1 --prime 5");
  CHECK(p.code == 0);
  CHECK(json_of(p).at("h") == nlohmann::json::array({0, 0, 1}));

  const Run r = run("--json cohomology " + corpus("cross") + " --prime 11 --roots 2,1");
  CHECK(r.code == 0);

  const Run s = run("--json sweep " + corpus("pencil3_plus1") + " --m 2 --summary");
  CHECK(s.code == 0);
  CHECK(json_of(s).at("summary").at("characters") == 16);

  const Run w = run("--json aomoto " + corpus("pencil3") + " --weights 1,1,1");
  CHECK(w.code == 0);
  CHECK(json_of(w).at("passed") == true);

  const Run t = run("--json triple " + corpus("generic3") + " --delete 3 --m 2 --exponents 1,1,0");
  CHECK(t.code == 0);
  CHECK(json_of(t).at("distinguished") == 3);

  const Run text = run("cohomology " + corpus("generic3"));
  CHECK(text.code == 0);
  CHECK_FALSE(text.out.empty());
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("analyze /nonexistent.arr").code == 2);
  CHECK(run("sweep " + corpus("cross")).code == 2);
  CHECK(run("cohomology " + corpus("cross") + " --roots 2,1").code == 2);
  CHECK(run("cohomology " + corpus("cross") + " --m 2 --exponents 1").code == 2);
  CHECK(run("cohomology " + corpus("cross") + " --m 2 --exponents 1,1 --prime 7").code == 2);
  CHECK(run("triple " + corpus("generic3") + " --delete 3 --m 2 --exponents 1,1,1").code == 2);
  CHECK(run("triple " + corpus("generic3") + " --delete 9").code == 2);
  CHECK(run("aomoto " + corpus("cross") + " --weights 1,x").code == 2);
  CHECK(run("sweep " + corpus("near_pencil5") + " --m 4 --limit 10").code == 2);
  CHECK(run("analyze " + temp_file("bad", "dim 2\n1 0 0\n1 q 0\n")).code == 2);
  CHECK(run("analyze " + temp_file("dup", "dim 2\n1 0 0\n0 1 0\n3 0 0\n")).code == 2);
  CHECK(run("analyze " + temp_file("par", "dim 2\n1 0 0\n1 0 1\n")).code == 2);
}

TEST_CASE("selftest on one file") {
  const Run r = run("--json selftest " + corpus("cross"));
  CHECK(r.code == 0);
  CHECK(json_of(r).at("passed") == true);
}
