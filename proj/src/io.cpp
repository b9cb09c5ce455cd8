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

#include "arrcoh/io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <vector>

#include "arrcoh/error.hpp"

namespace arrcoh {
namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Integer parse_integer(const std::string& tok, std::size_t line) {
  static const std::regex kInteger("[+-]?[0-9]+");
  if (!std::regex_match(tok, kInteger)) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return Integer(tok[0] == '+' ? tok.substr(1) : tok, 10);
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  int dim = 0;
  std::vector<HyperplaneEquation> eqs;
  std::map<std::pair<std::vector<Integer>, Integer>, std::size_t> seen;
  while (std::getline(in, raw)) {
    ++line;
    const std::vector<std::string> toks = tokens_of(raw);
    if (toks.empty()) continue;
    if (dim == 0) {
      if (toks.size() != 2 || toks[0] != "dim") throw ParseError(line, "expected header 'dim <1|2>'");
      if (toks[1] == "1") {
        dim = 1;
      } else if (toks[1] == "2") {
        dim = 2;
      } else {
        throw ParseError(line, "dimension must be 1 or 2, got '" + toks[1] + "'");
      }
      continue;
    }
    if (toks.size() != static_cast<std::size_t>(dim) + 1) {
      throw ParseError(line, "expected " + std::to_string(dim + 1) + " integers, got " +
                                 std::to_string(toks.size()));
    }
    HyperplaneEquation eq;
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      eq.normal.push_back(Rational(parse_integer(toks[i], line)));
      if (eq.normal.back() != 0) zero = false;
    }
    eq.offset = Rational(parse_integer(toks[dim], line));
    if (zero) throw ParseError(line, "zero normal vector");
    const Hyperplane h = normalize_hyperplane(eq);
    auto [it, inserted] = seen.emplace(std::make_pair(h.normal, h.offset), line);
    if (!inserted) {
      throw ParseError(line, "repeats the hyperplane on line " + std::to_string(it->second));
    }
    eqs.push_back(std::move(eq));
  }
  if (dim == 0) throw ParseError(line, "missing header 'dim <1|2>'");
  return normalize_arrangement(dim, eqs);
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::string format_arrangement(const Arrangement& a) {
  std::string out = "dim " + std::to_string(a.dim()) + "\n";
  for (const Hyperplane& h : a.hyperplanes()) {
    for (const Integer& x : h.normal) out += x.get_str() + " ";
    out += h.offset.get_str() + "\n";
  }
  return out;
}

}  // namespace arrcoh
