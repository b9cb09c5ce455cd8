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

#ifndef ARRCOH_CORPUS_HPP_
#define ARRCOH_CORPUS_HPP_

#include <string>
#include <vector>

#include "arrcoh/arrangement.hpp"

namespace arrcoh {

struct CorpusEntry {
  std::string name;
  std::string description;
  Arrangement arrangement;
};

// Fixed test corpus: eight line arrangements, a deconed braid arrangement,
// and three point arrangements on a line.
std::vector<CorpusEntry> builtin_corpus();

// Throws ArrangementError for an unknown name.
CorpusEntry corpus_entry(const std::string& name);

}  // namespace arrcoh

#endif  // ARRCOH_CORPUS_HPP_
