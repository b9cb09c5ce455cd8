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

#ifndef ARRCOH_IO_HPP_
#define ARRCOH_IO_HPP_

#include <string>

#include "arrcoh/arrangement.hpp"

namespace arrcoh {

// Text format:
//
//   # comment
//   dim 2
//   1 0 0      # a1 a2 c  means  a1 x + a2 y = c
//   0 1 0
//
// In dimension 1 each line is "a1 c". Entries are integers. Throws ParseError
// (with a 1-based line number) on malformed input, zero normals and repeated
// hyperplanes, and ArrangementError on an empty or non-essential arrangement.
Arrangement parse_arrangement(const std::string& text);

// Reads and parses a file; ParseError with line 0 if it cannot be opened.
Arrangement read_arrangement_file(const std::string& path);

// Canonical text of a normalized arrangement; parses back to an equal one.
std::string format_arrangement(const Arrangement& a);

}  // namespace arrcoh

#endif  // ARRCOH_IO_HPP_
