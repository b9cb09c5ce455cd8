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

#ifndef ARRCOH_MATRIX_HPP_
#define ARRCOH_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "arrcoh/field.hpp"

namespace arrcoh {

// Dense row-major matrix over a single exact field.
class ExactMatrix {
 public:
  ExactMatrix(const FieldDescriptor& field, std::size_t rows, std::size_t cols);
  // rows.size() x rows[0].size(); all rows must have equal length.
  static ExactMatrix from_rows(const FieldDescriptor& field,
                               const std::vector<std::vector<FieldElem>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldDescriptor& field() const { return field_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  // Bounds-checked; stores only elements of this matrix's field.
  void set(std::size_t r, std::size_t c, FieldElem value);

  bool is_zero() const;
  ExactMatrix transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

 private:
  FieldDescriptor field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> entries_;
};

// Rank by Gaussian elimination with exact pivots (first nonzero entry in
// column order), so results are deterministic.
std::size_t matrix_rank(const ExactMatrix& a);

}  // namespace arrcoh

#endif  // ARRCOH_MATRIX_HPP_
