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

#include "arrcoh/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "arrcoh/error.hpp"

namespace arrcoh {

ExactMatrix::ExactMatrix(const FieldDescriptor& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElem::zero(field)) {}

ExactMatrix ExactMatrix::from_rows(const FieldDescriptor& field,
                                   const std::vector<std::vector<FieldElem>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, FieldElem value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (!(value.field() == field_)) throw FieldError("matrix entry from a different field");
  entries_[r * cols_ + c] = std::move(value);
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const FieldElem& x) { return x.is_zero(); });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field_ == b.field_)) throw FieldError("matrix product across fields");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::size_t matrix_rank(const ExactMatrix& a) {
  ExactMatrix m = a;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    }
    const FieldElem inv = m(rank, col).inverse();
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const FieldElem factor = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace arrcoh
