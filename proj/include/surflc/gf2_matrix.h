// Copyright 2026 The surflc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SURFLC_GF2_MATRIX_H
#define SURFLC_GF2_MATRIX_H

#include <optional>
#include <vector>

#include "surflc/bit_vec.h"

namespace surflc {

/// Dense bit-packed matrix over GF(2), stored by rows.
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(size_t num_rows, size_t num_cols);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }

    bool get(size_t r, size_t c) const {
        return rows_[r][c];
    }
    void set(size_t r, size_t c, bool value = true) {
        rows_[r].set(c, value);
    }
    const BitVec &row(size_t r) const {
        return rows_[r];
    }
    BitVec &row(size_t r) {
        return rows_[r];
    }
    void append_row(BitVec row);

    Gf2Matrix transposed() const;
    Gf2Matrix operator*(const Gf2Matrix &rhs) const;
    /// Matrix-vector product; `v` has `num_cols()` bits.
    BitVec apply(const BitVec &v) const;
    /// The submatrix made of the rows whose index is set in `mask`, in order.
    Gf2Matrix select_rows(const BitVec &mask) const;
    bool is_zero() const;

    size_t rank() const;
    /// Canonical solution of `M x = b`: the reduced echelon form is built with
    /// the lowest-index pivot in each column and every free variable is zero.
    std::optional<BitVec> solve(const BitVec &b) const;
    /// Basis of `{x : M x = 0}`, one vector per free column in ascending order.
    std::vector<BitVec> kernel_basis() const;

    bool operator==(const Gf2Matrix &other) const = default;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Reduced row echelon form of a list of equal-length vectors.
struct RowEchelon {
    std::vector<BitVec> rows;
    std::vector<size_t> pivots;
};
RowEchelon row_echelon(std::vector<BitVec> rows);

}  // namespace surflc

#endif
