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

#include "surflc/gf2_matrix.h"

#include <stdexcept>

using namespace surflc;

Gf2Matrix::Gf2Matrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVec(num_cols)) {
}

void Gf2Matrix::append_row(BitVec row) {
    if (row.size() != num_cols_) {
        if (rows_.empty() && num_cols_ == 0) {
            num_cols_ = row.size();
        } else {
            throw std::invalid_argument("Gf2Matrix::append_row: width mismatch");
        }
    }
    rows_.push_back(std::move(row));
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        rows_[r].for_each_set([&](size_t c) {
            t.rows_[c].set(r);
        });
    }
    return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix &rhs) const {
    if (num_cols_ != rhs.num_rows()) {
        throw std::invalid_argument("Gf2Matrix::operator*: shape mismatch");
    }
    Gf2Matrix out(rows_.size(), rhs.num_cols());
    for (size_t r = 0; r < rows_.size(); r++) {
        rows_[r].for_each_set([&](size_t k) {
            out.rows_[r] ^= rhs.rows_[k];
        });
    }
    return out;
}

BitVec Gf2Matrix::apply(const BitVec &v) const {
    if (v.size() != num_cols_) {
        throw std::invalid_argument("Gf2Matrix::apply: shape mismatch");
    }
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

Gf2Matrix Gf2Matrix::select_rows(const BitVec &mask) const {
    Gf2Matrix out(0, num_cols_);
    mask.for_each_set([&](size_t r) {
        out.rows_.push_back(rows_[r]);
    });
    return out;
}

bool Gf2Matrix::is_zero() const {
    for (const auto &r : rows_) {
        if (r.any()) {
            return false;
        }
    }
    return true;
}

RowEchelon surflc::row_echelon(std::vector<BitVec> rows) {
    RowEchelon out;
    if (rows.empty()) {
        return out;
    }
    size_t width = rows[0].size();
    size_t next = 0;
    for (size_t c = 0; c < width && next < rows.size(); c++) {
        size_t p = next;
        while (p < rows.size() && !rows[p][c]) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[p]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r][c]) {
                rows[r] ^= rows[next];
            }
        }
        out.pivots.push_back(c);
        next++;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

size_t Gf2Matrix::rank() const {
    // Elimination on whichever orientation has fewer bits per row.
    if (rows_.size() < num_cols_) {
        return row_echelon(transposed().rows_).pivots.size();
    }
    return row_echelon(rows_).pivots.size();
}

std::optional<BitVec> Gf2Matrix::solve(const BitVec &b) const {
    if (b.size() != rows_.size()) {
        throw std::invalid_argument("Gf2Matrix::solve: rhs length mismatch");
    }
    // Augmented rows [M | b] with the rhs in the final column.
    std::vector<BitVec> aug;
    aug.reserve(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        BitVec a(num_cols_ + 1);
        rows_[r].for_each_set([&](size_t c) {
            a.set(c);
        });
        if (b[r]) {
            a.set(num_cols_);
        }
        aug.push_back(std::move(a));
    }
    RowEchelon ech = row_echelon(std::move(aug));
    BitVec x(num_cols_);
    for (size_t k = 0; k < ech.pivots.size(); k++) {
        if (ech.pivots[k] == num_cols_) {
            return std::nullopt;
        }
        if (ech.rows[k][num_cols_]) {
            x.set(ech.pivots[k]);
        }
    }
    return x;
}

std::vector<BitVec> Gf2Matrix::kernel_basis() const {
    RowEchelon ech = row_echelon(rows_);
    std::vector<char> is_pivot(num_cols_, 0);
    for (size_t p : ech.pivots) {
        is_pivot[p] = 1;
    }
    std::vector<BitVec> basis;
    for (size_t free = 0; free < num_cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVec v(num_cols_);
        v.set(free);
        for (size_t k = 0; k < ech.pivots.size(); k++) {
            if (ech.rows[k][free]) {
                v.set(ech.pivots[k]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}
