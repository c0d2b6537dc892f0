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

#ifndef SURFLC_BIT_VEC_H
#define SURFLC_BIT_VEC_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace surflc {

/// Fixed-length packed vector over GF(2).
///
/// Bits past `size()` in the last word are kept zero so that word-level
/// comparisons, popcounts and hashes need no masking.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }
    static BitVec from_indices(size_t num_bits, const std::vector<size_t> &indices);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }

    bool operator[](size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value = true) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
    }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    /// Clears every bit that is set in `other`.
    BitVec &and_not(const BitVec &other);
    BitVec operator^(const BitVec &other) const;
    BitVec operator&(const BitVec &other) const;
    BitVec operator|(const BitVec &other) const;
    /// Complement within `size()`.
    BitVec operator~() const;

    bool operator==(const BitVec &other) const = default;
    bool operator<(const BitVec &other) const;

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Parity of the inner product.
    bool dot(const BitVec &other) const;
    bool intersects(const BitVec &other) const;
    bool is_subset_of(const BitVec &other) const;

    /// Index of the lowest set bit, or `size()` if none.
    size_t first_set() const;
    /// Index of the lowest set bit strictly above `k`, or `size()` if none.
    size_t next_set(size_t k) const;
    std::vector<size_t> indices() const;

    template <typename F>
    void for_each_set(F &&f) const {
        for (size_t w = 0; w < words_.size(); w++) {
            uint64_t v = words_[w];
            while (v) {
                f(w * 64 + std::countr_zero(v));
                v &= v - 1;
            }
        }
    }

    const std::vector<uint64_t> &words() const {
        return words_;
    }
    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace surflc

template <>
struct std::hash<surflc::BitVec> {
    size_t operator()(const surflc::BitVec &v) const noexcept;
};

#endif
