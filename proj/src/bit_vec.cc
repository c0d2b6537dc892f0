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

#include "surflc/bit_vec.h"

#include <cassert>

using namespace surflc;

BitVec BitVec::from_indices(size_t num_bits, const std::vector<size_t> &indices) {
    BitVec v(num_bits);
    for (size_t k : indices) {
        v.set(k);
    }
    return v;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    assert(num_bits_ == other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    assert(num_bits_ == other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    assert(num_bits_ == other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::and_not(const BitVec &other) {
    assert(num_bits_ == other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= ~other.words_[k];
    }
    return *this;
}

BitVec BitVec::operator^(const BitVec &other) const {
    BitVec r = *this;
    r ^= other;
    return r;
}

BitVec BitVec::operator&(const BitVec &other) const {
    BitVec r = *this;
    r &= other;
    return r;
}

BitVec BitVec::operator|(const BitVec &other) const {
    BitVec r = *this;
    r |= other;
    return r;
}

BitVec BitVec::operator~() const {
    BitVec r = *this;
    for (auto &w : r.words_) {
        w = ~w;
    }
    if (num_bits_ & 63) {
        r.words_.back() &= (uint64_t{1} << (num_bits_ & 63)) - 1;
    }
    return r;
}

bool BitVec::operator<(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    return words_ < other.words_;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec &other) const {
    assert(num_bits_ == other.num_bits_);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

bool BitVec::intersects(const BitVec &other) const {
    assert(num_bits_ == other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k] & other.words_[k]) {
            return true;
        }
    }
    return false;
}

bool BitVec::is_subset_of(const BitVec &other) const {
    assert(num_bits_ == other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k] & ~other.words_[k]) {
            return false;
        }
    }
    return true;
}

size_t BitVec::first_set() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * 64 + std::countr_zero(words_[w]);
        }
    }
    return num_bits_;
}

size_t BitVec::next_set(size_t k) const {
    k++;
    if (k >= num_bits_) {
        return num_bits_;
    }
    size_t w = k >> 6;
    uint64_t v = words_[w] & (~uint64_t{0} << (k & 63));
    while (true) {
        if (v) {
            return w * 64 + std::countr_zero(v);
        }
        w++;
        if (w >= words_.size()) {
            return num_bits_;
        }
        v = words_[w];
    }
}

std::vector<size_t> BitVec::indices() const {
    std::vector<size_t> out;
    for_each_set([&](size_t k) {
        out.push_back(k);
    });
    return out;
}

std::string BitVec::str() const {
    std::string s;
    s.reserve(num_bits_);
    for (size_t k = 0; k < num_bits_; k++) {
        s.push_back((*this)[k] ? '1' : '0');
    }
    return s;
}

size_t std::hash<BitVec>::operator()(const BitVec &v) const noexcept {
    size_t h = v.size() * 0x9E3779B97F4A7C15ULL;
    for (uint64_t w : v.words()) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
