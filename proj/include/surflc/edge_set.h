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

#ifndef SURFLC_EDGE_SET_H
#define SURFLC_EDGE_SET_H

#include <cstdint>
#include <vector>

#include "surflc/bit_vec.h"

namespace surflc {

/// A subset of the edges of a complex (equivalently, of the qubits of a
/// circuit acting on that complex). Cardinality is cached.
class EdgeSet {
   public:
    EdgeSet() = default;
    explicit EdgeSet(size_t universe) : mask_(universe) {
    }
    explicit EdgeSet(BitVec mask) : mask_(std::move(mask)), count_(mask_.popcount()) {
    }
    static EdgeSet of(size_t universe, const std::vector<uint32_t> &members);
    static EdgeSet full(size_t universe);

    size_t universe() const {
        return mask_.size();
    }
    size_t size() const {
        return count_;
    }
    bool empty() const {
        return count_ == 0;
    }
    bool contains(uint32_t e) const {
        return mask_[e];
    }
    void insert(uint32_t e) {
        if (!mask_[e]) {
            mask_.set(e);
            count_++;
        }
    }
    void erase(uint32_t e) {
        if (mask_[e]) {
            mask_.set(e, false);
            count_--;
        }
    }

    const BitVec &mask() const {
        return mask_;
    }
    std::vector<uint32_t> members() const;

    EdgeSet operator|(const EdgeSet &other) const {
        return EdgeSet(mask_ | other.mask_);
    }
    EdgeSet operator&(const EdgeSet &other) const {
        return EdgeSet(mask_ & other.mask_);
    }
    EdgeSet operator^(const EdgeSet &other) const {
        return EdgeSet(mask_ ^ other.mask_);
    }
    EdgeSet operator-(const EdgeSet &other) const {
        BitVec m = mask_;
        m.and_not(other.mask_);
        return EdgeSet(std::move(m));
    }
    EdgeSet complement() const {
        return EdgeSet(~mask_);
    }
    bool intersects(const EdgeSet &other) const {
        return mask_.intersects(other.mask_);
    }
    bool is_subset_of(const EdgeSet &other) const {
        return mask_.is_subset_of(other.mask_);
    }

    bool operator==(const EdgeSet &other) const {
        return mask_ == other.mask_;
    }

   private:
    BitVec mask_;
    size_t count_ = 0;
};

}  // namespace surflc

#endif
