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

#ifndef SURFLC_PAULI_H
#define SURFLC_PAULI_H

#include <string>

#include "surflc/bit_vec.h"
#include "surflc/circuit.h"
#include "surflc/edge_set.h"

namespace surflc {

/// i^phase times a tensor product of Paulis. Qubit q carries X when only
/// x[q] is set, Z when only z[q] is set and Y when both are.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t n) : x_(n), z_(n) {
    }
    PauliOperator(BitVec x, BitVec z, uint8_t phase = 0);

    static PauliOperator identity(size_t n) {
        return PauliOperator(n);
    }
    static PauliOperator x_on(const EdgeSet &s);
    static PauliOperator z_on(const EdgeSet &s);
    /// Parses strings like "+XZ_Y" or "-iIXZ" ('_' and 'I' are identity).
    static PauliOperator from_string(const std::string &text);

    size_t num_qubits() const {
        return x_.size();
    }
    const BitVec &x() const {
        return x_;
    }
    const BitVec &z() const {
        return z_;
    }
    BitVec &x() {
        return x_;
    }
    BitVec &z() {
        return z_;
    }
    /// Exponent of i, in 0..3.
    uint8_t phase() const {
        return phase_;
    }
    void set_phase(uint8_t k) {
        phase_ = k & 3;
    }
    /// Adds k to the exponent of i.
    void add_phase(uint8_t k) {
        phase_ = (phase_ + k) & 3;
    }
    /// Hermitian operators have phase 0 or 2.
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    bool negative() const {
        return phase_ == 2;
    }
    EdgeSet support() const {
        return EdgeSet(x_ | z_);
    }
    size_t weight() const {
        return (x_ | z_).popcount();
    }
    bool is_identity() const {
        return x_.none() && z_.none();
    }

    bool commutes(const PauliOperator &other) const;
    /// this = this * rhs.
    PauliOperator &operator*=(const PauliOperator &rhs);
    PauliOperator operator*(const PauliOperator &rhs) const;
    PauliOperator adjoint() const;

    /// Replaces this operator P by G P G^dagger.
    void conjugate_by(const Gate &gate);
    /// Replaces this operator P by U P U^dagger.
    void conjugate_by(const Circuit &u);

    bool operator==(const PauliOperator &other) const = default;
    std::string str() const;

   private:
    BitVec x_, z_;
    uint8_t phase_ = 0;
};

}  // namespace surflc

#endif
