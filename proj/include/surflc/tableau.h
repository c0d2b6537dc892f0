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

#ifndef SURFLC_TABLEAU_H
#define SURFLC_TABLEAU_H

#include <vector>

#include "surflc/circuit.h"
#include "surflc/pauli.h"

namespace surflc {

/// A pure stabilizer state on n qubits, kept as n destabilizer rows and n
/// stabilizer rows. Stabilizer signs are exact; the state is defined only up
/// to a global phase.
class StabilizerTableau {
   public:
    /// The state |0...0>.
    explicit StabilizerTableau(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<PauliOperator> &stabilizers() const {
        return stab_;
    }
    const std::vector<PauliOperator> &destabilizers() const {
        return destab_;
    }

    void apply(const Gate &gate);
    void apply(const Circuit &u);
    /// Replaces the state psi by P psi.
    void apply_pauli(const PauliOperator &p);

    /// +1 or -1 when +-p is in the stabilizer group, 0 otherwise. `p` must be
    /// Hermitian.
    int expectation(const PauliOperator &p) const;
    /// True when p psi = psi exactly.
    bool stabilizes(const PauliOperator &p) const {
        return expectation(p) == 1;
    }

    /// Reduced row echelon form of the stabilizer group; unique per state.
    std::vector<PauliOperator> canonical_stabilizers() const;

   private:
    size_t n_;
    std::vector<PauliOperator> destab_;
    std::vector<PauliOperator> stab_;
};

/// The tableau of U|0...0>.
StabilizerTableau run_circuit(const Circuit &u);

/// Whether two stabilizer states are equal up to a global phase.
bool states_equal(const StabilizerTableau &a, const StabilizerTableau &b);

/// Whether P psi and Q psi are the same state (not merely up to phase),
/// i.e. whether Q^dagger P stabilizes psi with eigenvalue +1.
bool displaced_states_equal(const StabilizerTableau &psi, const PauliOperator &p, const PauliOperator &q);

/// Gaussian elimination over the (x|z) bits with exact phase tracking.
/// Rows must pairwise commute. The result is in reduced row echelon form
/// (x block first, then z block), dropping rows that reduce to identity.
std::vector<PauliOperator> canonicalize(std::vector<PauliOperator> rows);

}  // namespace surflc

#endif
