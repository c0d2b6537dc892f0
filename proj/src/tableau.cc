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

#include "surflc/tableau.h"

#include <stdexcept>

using namespace surflc;

StabilizerTableau::StabilizerTableau(size_t n) : n_(n) {
    destab_.reserve(n);
    stab_.reserve(n);
    for (size_t q = 0; q < n; q++) {
        PauliOperator dx(n), sz(n);
        dx.x().set(q);
        sz.z().set(q);
        destab_.push_back(std::move(dx));
        stab_.push_back(std::move(sz));
    }
}

void StabilizerTableau::apply(const Gate &gate) {
    for (uint32_t q : gate.qubits) {
        if (q >= n_) {
            throw std::invalid_argument("gate qubit out of range");
        }
    }
    for (auto &row : destab_) {
        row.conjugate_by(gate);
    }
    for (auto &row : stab_) {
        row.conjugate_by(gate);
    }
}

void StabilizerTableau::apply(const Circuit &u) {
    if (u.qubit_count != n_) {
        throw std::invalid_argument("circuit width differs from the tableau");
    }
    for (const auto &layer : u.layers) {
        for (const auto &g : layer) {
            apply(g);
        }
    }
}

void StabilizerTableau::apply_pauli(const PauliOperator &p) {
    // P S P^dagger = -S exactly when P and S anticommute.
    for (auto &row : stab_) {
        if (!row.commutes(p)) {
            row.add_phase(2);
        }
    }
    for (auto &row : destab_) {
        if (!row.commutes(p)) {
            row.add_phase(2);
        }
    }
}

int StabilizerTableau::expectation(const PauliOperator &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("expectation: size mismatch");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("expectation: operator is not Hermitian");
    }
    for (const auto &s : stab_) {
        if (!s.commutes(p)) {
            return 0;
        }
    }
    // p commutes with every stabilizer, so p = +-(product of the stabilizers
    // whose destabilizer partner anticommutes with p).
    PauliOperator acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (!destab_[i].commutes(p)) {
            acc *= stab_[i];
        }
    }
    if (acc.x() != p.x() || acc.z() != p.z()) {
        throw std::logic_error("expectation: tableau rows are inconsistent");
    }
    return acc.phase() == p.phase() ? 1 : -1;
}

std::vector<PauliOperator> surflc::canonicalize(std::vector<PauliOperator> rows) {
    if (rows.empty()) {
        return rows;
    }
    size_t n = rows[0].num_qubits();
    size_t next = 0;
    auto bit = [&](const PauliOperator &p, size_t col) {
        return col < n ? p.x()[col] : p.z()[col - n];
    };
    for (size_t col = 0; col < 2 * n && next < rows.size(); col++) {
        size_t pivot = next;
        while (pivot < rows.size() && !bit(rows[pivot], col)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && bit(rows[r], col)) {
                rows[r] = rows[next] * rows[r];
            }
        }
        next++;
    }
    rows.resize(next);
    return rows;
}

std::vector<PauliOperator> StabilizerTableau::canonical_stabilizers() const {
    return canonicalize(stab_);
}

StabilizerTableau surflc::run_circuit(const Circuit &u) {
    StabilizerTableau t(u.qubit_count);
    t.apply(u);
    return t;
}

bool surflc::states_equal(const StabilizerTableau &a, const StabilizerTableau &b) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    return a.canonical_stabilizers() == b.canonical_stabilizers();
}

bool surflc::displaced_states_equal(const StabilizerTableau &psi, const PauliOperator &p, const PauliOperator &q) {
    PauliOperator d = q.adjoint() * p;
    // An anti-Hermitian product has eigenvalues +-i and cannot fix psi.
    return d.is_hermitian() && psi.expectation(d) == 1;
}
