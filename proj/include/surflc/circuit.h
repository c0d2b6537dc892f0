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

#ifndef SURFLC_CIRCUIT_H
#define SURFLC_CIRCUIT_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "surflc/edge_set.h"

namespace surflc {

enum class GateKind : uint8_t { I, H, S, S_DAG, X, Y, Z, CX, CZ, SWAP };

GateKind parse_gate_kind(const std::string &name);
const char *gate_name(GateKind kind);
size_t gate_arity(GateKind kind);
GateKind inverse_gate(GateKind kind);

struct Gate {
    GateKind kind = GateKind::I;
    std::vector<uint32_t> qubits;
    bool operator==(const Gate &other) const = default;
};

/// A layered circuit. Gates within a layer act on disjoint qubits.
struct Circuit {
    size_t qubit_count = 0;
    std::vector<std::vector<Gate>> layers;

    size_t depth() const {
        return layers.size();
    }
    size_t gate_count() const;
    /// Maximum gate arity (at least 1).
    size_t locality() const;
    /// Throws std::invalid_argument on arity mismatch, out-of-range qubits or
    /// overlapping supports within a layer.
    void validate() const;

    /// Packs gates into layers as early as possible, preserving order on
    /// every qubit.
    static Circuit from_gates(size_t qubit_count, const std::vector<Gate> &gates);
    std::vector<Gate> flat_gates() const;
    Circuit inverse() const;
    Circuit then(const Circuit &next) const;

    bool operator==(const Circuit &other) const = default;
};

Circuit parse_circuit(const std::string &text);
std::string format_circuit(const Circuit &c);
Circuit load_circuit(const std::string &path);
void save_circuit(const Circuit &c, const std::string &path);

/// Random circuit over all gate kinds. Each layer is filled greedily: every
/// qubit not yet used gets a two-qubit gate with probability `pair_prob`
/// (partner drawn from the unused qubits), otherwise a one-qubit gate.
Circuit random_clifford_circuit(size_t n, size_t depth, std::mt19937_64 &rng, double pair_prob = 0.5);

}  // namespace surflc

#endif
