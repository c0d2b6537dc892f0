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

#ifndef SURFLC_LIGHT_CONE_H
#define SURFLC_LIGHT_CONE_H

#include "surflc/circuit.h"
#include "surflc/gf2_topology.h"
#include "surflc/polygonal_complex.h"

namespace surflc {

/// Up follows the circuit forward in time, Down backward.
enum class Direction { Up, Down };

/// Wires reachable from `s` through the circuit's gates.
EdgeSet light_cone(const Circuit &u, const EdgeSet &s, Direction direction);

/// Whether every gate's qubits are pairwise within copath distance `c_dist`.
bool is_geometric(const Circuit &u, const PolygonalComplex &g, uint32_t c_dist);

/// Edges q whose upper light cone meets every member of the class of gamma.
EdgeSet effective_support_A(const PolygonalComplex &g, const Circuit &u, const Chain &gamma);
EdgeSet effective_support_A(const ClassSolver &solver, const Circuit &u, const Chain &gamma);
/// Upper light cone of A.
EdgeSet effective_support_B(const PolygonalComplex &g, const Circuit &u, const Chain &gamma);

/// Superset of supp(U P U^dagger) obtained by growing supp(P) layer by layer.
EdgeSet conjugated_support(const Circuit &u, const EdgeSet &support);

/// Random circuit whose two-qubit gates act on copath-adjacent edges.
Circuit random_geometric_circuit(
    const PolygonalComplex &g, size_t depth, std::mt19937_64 &rng, double pair_prob = 0.5);

}  // namespace surflc

#endif
