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

#ifndef SURFLC_SURFACE_CODE_H
#define SURFLC_SURFACE_CODE_H

#include <vector>

#include "surflc/circuit.h"
#include "surflc/pauli.h"
#include "surflc/polygonal_complex.h"

namespace surflc {

struct StabilizerGroupSpec {
    size_t num_qubits = 0;
    std::vector<PauliOperator> generators;
    /// GF(2) rank of the generators' (x|z) rows.
    size_t rank = 0;
    /// num_qubits - rank.
    size_t logical_count = 0;
};

/// Rank of the (x|z) rows of a list of Paulis.
size_t symplectic_rank(const std::vector<PauliOperator> &rows);

/// One X-star per vertex (vertex order) followed by one Z-plaquette per face.
StabilizerGroupSpec surface_generators(const PolygonalComplex &g);

/// How the logical qubits of a surface code are fixed to obtain one state.
enum class LogicalPin {
    /// X on cocycle representatives: the state is the +1 eigenstate of every
    /// X-type logical.
    XCocycles,
    /// Z on cycle representatives.
    ZCycles,
};

/// Representatives of a basis of logical operators of the requested type,
/// independent of the stabilizer generators. There are dim H1 of them.
std::vector<PauliOperator> logical_representatives(const PolygonalComplex &g, LogicalPin pin);

/// Surface generators with logical representatives appended so that the
/// group fixes a single state.
StabilizerGroupSpec pinned_surface_spec(const PolygonalComplex &g, LogicalPin pin = LogicalPin::XCocycles);

/// A Clifford circuit U such that U|0...0> is stabilized (sign included) by
/// every generator of `spec`. Requires pairwise commuting generators of full
/// rank with consistent signs; throws std::invalid_argument otherwise.
Circuit synthesize_encoder(const StabilizerGroupSpec &spec);

}  // namespace surflc

#endif
