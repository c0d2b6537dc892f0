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

#include "surflc/surface_code.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "surflc/gf2_topology.h"
#include "surflc/tableau.h"

using namespace surflc;

size_t surflc::symplectic_rank(const std::vector<PauliOperator> &rows) {
    if (rows.empty()) {
        return 0;
    }
    size_t n = rows[0].num_qubits();
    Gf2Matrix m(0, 2 * n);
    for (const auto &p : rows) {
        BitVec r(2 * n);
        p.x().for_each_set([&](size_t q) {
            r.set(q);
        });
        p.z().for_each_set([&](size_t q) {
            r.set(n + q);
        });
        m.append_row(std::move(r));
    }
    return m.rank();
}

StabilizerGroupSpec surflc::surface_generators(const PolygonalComplex &g) {
    auto cert = validate_csc(g);
    if (!cert.is_csc) {
        throw std::invalid_argument(
            "surface_generators: not a closed surface complex" +
            (cert.failure ? " (vertex " + std::to_string(cert.failure->vertex) + ": " + cert.failure->reason + ")"
                          : std::string()));
    }
    StabilizerGroupSpec spec;
    spec.num_qubits = g.num_edges();
    for (uint32_t v = 0; v < g.num_vertices(); v++) {
        PauliOperator a(g.num_edges());
        for (uint32_t e : g.vertex_edges(v)) {
            a.x().set(e);
        }
        spec.generators.push_back(std::move(a));
    }
    for (uint32_t f = 0; f < g.num_faces(); f++) {
        PauliOperator b(g.num_edges());
        for (uint32_t e : g.face_edges(f)) {
            b.z().set(e);
        }
        spec.generators.push_back(std::move(b));
    }
    spec.rank = symplectic_rank(spec.generators);
    spec.logical_count = spec.num_qubits - spec.rank;
    return spec;
}

std::vector<PauliOperator> surflc::logical_representatives(const PolygonalComplex &g, LogicalPin pin) {
    auto m = boundary_matrices(g);
    // Candidates: edge sets closed under the opposite-type checks. Trivial
    // ones: supports of same-type generators.
    std::vector<BitVec> candidates;
    Gf2Matrix trivial(0, g.num_edges());
    if (pin == LogicalPin::XCocycles) {
        candidates = m.d2.transposed().kernel_basis();
        for (size_t v = 0; v < m.d1.num_rows(); v++) {
            trivial.append_row(m.d1.row(v));
        }
    } else {
        candidates = m.d1.kernel_basis();
        Gf2Matrix d2t = m.d2.transposed();
        for (size_t f = 0; f < d2t.num_rows(); f++) {
            trivial.append_row(d2t.row(f));
        }
    }
    std::vector<PauliOperator> out;
    size_t rank = trivial.rank();
    for (auto &c : candidates) {
        trivial.append_row(c);
        size_t r = trivial.rank();
        if (r > rank) {
            rank = r;
            EdgeSet s(c);
            out.push_back(pin == LogicalPin::XCocycles ? PauliOperator::x_on(s) : PauliOperator::z_on(s));
        }
    }
    return out;
}

StabilizerGroupSpec surflc::pinned_surface_spec(const PolygonalComplex &g, LogicalPin pin) {
    auto spec = surface_generators(g);
    for (auto &p : logical_representatives(g, pin)) {
        spec.generators.push_back(std::move(p));
    }
    spec.rank = symplectic_rank(spec.generators);
    spec.logical_count = spec.num_qubits - spec.rank;
    return spec;
}

namespace {

bool stabilizes_all(const Circuit &u, const std::vector<PauliOperator> &gens) {
    auto t = run_circuit(u);
    return std::all_of(gens.begin(), gens.end(), [&](const PauliOperator &p) {
        return t.stabilizes(p);
    });
}

// CSS construction: Hadamard on one private qubit per X row, then fan out
// with CX. Needs an order in which every row owns a qubit that no earlier
// row touches. Returns nullopt when no such order is found.
std::optional<Circuit> css_encoder(const StabilizerGroupSpec &spec) {
    size_t n = spec.num_qubits;
    std::vector<BitVec> rows;
    Gf2Matrix acc(0, n);
    size_t rank = 0;
    for (const auto &p : spec.generators) {
        if (p.phase() != 0) {
            return std::nullopt;
        }
        bool is_x = p.z().none(), is_z = p.x().none();
        if (!is_x && !is_z) {
            return std::nullopt;
        }
        if (is_x && p.x().any()) {
            acc.append_row(p.x());
            size_t r = acc.rank();
            if (r > rank) {
                rank = r;
                rows.push_back(p.x());
            }
        }
    }
    std::vector<uint32_t> count(n, 0);
    for (const auto &r : rows) {
        r.for_each_set([&](size_t q) {
            count[q]++;
        });
    }
    std::vector<bool> alive(rows.size(), true);
    std::vector<std::pair<size_t, uint32_t>> peeled;  // (row, private qubit), last first
    for (size_t step = 0; step < rows.size(); step++) {
        bool found = false;
        for (size_t i = 0; i < rows.size() && !found; i++) {
            if (!alive[i]) {
                continue;
            }
            size_t q = rows[i].first_set();
            for (; q < n; q = rows[i].next_set(q + 1)) {
                if (count[q] == 1) {
                    found = true;
                    peeled.push_back({i, uint32_t(q)});
                    alive[i] = false;
                    rows[i].for_each_set([&](size_t t) {
                        count[t]--;
                    });
                    break;
                }
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    std::reverse(peeled.begin(), peeled.end());
    std::vector<Gate> gates;
    for (auto [i, p] : peeled) {
        gates.push_back({GateKind::H, {p}});
        rows[i].for_each_set([&](size_t t) {
            if (t != p) {
                gates.push_back({GateKind::CX, {p, uint32_t(t)}});
            }
        });
    }
    return Circuit::from_gates(n, gates);
}

// Maps each canonical generator to a single-qubit Z by Clifford
// conjugation, then inverts the recorded gates.
Circuit general_encoder(const StabilizerGroupSpec &spec) {
    size_t n = spec.num_qubits;
    std::vector<PauliOperator> rows = canonicalize(spec.generators);
    if (rows.size() != n) {
        throw std::invalid_argument("synthesize_encoder: generators do not fix a unique state");
    }
    std::vector<Gate> forward;
    std::vector<std::pair<uint32_t, size_t>> pivots;  // (qubit, row)
    auto apply = [&](const Gate &g, size_t from) {
        forward.push_back(g);
        for (size_t r = from; r < rows.size(); r++) {
            rows[r].conjugate_by(g);
        }
    };
    for (size_t k = 0; k < n; k++) {
        auto &row = rows[k];
        for (auto [q, j] : pivots) {
            if (row.z()[q]) {
                row *= rows[j];
            }
        }
        BitVec s = row.x() | row.z();
        if (s.none()) {
            throw std::invalid_argument("synthesize_encoder: dependent generators");
        }
        std::vector<uint32_t> support;
        s.for_each_set([&](size_t q) {
            support.push_back(uint32_t(q));
        });
        for (uint32_t q : support) {
            if (!rows[k].x()[q]) {
                apply({GateKind::H, {q}}, k);
            } else if (rows[k].z()[q]) {
                apply({GateKind::S_DAG, {q}}, k);
            }
        }
        uint32_t p = support[0];
        for (size_t t = 1; t < support.size(); t++) {
            apply({GateKind::CX, {p, support[t]}}, k);
        }
        apply({GateKind::H, {p}}, k);
        pivots.push_back({p, k});
    }
    std::vector<Gate> gates;
    for (auto [q, j] : pivots) {
        if (rows[j].negative()) {
            gates.push_back({GateKind::X, {q}});
        }
    }
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
        Gate g = *it;
        g.kind = inverse_gate(g.kind);
        gates.push_back(std::move(g));
    }
    return Circuit::from_gates(n, gates);
}

}  // namespace

Circuit surflc::synthesize_encoder(const StabilizerGroupSpec &spec) {
    const auto &gens = spec.generators;
    for (const auto &p : gens) {
        if (p.num_qubits() != spec.num_qubits || !p.is_hermitian()) {
            throw std::invalid_argument("synthesize_encoder: generators must be Hermitian Paulis on all qubits");
        }
    }
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (!gens[i].commutes(gens[j])) {
                throw std::invalid_argument(
                    "synthesize_encoder: generators " + std::to_string(i) + " and " + std::to_string(j) +
                    " anticommute");
            }
        }
    }
    if (symplectic_rank(gens) != spec.num_qubits) {
        throw std::invalid_argument("synthesize_encoder: generators do not fix a unique state (pin the logicals)");
    }
    if (auto css = css_encoder(spec); css && stabilizes_all(*css, gens)) {
        return *css;
    }
    Circuit u = general_encoder(spec);
    if (!stabilizes_all(u, gens)) {
        throw std::invalid_argument("synthesize_encoder: generator signs are inconsistent");
    }
    return u;
}
