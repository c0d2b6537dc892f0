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

#include "surflc/light_cone.h"

#include <algorithm>

#include "surflc/metric.h"

using namespace surflc;

static void spread_layer(const std::vector<Gate> &layer, EdgeSet &cone) {
    for (const auto &g : layer) {
        bool hit = std::any_of(g.qubits.begin(), g.qubits.end(), [&](uint32_t q) {
            return cone.contains(q);
        });
        if (hit) {
            for (uint32_t q : g.qubits) {
                cone.insert(q);
            }
        }
    }
}

EdgeSet surflc::light_cone(const Circuit &u, const EdgeSet &s, Direction direction) {
    if (s.universe() != u.qubit_count) {
        throw std::invalid_argument("light_cone: set universe does not match the circuit");
    }
    EdgeSet cone = s;
    if (direction == Direction::Up) {
        for (const auto &layer : u.layers) {
            spread_layer(layer, cone);
        }
    } else {
        for (auto it = u.layers.rbegin(); it != u.layers.rend(); ++it) {
            spread_layer(*it, cone);
        }
    }
    return cone;
}

bool surflc::is_geometric(const Circuit &u, const PolygonalComplex &g, uint32_t c_dist) {
    if (u.qubit_count != g.num_edges()) {
        throw std::invalid_argument("is_geometric: circuit width differs from the edge count");
    }
    DistanceTable dist(g, Metric::Copath);
    for (const auto &layer : u.layers) {
        for (const auto &gate : layer) {
            for (size_t i = 0; i < gate.qubits.size(); i++) {
                for (size_t j = i + 1; j < gate.qubits.size(); j++) {
                    if (dist(gate.qubits[i], gate.qubits[j]) > c_dist) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

EdgeSet surflc::effective_support_A(const ClassSolver &solver, const Circuit &u, const Chain &gamma) {
    EdgeSet a(u.qubit_count);
    for (uint32_t q = 0; q < u.qubit_count; q++) {
        EdgeSet cone = light_cone(u, EdgeSet::of(u.qubit_count, {q}), Direction::Up);
        if (solver.separates(gamma, cone)) {
            a.insert(q);
        }
    }
    return a;
}

EdgeSet surflc::effective_support_A(const PolygonalComplex &g, const Circuit &u, const Chain &gamma) {
    if (u.qubit_count != g.num_edges()) {
        throw std::invalid_argument("effective_support_A: circuit width differs from the edge count");
    }
    return effective_support_A(ClassSolver(g), u, gamma);
}

EdgeSet surflc::effective_support_B(const PolygonalComplex &g, const Circuit &u, const Chain &gamma) {
    return light_cone(u, effective_support_A(g, u, gamma), Direction::Up);
}

EdgeSet surflc::conjugated_support(const Circuit &u, const EdgeSet &support) {
    return light_cone(u, support, Direction::Up);
}

Circuit surflc::random_geometric_circuit(
    const PolygonalComplex &g, size_t depth, std::mt19937_64 &rng, double pair_prob) {
    static constexpr GateKind kOne[] = {
        GateKind::I, GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::Y, GateKind::Z};
    static constexpr GateKind kTwo[] = {GateKind::CX, GateKind::CZ, GateKind::SWAP};
    auto adj = edge_adjacency(g, Metric::Copath);
    size_t n = g.num_edges();
    Circuit c;
    c.qubit_count = n;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (size_t k = 0; k < depth; k++) {
        std::vector<uint32_t> order(n);
        for (uint32_t q = 0; q < n; q++) {
            order[q] = q;
        }
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<bool> used(n, false);
        std::vector<Gate> layer;
        for (uint32_t q : order) {
            if (used[q]) {
                continue;
            }
            used[q] = true;
            std::vector<uint32_t> free;
            for (uint32_t x : adj[q]) {
                if (!used[x]) {
                    free.push_back(x);
                }
            }
            if (!free.empty() && coin(rng) < pair_prob) {
                uint32_t partner = free[rng() % free.size()];
                used[partner] = true;
                layer.push_back({kTwo[rng() % 3], {q, partner}});
            } else {
                layer.push_back({kOne[rng() % 7], {q}});
            }
        }
        c.layers.push_back(std::move(layer));
    }
    return c;
}
