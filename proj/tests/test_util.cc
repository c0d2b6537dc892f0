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

#include "test_util.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "surflc/complex_io.h"

namespace testutil {

std::vector<std::string> fixture_labels() {
    return {"tetrahedron", "cube-1", "cube-2", "cube-3", "cube-4", "cube-5",
            "torus-3", "torus-4", "torus-5", "torus-6"};
}

PolygonalComplex load_fixture(const std::string &label) {
#ifdef SURFLC_FIXTURE_DIR
    return surflc::load_complex(std::string(SURFLC_FIXTURE_DIR) + "/" + label + ".json");
#else
    return surflc::load_complex("fixtures/" + label + ".json");
#endif
}

std::vector<BitVec> brute_class(const PolygonalComplex &g, const BitVec &gamma) {
    size_t nf = g.num_faces();
    std::set<BitVec> seen;
    for (uint64_t w = 0; w < (uint64_t{1} << nf); w++) {
        BitVec c = gamma;
        for (size_t f = 0; f < nf; f++) {
            if ((w >> f) & 1) {
                for (uint32_t e : g.faces()[f]) {
                    c.flip(e);
                }
            }
        }
        seen.insert(c);
    }
    return {seen.begin(), seen.end()};
}

bool brute_separates(const std::vector<BitVec> &coset, const BitVec &x) {
    for (const auto &c : coset) {
        bool meets = false;
        for (size_t k = 0; k < c.size(); k++) {
            if (c[k] && x[k]) {
                meets = true;
                break;
            }
        }
        if (!meets) {
            return false;
        }
    }
    return true;
}

bool brute_separates(const PolygonalComplex &g, const BitVec &gamma, const BitVec &x) {
    return brute_separates(brute_class(g, gamma), x);
}

BitVec dag_light_cone(const Circuit &u, const BitVec &s, bool up) {
    size_t n = u.qubit_count;
    size_t t_max = u.layers.size();
    // Node (t, q) is qubit q after t layers.
    auto id = [&](size_t t, size_t q) {
        return t * n + q;
    };
    std::vector<std::vector<size_t>> fwd((t_max + 1) * n), bwd((t_max + 1) * n);
    for (size_t t = 0; t < t_max; t++) {
        std::vector<bool> touched(n, false);
        for (const auto &gate : u.layers[t]) {
            for (uint32_t a : gate.qubits) {
                touched[a] = true;
                for (uint32_t b : gate.qubits) {
                    fwd[id(t, a)].push_back(id(t + 1, b));
                    bwd[id(t + 1, b)].push_back(id(t, a));
                }
            }
        }
        for (size_t q = 0; q < n; q++) {
            if (!touched[q]) {
                fwd[id(t, q)].push_back(id(t + 1, q));
                bwd[id(t + 1, q)].push_back(id(t, q));
            }
        }
    }
    // Upper cone: outputs reachable from inputs in s. Lower: inputs that
    // reach outputs in s.
    const auto &adj = up ? fwd : bwd;
    std::vector<bool> seen((t_max + 1) * n, false);
    std::deque<size_t> queue;
    for (size_t q = 0; q < n; q++) {
        if (s[q]) {
            size_t start = up ? id(0, q) : id(t_max, q);
            seen[start] = true;
            queue.push_back(start);
        }
    }
    while (!queue.empty()) {
        size_t x = queue.front();
        queue.pop_front();
        for (size_t y : adj[x]) {
            if (!seen[y]) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    BitVec out(n);
    for (size_t q = 0; q < n; q++) {
        out.set(q, seen[up ? id(t_max, q) : id(0, q)]);
    }
    return out;
}

std::vector<std::vector<uint32_t>> floyd_distances(const PolygonalComplex &g, bool copath) {
    size_t m = g.num_edges();
    const uint32_t inf = 1u << 30;
    std::vector<std::vector<uint32_t>> d(m, std::vector<uint32_t>(m, inf));
    for (size_t a = 0; a < m; a++) {
        d[a][a] = 0;
        for (size_t b = 0; b < m; b++) {
            if (a == b) {
                continue;
            }
            bool adjacent = false;
            if (copath) {
                for (const auto &face : g.faces()) {
                    bool has_a = std::find(face.begin(), face.end(), a) != face.end();
                    bool has_b = std::find(face.begin(), face.end(), b) != face.end();
                    adjacent = adjacent || (has_a && has_b);
                }
            } else {
                auto ea = g.edges()[a], eb = g.edges()[b];
                adjacent = ea[0] == eb[0] || ea[0] == eb[1] || ea[1] == eb[0] || ea[1] == eb[1];
            }
            if (adjacent) {
                d[a][b] = 1;
            }
        }
    }
    for (size_t k = 0; k < m; k++) {
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < m; j++) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

std::vector<uint32_t> random_path(const PolygonalComplex &g, std::mt19937_64 &rng) {
    size_t m = g.num_edges();
    uint32_t e = uint32_t(rng() % m), f = uint32_t(rng() % m);
    // BFS from f over shared-vertex adjacency, then walk down from e.
    std::vector<uint32_t> dist(m, UINT32_MAX);
    std::deque<uint32_t> queue{f};
    dist[f] = 0;
    while (!queue.empty()) {
        uint32_t x = queue.front();
        queue.pop_front();
        for (uint32_t v : g.edges()[x]) {
            for (uint32_t y : g.vertex_edges(v)) {
                if (dist[y] == UINT32_MAX) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    std::vector<uint32_t> path{e};
    while (path.back() != f) {
        uint32_t x = path.back();
        std::vector<uint32_t> next;
        for (uint32_t v : g.edges()[x]) {
            for (uint32_t y : g.vertex_edges(v)) {
                if (dist[y] + 1 == dist[x]) {
                    next.push_back(y);
                }
            }
        }
        path.push_back(next[rng() % next.size()]);
    }
    return path;
}

namespace {

using C = std::complex<double>;

Eigen::Matrix2cd single(bool x, bool z) {
    Eigen::Matrix2cd m;
    if (x && z) {
        m << 0, C(0, -1), C(0, 1), 0;
    } else if (x) {
        m << 0, 1, 1, 0;
    } else if (z) {
        m << 1, 0, 0, -1;
    } else {
        m << 1, 0, 0, 1;
    }
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Embeds a k-qubit matrix acting on `qubits` (qubits[j] is bit j of the
// small index) into n qubits.
Eigen::MatrixXcd embed(const Eigen::MatrixXcd &small, const std::vector<uint32_t> &qubits, size_t n) {
    size_t dim = size_t(1) << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(Eigen::Index(dim), Eigen::Index(dim));
    for (size_t col = 0; col < dim; col++) {
        size_t sub_col = 0;
        for (size_t j = 0; j < qubits.size(); j++) {
            sub_col |= ((col >> qubits[j]) & 1) << j;
        }
        for (size_t sub_row = 0; sub_row < (size_t(1) << qubits.size()); sub_row++) {
            size_t row = col;
            for (size_t j = 0; j < qubits.size(); j++) {
                row &= ~(size_t(1) << qubits[j]);
                row |= ((sub_row >> j) & 1) << qubits[j];
            }
            out(Eigen::Index(row), Eigen::Index(col)) += small(Eigen::Index(sub_row), Eigen::Index(sub_col));
        }
    }
    return out;
}

Eigen::MatrixXcd gate_matrix(surflc::GateKind k) {
    using surflc::GateKind;
    const double r = 1 / std::sqrt(2.0);
    Eigen::MatrixXcd m;
    switch (k) {
        case GateKind::I:
            return Eigen::MatrixXcd::Identity(2, 2);
        case GateKind::H:
            m.resize(2, 2);
            m << r, r, r, -r;
            return m;
        case GateKind::S:
            m.resize(2, 2);
            m << 1, 0, 0, C(0, 1);
            return m;
        case GateKind::S_DAG:
            m.resize(2, 2);
            m << 1, 0, 0, C(0, -1);
            return m;
        case GateKind::X:
            return single(true, false);
        case GateKind::Y:
            return single(true, true);
        case GateKind::Z:
            return single(false, true);
        case GateKind::CX:
            // Bit 0 control, bit 1 target.
            m = Eigen::MatrixXcd::Zero(4, 4);
            m(0, 0) = m(2, 2) = 1;
            m(3, 1) = m(1, 3) = 1;
            return m;
        case GateKind::CZ:
            m = Eigen::MatrixXcd::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        case GateKind::SWAP:
            m = Eigen::MatrixXcd::Zero(4, 4);
            m(0, 0) = m(3, 3) = 1;
            m(1, 2) = m(2, 1) = 1;
            return m;
    }
    return m;
}

}  // namespace

Eigen::MatrixXcd kron_pauli(const surflc::PauliOperator &p) {
    size_t n = p.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    // Highest qubit first so qubit q lands on bit q.
    for (size_t k = n; k-- > 0;) {
        m = kron(m, single(p.x()[k], p.z()[k]));
    }
    static const C phases[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
    // The stored phase multiplies the Hermitian X/Y/Z letters.
    return phases[p.phase()] * m;
}

Eigen::MatrixXcd circuit_unitary(const Circuit &u) {
    size_t dim = size_t(1) << u.qubit_count;
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(Eigen::Index(dim), Eigen::Index(dim));
    for (const auto &layer : u.layers) {
        for (const auto &gate : layer) {
            total = embed(gate_matrix(gate.kind), gate.qubits, u.qubit_count) * total;
        }
    }
    return total;
}

BitVec random_bits(size_t n, std::mt19937_64 &rng, double density) {
    std::bernoulli_distribution coin(density);
    BitVec b(n);
    for (size_t k = 0; k < n; k++) {
        b.set(k, coin(rng));
    }
    return b;
}

}  // namespace testutil
