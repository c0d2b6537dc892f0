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

#include "surflc/circuit.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

using namespace surflc;
using nlohmann::ordered_json;

namespace {

struct GateInfo {
    GateKind kind;
    const char *name;
    size_t arity;
};

constexpr std::array<GateInfo, 10> kGates{{
    {GateKind::I, "I", 1},
    {GateKind::H, "H", 1},
    {GateKind::S, "S", 1},
    {GateKind::S_DAG, "S_DAG", 1},
    {GateKind::X, "X", 1},
    {GateKind::Y, "Y", 1},
    {GateKind::Z, "Z", 1},
    {GateKind::CX, "CX", 2},
    {GateKind::CZ, "CZ", 2},
    {GateKind::SWAP, "SWAP", 2},
}};

}  // namespace

GateKind surflc::parse_gate_kind(const std::string &name) {
    for (const auto &g : kGates) {
        if (name == g.name) {
            return g.kind;
        }
    }
    if (name == "CNOT") {
        return GateKind::CX;
    }
    throw std::invalid_argument("unsupported gate '" + name + "' (Clifford gates only)");
}

const char *surflc::gate_name(GateKind kind) {
    return kGates[size_t(kind)].name;
}

size_t surflc::gate_arity(GateKind kind) {
    return kGates[size_t(kind)].arity;
}

GateKind surflc::inverse_gate(GateKind kind) {
    if (kind == GateKind::S) {
        return GateKind::S_DAG;
    }
    if (kind == GateKind::S_DAG) {
        return GateKind::S;
    }
    return kind;
}

size_t Circuit::gate_count() const {
    size_t total = 0;
    for (const auto &layer : layers) {
        total += layer.size();
    }
    return total;
}

size_t Circuit::locality() const {
    size_t c = 1;
    for (const auto &layer : layers) {
        for (const auto &g : layer) {
            c = std::max(c, g.qubits.size());
        }
    }
    return c;
}

void Circuit::validate() const {
    std::vector<size_t> last_layer(qubit_count, SIZE_MAX);
    for (size_t k = 0; k < layers.size(); k++) {
        for (const auto &g : layers[k]) {
            std::string where = "layer " + std::to_string(k) + " gate " + gate_name(g.kind);
            if (g.qubits.size() != gate_arity(g.kind)) {
                throw std::invalid_argument(where + ": wrong number of qubits");
            }
            for (uint32_t q : g.qubits) {
                if (q >= qubit_count) {
                    throw std::invalid_argument(where + ": qubit " + std::to_string(q) + " out of range");
                }
                if (last_layer[q] == k) {
                    throw std::invalid_argument(where + ": overlapping support on qubit " + std::to_string(q));
                }
                last_layer[q] = k;
            }
        }
    }
}

Circuit Circuit::from_gates(size_t qubit_count, const std::vector<Gate> &gates) {
    Circuit c;
    c.qubit_count = qubit_count;
    std::vector<size_t> next_free(qubit_count, 0);
    for (const auto &g : gates) {
        size_t k = 0;
        for (uint32_t q : g.qubits) {
            if (q >= qubit_count) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " out of range");
            }
            k = std::max(k, next_free[q]);
        }
        if (k == c.layers.size()) {
            c.layers.emplace_back();
        }
        c.layers[k].push_back(g);
        for (uint32_t q : g.qubits) {
            next_free[q] = k + 1;
        }
    }
    c.validate();
    return c;
}

std::vector<Gate> Circuit::flat_gates() const {
    std::vector<Gate> out;
    for (const auto &layer : layers) {
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

Circuit Circuit::inverse() const {
    Circuit c;
    c.qubit_count = qubit_count;
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        auto layer = *it;
        for (auto &g : layer) {
            g.kind = inverse_gate(g.kind);
        }
        c.layers.push_back(std::move(layer));
    }
    return c;
}

Circuit Circuit::then(const Circuit &next) const {
    if (next.qubit_count != qubit_count) {
        throw std::invalid_argument("qubit count mismatch");
    }
    Circuit c = *this;
    c.layers.insert(c.layers.end(), next.layers.begin(), next.layers.end());
    return c;
}

Circuit surflc::parse_circuit(const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error &ex) {
        throw std::invalid_argument(std::string("malformed JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("qubits") || !j.contains("layers") || !j["layers"].is_array() ||
        !j["qubits"].is_number_unsigned()) {
        throw std::invalid_argument("circuit must be {\"qubits\": N, \"layers\": [...]}");
    }
    Circuit c;
    c.qubit_count = j["qubits"].get<size_t>();
    for (size_t k = 0; k < j["layers"].size(); k++) {
        const auto &jl = j["layers"][k];
        if (!jl.is_array()) {
            throw std::invalid_argument("layers[" + std::to_string(k) + "]: expected an array");
        }
        std::vector<Gate> layer;
        for (const auto &jg : jl) {
            if (!jg.is_object() || !jg.contains("gate") || !jg.contains("qubits")) {
                throw std::invalid_argument("layers[" + std::to_string(k) + "]: gate needs 'gate' and 'qubits'");
            }
            Gate g;
            g.kind = parse_gate_kind(jg["gate"].get<std::string>());
            for (const auto &q : jg["qubits"]) {
                if (!q.is_number_unsigned()) {
                    throw std::invalid_argument("layers[" + std::to_string(k) + "]: bad qubit index");
                }
                g.qubits.push_back(q.get<uint32_t>());
            }
            layer.push_back(std::move(g));
        }
        c.layers.push_back(std::move(layer));
    }
    c.validate();
    return c;
}

std::string surflc::format_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "{\"qubits\": " << c.qubit_count << ",\n \"layers\": [";
    for (size_t k = 0; k < c.layers.size(); k++) {
        out << (k ? ",\n  [" : "\n  [");
        for (size_t i = 0; i < c.layers[k].size(); i++) {
            const auto &g = c.layers[k][i];
            out << (i ? ", " : "") << "{\"gate\": \"" << gate_name(g.kind) << "\", \"qubits\": [";
            for (size_t t = 0; t < g.qubits.size(); t++) {
                out << (t ? ", " : "") << g.qubits[t];
            }
            out << "]}";
        }
        out << "]";
    }
    out << "]}\n";
    return out.str();
}

Circuit surflc::load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str());
}

void surflc::save_circuit(const Circuit &c, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << format_circuit(c);
}

Circuit surflc::random_clifford_circuit(size_t n, size_t depth, std::mt19937_64 &rng, double pair_prob) {
    static constexpr GateKind kOne[] = {
        GateKind::I, GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::Y, GateKind::Z};
    static constexpr GateKind kTwo[] = {GateKind::CX, GateKind::CZ, GateKind::SWAP};
    Circuit c;
    c.qubit_count = n;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (size_t k = 0; k < depth; k++) {
        std::vector<uint32_t> order(n);
        for (uint32_t q = 0; q < n; q++) {
            order[q] = q;
        }
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<Gate> layer;
        for (size_t i = 0; i < n; i++) {
            if (i + 1 < n && coin(rng) < pair_prob) {
                layer.push_back({kTwo[rng() % 3], {order[i], order[i + 1]}});
                i++;
            } else {
                layer.push_back({kOne[rng() % 7], {order[i]}});
            }
        }
        c.layers.push_back(std::move(layer));
    }
    return c;
}
