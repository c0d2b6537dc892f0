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

#include "surflc/pauli.h"

#include <stdexcept>

using namespace surflc;

PauliOperator::PauliOperator(BitVec x, BitVec z, uint8_t phase) : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliOperator: x and z lengths differ");
    }
}

PauliOperator PauliOperator::x_on(const EdgeSet &s) {
    return PauliOperator(s.mask(), BitVec(s.universe()));
}

PauliOperator PauliOperator::z_on(const EdgeSet &s) {
    return PauliOperator(BitVec(s.universe()), s.mask());
}

PauliOperator PauliOperator::from_string(const std::string &text) {
    size_t k = 0;
    uint8_t phase = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        phase = text[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase += 1;
        k++;
    }
    size_t n = text.size() - k;
    PauliOperator p(n);
    p.phase_ = phase & 3;
    for (size_t q = 0; q < n; q++) {
        switch (text[k + q]) {
            case 'X':
                p.x_.set(q);
                break;
            case 'Z':
                p.z_.set(q);
                break;
            case 'Y':
                p.x_.set(q);
                p.z_.set(q);
                break;
            case 'I':
            case '_':
                break;
            default:
                throw std::invalid_argument("bad Pauli character in '" + text + "'");
        }
    }
    return p;
}

bool PauliOperator::commutes(const PauliOperator &other) const {
    return x_.dot(other.z_) == z_.dot(other.x_);
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw std::invalid_argument("PauliOperator: size mismatch");
    }
    // Per-qubit phase of sigma(a) sigma(b), counted as +1 / -1 powers of i.
    const auto &xa = x_.words();
    const auto &za = z_.words();
    const auto &xb = rhs.x_.words();
    const auto &zb = rhs.z_.words();
    int64_t total = 0;
    for (size_t w = 0; w < xa.size(); w++) {
        uint64_t ax = xa[w] & ~za[w], az = za[w] & ~xa[w], ay = xa[w] & za[w];
        uint64_t bx = xb[w] & ~zb[w], bz = zb[w] & ~xb[w], by = xb[w] & zb[w];
        uint64_t plus = (ax & by) | (ay & bz) | (az & bx);
        uint64_t minus = (ax & bz) | (az & by) | (ay & bx);
        total += std::popcount(plus) - std::popcount(minus);
    }
    phase_ = uint8_t((int64_t(phase_) + rhs.phase_ + total) & 3);
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

PauliOperator PauliOperator::operator*(const PauliOperator &rhs) const {
    PauliOperator out = *this;
    out *= rhs;
    return out;
}

PauliOperator PauliOperator::adjoint() const {
    PauliOperator out = *this;
    out.phase_ = uint8_t((4 - phase_) & 3);
    return out;
}

void PauliOperator::conjugate_by(const Gate &gate) {
    auto flip_if = [&](bool cond) {
        if (cond) {
            phase_ = (phase_ + 2) & 3;
        }
    };
    uint32_t a = gate.qubits[0];
    switch (gate.kind) {
        case GateKind::I:
            break;
        case GateKind::H: {
            bool xa = x_[a], za = z_[a];
            flip_if(xa && za);
            x_.set(a, za);
            z_.set(a, xa);
            break;
        }
        case GateKind::S:
            flip_if(x_[a] && z_[a]);
            z_.set(a, z_[a] ^ x_[a]);
            break;
        case GateKind::S_DAG:
            flip_if(x_[a] && !z_[a]);
            z_.set(a, z_[a] ^ x_[a]);
            break;
        case GateKind::X:
            flip_if(z_[a]);
            break;
        case GateKind::Y:
            flip_if(x_[a] != z_[a]);
            break;
        case GateKind::Z:
            flip_if(x_[a]);
            break;
        case GateKind::CX: {
            uint32_t t = gate.qubits[1];
            bool xc = x_[a], zc = z_[a], xt = x_[t], zt = z_[t];
            flip_if(xc && zt && (xt == zc));
            x_.set(t, xt ^ xc);
            z_.set(a, zc ^ zt);
            break;
        }
        case GateKind::CZ: {
            uint32_t t = gate.qubits[1];
            conjugate_by(Gate{GateKind::H, {t}});
            conjugate_by(Gate{GateKind::CX, {a, t}});
            conjugate_by(Gate{GateKind::H, {t}});
            break;
        }
        case GateKind::SWAP: {
            uint32_t t = gate.qubits[1];
            bool xa = x_[a], za = z_[a];
            x_.set(a, x_[t]);
            z_.set(a, z_[t]);
            x_.set(t, xa);
            z_.set(t, za);
            break;
        }
    }
}

void PauliOperator::conjugate_by(const Circuit &u) {
    for (const auto &layer : u.layers) {
        for (const auto &g : layer) {
            conjugate_by(g);
        }
    }
}

std::string PauliOperator::str() const {
    static const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (size_t q = 0; q < num_qubits(); q++) {
        out += x_[q] ? (z_[q] ? 'Y' : 'X') : (z_[q] ? 'Z' : '_');
    }
    return out;
}
