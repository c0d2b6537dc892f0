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

#include "surflc/dense.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "surflc/lemmas.h"

using namespace surflc;

static const Complex kI(0, 1);

static Complex i_pow(int k) {
    static const Complex table[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
}

static void check_size(size_t n) {
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument(
            "dense state on " + std::to_string(n) + " qubits exceeds the limit of " + std::to_string(kMaxDenseQubits));
    }
}

DenseState::DenseState(size_t n) : n_(n) {
    check_size(n);
    amps_ = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
    amps_[0] = 1;
}

DenseState DenseState::basis(size_t n, uint64_t index) {
    DenseState s(n);
    s.amps_[0] = 0;
    s.amps_[Eigen::Index(index)] = 1;
    return s;
}

DenseState DenseState::from_amplitudes(Eigen::VectorXcd amps) {
    size_t len = size_t(amps.size());
    if (len == 0 || !std::has_single_bit(len)) {
        throw std::invalid_argument("amplitude vector length must be a power of two");
    }
    DenseState s(size_t(std::countr_zero(len)));
    s.amps_ = std::move(amps);
    return s;
}

void DenseState::apply(const Gate &gate) {
    for (uint32_t q : gate.qubits) {
        if (q >= n_) {
            throw std::invalid_argument("gate qubit out of range");
        }
    }
    const Eigen::Index dim = amps_.size();
    const uint64_t a = uint64_t{1} << gate.qubits[0];
    const double r = 1 / std::sqrt(2.0);
    switch (gate.kind) {
        case GateKind::I:
            break;
        case GateKind::H:
            for (Eigen::Index k = 0; k < dim; k++) {
                if (!(k & a)) {
                    Complex u = amps_[k], v = amps_[k | a];
                    amps_[k] = r * (u + v);
                    amps_[k | a] = r * (u - v);
                }
            }
            break;
        case GateKind::S:
        case GateKind::S_DAG: {
            Complex ph = gate.kind == GateKind::S ? kI : -kI;
            for (Eigen::Index k = 0; k < dim; k++) {
                if (k & a) {
                    amps_[k] *= ph;
                }
            }
            break;
        }
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z: {
            PauliOperator p(n_);
            if (gate.kind != GateKind::Z) {
                p.x().set(gate.qubits[0]);
            }
            if (gate.kind != GateKind::X) {
                p.z().set(gate.qubits[0]);
            }
            apply_pauli(p);
            break;
        }
        case GateKind::CX: {
            const uint64_t t = uint64_t{1} << gate.qubits[1];
            for (Eigen::Index k = 0; k < dim; k++) {
                if ((k & a) && !(k & t)) {
                    std::swap(amps_[k], amps_[k | t]);
                }
            }
            break;
        }
        case GateKind::CZ: {
            const uint64_t t = uint64_t{1} << gate.qubits[1];
            for (Eigen::Index k = 0; k < dim; k++) {
                if ((k & a) && (k & t)) {
                    amps_[k] = -amps_[k];
                }
            }
            break;
        }
        case GateKind::SWAP: {
            const uint64_t t = uint64_t{1} << gate.qubits[1];
            for (Eigen::Index k = 0; k < dim; k++) {
                if ((k & a) && !(k & t)) {
                    std::swap(amps_[k], amps_[(k ^ a) | t]);
                }
            }
            break;
        }
    }
}

void DenseState::apply(const Circuit &u) {
    if (u.qubit_count != n_) {
        throw std::invalid_argument("circuit width differs from the state");
    }
    for (const auto &layer : u.layers) {
        for (const auto &g : layer) {
            apply(g);
        }
    }
}

void DenseState::apply_pauli(const PauliOperator &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("apply_pauli: size mismatch");
    }
    uint64_t xm = 0, zm = 0;
    p.x().for_each_set([&](size_t q) {
        xm |= uint64_t{1} << q;
    });
    p.z().for_each_set([&](size_t q) {
        zm |= uint64_t{1} << q;
    });
    // sigma(x,z)|b> = i^{x.z} (-1)^{z.b} |b ^ x>.
    Complex base = i_pow(p.phase() + std::popcount(xm & zm));
    Eigen::VectorXcd out(amps_.size());
    for (Eigen::Index k = 0; k < amps_.size(); k++) {
        double sign = std::popcount(uint64_t(k) & zm) & 1 ? -1.0 : 1.0;
        out[Eigen::Index(uint64_t(k) ^ xm)] = base * sign * amps_[k];
    }
    amps_ = std::move(out);
}

Complex surflc::overlap(const DenseState &a, const DenseState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("overlap: dimension mismatch");
    }
    return a.amplitudes().dot(b.amplitudes());
}

double surflc::fidelity(const DenseState &a, const DenseState &b) {
    return std::norm(overlap(a, b));
}

DenseState surflc::random_state(size_t n, std::mt19937_64 &rng) {
    check_size(n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(Eigen::Index(1) << n);
    for (Eigen::Index k = 0; k < v.size(); k++) {
        v[k] = Complex(gauss(rng), gauss(rng));
    }
    v.normalize();
    return DenseState::from_amplitudes(std::move(v));
}

DenseState surflc::cat_state(size_t n, bool plus) {
    DenseState s(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
    v[0] = 1 / std::sqrt(2.0);
    v[v.size() - 1] = (plus ? 1.0 : -1.0) / std::sqrt(2.0);
    return DenseState::from_amplitudes(std::move(v));
}

size_t surflc::clock_qubits(size_t n) {
    size_t steps = n * n;
    size_t m = 0;
    while ((size_t{1} << m) < steps) {
        m++;
    }
    return m;
}

static void check_history_size(size_t n) {
    if (n < 2) {
        throw std::invalid_argument("history state needs n >= 2");
    }
    check_size(n + clock_qubits(n));
}

DenseState surflc::history_state(size_t n) {
    check_history_size(n);
    size_t m = clock_qubits(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index(1) << (n + m));
    DenseState data(n);
    data.apply(Gate{GateKind::H, {0}});
    for (size_t i = 1; i <= n * n; i++) {
        // Layer i is CX(i, i+1) in 1-based qubit labels while both exist,
        // identity afterwards.
        if (i + 1 <= n) {
            data.apply(Gate{GateKind::CX, {uint32_t(i - 1), uint32_t(i)}});
        }
        uint64_t clock = uint64_t(i - 1) << n;
        for (Eigen::Index k = 0; k < data.amplitudes().size(); k++) {
            v[Eigen::Index(clock | uint64_t(k))] = data.amplitudes()[k] / double(n);
        }
    }
    return DenseState::from_amplitudes(std::move(v));
}

DenseState surflc::extended_cat_state(size_t n) {
    check_history_size(n);
    size_t m = clock_qubits(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index(1) << (n + m));
    double amp = 1 / std::sqrt(2.0 * double(n * n - n));
    uint64_t ones = (uint64_t{1} << n) - 1;
    for (size_t i = n + 1; i <= n * n; i++) {
        uint64_t clock = uint64_t(i - 1) << n;
        v[Eigen::Index(clock)] = amp;
        v[Eigen::Index(clock | ones)] = amp;
    }
    return DenseState::from_amplitudes(std::move(v));
}

Eigen::MatrixXcd surflc::pauli_matrix(const PauliOperator &p, const std::vector<uint32_t> &qubits) {
    size_t k = qubits.size();
    Eigen::Index dim = Eigen::Index(1) << k;
    uint64_t xm = 0, zm = 0;
    for (size_t j = 0; j < k; j++) {
        if (p.x()[qubits[j]]) {
            xm |= uint64_t{1} << j;
        }
        if (p.z()[qubits[j]]) {
            zm |= uint64_t{1} << j;
        }
    }
    Complex base = i_pow(p.phase() + std::popcount(xm & zm));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; b++) {
        double sign = std::popcount(uint64_t(b) & zm) & 1 ? -1.0 : 1.0;
        m(Eigen::Index(uint64_t(b) ^ xm), b) = base * sign;
    }
    return m;
}

Eigen::MatrixXcd surflc::density_matrix(const DenseState &s) {
    return s.amplitudes() * s.amplitudes().adjoint();
}

// Splits a full index into (kept bits packed in keep order, remaining bits).
static std::pair<uint64_t, uint64_t> split_index(uint64_t k, const std::vector<uint32_t> &keep, uint64_t keep_mask) {
    uint64_t kept = 0;
    for (size_t j = 0; j < keep.size(); j++) {
        kept |= ((k >> keep[j]) & 1) << j;
    }
    return {kept, k & ~keep_mask};
}

static uint64_t keep_mask_of(const std::vector<uint32_t> &keep, size_t n) {
    uint64_t mask = 0;
    for (uint32_t q : keep) {
        if (q >= n || (mask >> q) & 1) {
            throw std::invalid_argument("rdm: bad or repeated qubit in keep list");
        }
        mask |= uint64_t{1} << q;
    }
    return mask;
}

Eigen::MatrixXcd surflc::rdm(const DenseState &s, const std::vector<uint32_t> &keep) {
    size_t n = s.num_qubits();
    uint64_t mask = keep_mask_of(keep, n);
    size_t k = keep.size();
    // Rows: kept index; columns: compressed index of the traced-out qubits.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index(1) << k, Eigen::Index(1) << (n - k));
    std::vector<uint32_t> rest;
    for (uint32_t q = 0; q < n; q++) {
        if (!((mask >> q) & 1)) {
            rest.push_back(q);
        }
    }
    for (Eigen::Index idx = 0; idx < s.amplitudes().size(); idx++) {
        auto [kept, other] = split_index(uint64_t(idx), keep, mask);
        uint64_t col = 0;
        for (size_t j = 0; j < rest.size(); j++) {
            col |= ((other >> rest[j]) & 1) << j;
        }
        m(Eigen::Index(kept), Eigen::Index(col)) = s.amplitudes()[idx];
    }
    return m * m.adjoint();
}

Eigen::MatrixXcd surflc::rdm(const Eigen::MatrixXcd &rho, const std::vector<uint32_t> &keep) {
    size_t n = size_t(std::countr_zero(uint64_t(rho.rows())));
    uint64_t mask = keep_mask_of(keep, n);
    Eigen::Index dim = Eigen::Index(1) << keep.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index a = 0; a < rho.rows(); a++) {
        auto [ka, ra] = split_index(uint64_t(a), keep, mask);
        for (Eigen::Index b = 0; b < rho.cols(); b++) {
            auto [kb, rb] = split_index(uint64_t(b), keep, mask);
            if (ra == rb) {
                out(Eigen::Index(ka), Eigen::Index(kb)) += rho(a, b);
            }
        }
    }
    return out;
}

double surflc::trace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd d = a - b;
    d = (d + d.adjoint().eval()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum() / 2.0;
}

double surflc::correlation_check(const DenseState &s, uint32_t i, uint32_t j) {
    Eigen::MatrixXcd pair = rdm(s, {i, j});
    Eigen::MatrixXcd ri = rdm(s, {i});
    Eigen::MatrixXcd rj = rdm(s, {j});
    Eigen::MatrixXcd prod(4, 4);
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            prod(a, b) = ri(a & 1, b & 1) * rj(a >> 1, b >> 1);
        }
    }
    return trace_distance(pair, prod);
}

Eigen::MatrixXcd DenseOperator::matrix() const {
    check_size(num_qubits);
    std::vector<uint32_t> all(num_qubits);
    for (uint32_t q = 0; q < num_qubits; q++) {
        all[q] = q;
    }
    Eigen::Index dim = Eigen::Index(1) << num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[w, p] : terms) {
        m += w * pauli_matrix(p, all);
    }
    return m;
}

DenseOperator surflc::random_local_hamiltonian(size_t n, size_t num_terms, size_t k, std::mt19937_64 &rng) {
    DenseOperator h{n, {}};
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    for (size_t t = 0; t < num_terms; t++) {
        size_t size = 1 + rng() % std::min(k, n);
        std::vector<uint32_t> qubits(n);
        for (uint32_t q = 0; q < n; q++) {
            qubits[q] = q;
        }
        std::shuffle(qubits.begin(), qubits.end(), rng);
        PauliOperator p(n);
        for (size_t j = 0; j < size; j++) {
            int kind = 1 + int(rng() % 3);  // 1: X, 2: Z, 3: Y
            p.x().set(qubits[j], kind & 1);
            p.z().set(qubits[j], kind & 2);
        }
        h.terms.push_back({weight(rng), std::move(p)});
    }
    return h;
}

double surflc::energy_from_rdms(const DenseOperator &h, const Eigen::MatrixXcd &rho) {
    Complex total = 0;
    for (const auto &[w, p] : h.terms) {
        std::vector<uint32_t> supp;
        p.support().mask().for_each_set([&](size_t q) {
            supp.push_back(uint32_t(q));
        });
        total += w * (pauli_matrix(p, supp) * rdm(rho, supp)).trace();
    }
    return total.real();
}

double surflc::energy_direct(const DenseOperator &h, const Eigen::MatrixXcd &rho) {
    return (h.matrix() * rho).trace().real();
}

DenseState surflc::to_dense(const StabilizerTableau &t) {
    size_t n = t.num_qubits();
    std::mt19937_64 rng(0x5eed);
    DenseState s = random_state(n, rng);
    for (const auto &g : t.stabilizers()) {
        DenseState moved = s;
        moved.apply_pauli(g);
        Eigen::VectorXcd v = (s.amplitudes() + moved.amplitudes()) / 2.0;
        s = DenseState::from_amplitudes(std::move(v));
    }
    Eigen::VectorXcd v = s.amplitudes();
    double nrm = v.norm();
    if (nrm < 1e-9) {
        throw std::logic_error("to_dense: projection vanished");
    }
    return DenseState::from_amplitudes(v / nrm);
}

Eigen::MatrixXcd surflc::stabilizer_rdm(const StabilizerTableau &t, const std::vector<uint32_t> &keep) {
    if (keep.size() > kMaxDenseQubits) {
        throw std::invalid_argument("stabilizer_rdm: keep set too large");
    }
    EdgeSet region(t.num_qubits());
    for (uint32_t q : keep) {
        region.insert(q);
    }
    auto basis = stabilizers_within(t, region);
    if (basis.size() > 2 * keep.size()) {
        throw std::logic_error("stabilizer_rdm: local group larger than expected");
    }
    Eigen::Index dim = Eigen::Index(1) << keep.size();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (uint64_t mask = 0; mask < (uint64_t{1} << basis.size()); mask++) {
        PauliOperator g(t.num_qubits());
        for (size_t j = 0; j < basis.size(); j++) {
            if ((mask >> j) & 1) {
                g *= basis[j];
            }
        }
        rho += pauli_matrix(g, keep);
    }
    return rho / double(dim);
}
