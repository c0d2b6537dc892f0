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

#ifndef SURFLC_DENSE_H
#define SURFLC_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "surflc/circuit.h"
#include "surflc/pauli.h"
#include "surflc/tableau.h"

namespace surflc {

using Complex = std::complex<double>;
inline constexpr size_t kMaxDenseQubits = 14;

/// State vector; qubit q is bit q of the basis index.
class DenseState {
   public:
    /// |0...0>.
    explicit DenseState(size_t n);
    static DenseState basis(size_t n, uint64_t index);
    /// Takes ownership of `amps` (length must be a power of two).
    static DenseState from_amplitudes(Eigen::VectorXcd amps);

    size_t num_qubits() const {
        return n_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amps_;
    }
    double norm() const {
        return amps_.norm();
    }

    void apply(const Gate &gate);
    void apply(const Circuit &u);
    void apply_pauli(const PauliOperator &p);

   private:
    size_t n_;
    Eigen::VectorXcd amps_;
};

/// <a|b>.
Complex overlap(const DenseState &a, const DenseState &b);
/// |<a|b>|^2.
double fidelity(const DenseState &a, const DenseState &b);

DenseState random_state(size_t n, std::mt19937_64 &rng);
/// (|0...0> + s |1...1>)/sqrt(2) with s = +1 or -1.
DenseState cat_state(size_t n, bool plus = true);

/// Number of binary clock qubits for the history state of size n.
size_t clock_qubits(size_t n);
/// Uniform superposition over time steps 1..n^2 of the CX-ladder CAT
/// circuit applied to |+>|0...0>, entangled with a binary clock holding the
/// step minus one. Data qubits come first.
DenseState history_state(size_t n);
/// The CAT state on the data qubits times the uniform clock superposition
/// over steps n+1..n^2.
DenseState extended_cat_state(size_t n);

/// Matrix of `p` restricted to `qubits` (qubits[j] becomes bit j), phase
/// included. Other qubits of p are ignored.
Eigen::MatrixXcd pauli_matrix(const PauliOperator &p, const std::vector<uint32_t> &qubits);

Eigen::MatrixXcd density_matrix(const DenseState &s);
/// Partial trace keeping `keep`; keep[j] becomes bit j.
Eigen::MatrixXcd rdm(const DenseState &s, const std::vector<uint32_t> &keep);
Eigen::MatrixXcd rdm(const Eigen::MatrixXcd &rho, const std::vector<uint32_t> &keep);

/// (1/2) sum of |eigenvalues| of a - b.
double trace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Trace distance between rho_ij and rho_i (x) rho_j.
double correlation_check(const DenseState &s, uint32_t i, uint32_t j);

/// Sum of weighted Pauli terms.
struct DenseOperator {
    size_t num_qubits = 0;
    std::vector<std::pair<double, PauliOperator>> terms;

    Eigen::MatrixXcd matrix() const;
};

/// k-local Hamiltonian: each term acts on 1..k random qubits with a random
/// non-identity Pauli and a weight drawn from [-1, 1].
DenseOperator random_local_hamiltonian(size_t n, size_t num_terms, size_t k, std::mt19937_64 &rng);

/// sum_t w_t Tr(P_t rho_{supp P_t}), using only reduced density matrices.
double energy_from_rdms(const DenseOperator &h, const Eigen::MatrixXcd &rho);
/// Tr(H rho) with H built on the full space.
double energy_direct(const DenseOperator &h, const Eigen::MatrixXcd &rho);

/// Dense amplitudes of a stabilizer state (global phase arbitrary).
DenseState to_dense(const StabilizerTableau &t);

/// Reduced density matrix of a stabilizer state on `keep`, built from the
/// stabilizer-group elements supported inside `keep`. Works beyond the
/// dense qubit limit as long as `keep` is small.
Eigen::MatrixXcd stabilizer_rdm(const StabilizerTableau &t, const std::vector<uint32_t> &keep);

}  // namespace surflc

#endif
