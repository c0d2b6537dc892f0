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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "surflc/builders.h"
#include "surflc/dense.h"
#include "surflc/surface_code.h"
#include "surflc/tableau.h"
#include "test_util.h"

using namespace surflc;

namespace {

void expect_valid_density(const Eigen::MatrixXcd &rho) {
    EXPECT_TRUE((rho - rho.adjoint()).isZero(1e-10));
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-10);
}

size_t numeric_rank(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    size_t r = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); k++) {
        r += es.eigenvalues()(k) > 1e-9;
    }
    return r;
}

}  // namespace

TEST(History, NormAndSize) {
    for (size_t n = 2; n <= 6; n++) {
        auto h = history_state(n);
        EXPECT_EQ(h.num_qubits(), n + clock_qubits(n));
        EXPECT_NEAR(h.norm(), 1.0, 1e-12);
    }
    EXPECT_EQ(history_state(2).num_qubits(), 4u);
    EXPECT_EQ(clock_qubits(4), 4u);
    EXPECT_THROW(history_state(9), std::invalid_argument);
}

TEST(History, OverlapWithExtendedCat) {
    for (size_t n = 2; n <= 6; n++) {
        double expect = std::sqrt(double(n * n - n)) / double(n);
        EXPECT_NEAR(std::abs(overlap(history_state(n), extended_cat_state(n))), expect, 1e-10) << n;
    }
    EXPECT_NEAR(std::abs(overlap(history_state(4), extended_cat_state(4))), std::sqrt(12.0) / 4.0, 1e-10);
    double prev = 0;
    for (size_t n = 2; n <= 6; n++) {
        double v = std::abs(overlap(history_state(n), extended_cat_state(n)));
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(Overlap, Basics) {
    std::mt19937_64 rng(1);
    auto a = random_state(5, rng);
    EXPECT_NEAR(std::abs(overlap(a, a) - Complex(1.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(overlap(DenseState::basis(3, 2), DenseState::basis(3, 5))), 0.0, 1e-15);
    EXPECT_THROW(overlap(DenseState(2), DenseState(3)), std::invalid_argument);
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-12);
}

TEST(Rdm, ProductAndCat) {
    std::mt19937_64 rng(2);
    DenseState prod = DenseState::basis(4, 0b1010);
    for (std::vector<uint32_t> keep : {std::vector<uint32_t>{0}, {1, 3}, {0, 1, 2}}) {
        auto rho = rdm(prod, keep);
        expect_valid_density(rho);
        EXPECT_EQ(numeric_rank(rho), 1u);
    }
    auto plus = cat_state(5, true), minus = cat_state(5, false);
    EXPECT_NEAR(std::abs(overlap(plus, minus)), 0.0, 1e-12);
    for (std::vector<uint32_t> keep : {std::vector<uint32_t>{0}, {1, 4}, {0, 2, 3}, {0, 1, 2, 3}}) {
        auto a = rdm(plus, keep), b = rdm(minus, keep);
        expect_valid_density(a);
        EXPECT_LT(trace_distance(a, b), 1e-10);
    }
    auto r = random_state(6, rng);
    expect_valid_density(rdm(r, {0, 2, 5}));
    // Partial trace of a density matrix agrees with the state version.
    EXPECT_TRUE((rdm(density_matrix(r), {1, 4}) - rdm(r, {1, 4})).isZero(1e-12));
}

TEST(Energy, Examples) {
    DenseOperator z{1, {{1.0, PauliOperator::from_string("Z")}}};
    EXPECT_NEAR(energy_from_rdms(z, density_matrix(DenseState(1))), 1.0, 1e-12);
    EXPECT_NEAR(energy_direct(z, density_matrix(DenseState::basis(1, 1))), -1.0, 1e-12);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; k++) {
        auto h = random_local_hamiltonian(6, 8, 3, rng);
        for (const auto &t : h.terms) {
            EXPECT_LE(t.second.weight(), 3u);
        }
        EXPECT_TRUE((h.matrix() - h.matrix().adjoint()).isZero(1e-10));
        Eigen::MatrixXcd rho = density_matrix(random_state(6, rng));
        if (k % 2) {
            rho.setZero();
            for (int j = 0; j < 4; j++) {
                rho += 0.25 * density_matrix(random_state(6, rng));
            }
        }
        double direct = (h.matrix() * rho).trace().real();
        EXPECT_NEAR(energy_from_rdms(h, rho), direct, 1e-10);
        EXPECT_NEAR(energy_direct(h, rho), direct, 1e-10);
    }
}

TEST(Correlation, Examples) {
    EXPECT_NEAR(correlation_check(DenseState::basis(4, 5), 0, 3), 0.0, 1e-12);
    auto cat = cat_state(6, true);
    for (uint32_t i = 0; i < 6; i++) {
        for (uint32_t j = i + 1; j < 6; j++) {
            EXPECT_NEAR(correlation_check(cat, i, j), 0.5, 1e-10);
        }
    }
    auto h = history_state(4);
    for (uint32_t i = 0; i < 4; i++) {
        for (uint32_t j = i + 1; j < 4; j++) {
            EXPECT_GT(correlation_check(h, i, j), 1e-3);
        }
    }
}

TEST(Dense, NormPreservedAndMatchesUnitary) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 100; k++) {
        size_t n = 1 + rng() % 6;
        Circuit u = random_clifford_circuit(n, rng() % 6, rng);
        DenseState s = random_state(n, rng);
        Eigen::VectorXcd expect = testutil::circuit_unitary(u) * s.amplitudes();
        s.apply(u);
        EXPECT_NEAR(s.norm(), 1.0, 1e-12);
        EXPECT_TRUE((s.amplitudes() - expect).isZero(1e-10));
    }
}

TEST(Dense, AgreesWithTableau) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; k++) {
        size_t n = 1 + rng() % 12;
        Circuit u = random_clifford_circuit(n, rng() % 8, rng);
        DenseState d(n);
        d.apply(u);
        auto t = run_circuit(u);
        EXPECT_NEAR(fidelity(d, to_dense(t)), 1.0, 1e-10);
        std::vector<uint32_t> keep{0};
        if (n > 2) {
            keep.push_back(uint32_t(n - 1));
        }
        EXPECT_LT(trace_distance(rdm(d, keep), stabilizer_rdm(t, keep)), 1e-10);
    }
}

TEST(Dense, SizeLimit) {
    EXPECT_THROW(DenseState(kMaxDenseQubits + 1), std::invalid_argument);
    EXPECT_EQ(DenseState{kMaxDenseQubits}.num_qubits(), kMaxDenseQubits);
    auto t = run_circuit(synthesize_encoder(pinned_surface_spec(build_torus(3))));
    EXPECT_THROW(to_dense(t), std::invalid_argument);
    auto small = stabilizer_rdm(t, {0, 1});
    expect_valid_density(small);
}
