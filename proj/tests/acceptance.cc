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

// Runs the acceptance matrix and cross-checks the exact criteria against
// oracles that do not share code with the library algorithms.

#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "surflc/builders.h"
#include "surflc/circuit.h"
#include "surflc/gf2_topology.h"
#include "surflc/light_cone.h"
#include "surflc/suite.h"
#include "test_util.h"

using namespace surflc;

namespace {

struct Oracle {
    bool pass = true;
    std::string note;
};

// Plain Gaussian elimination over bytes.
size_t oracle_rank(std::vector<std::vector<uint8_t>> rows) {
    size_t rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && rank < rows.size(); c++) {
        size_t p = rank;
        while (p < rows.size() && !rows[p][c]) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][c]) {
                for (size_t k = c; k < cols; k++) {
                    rows[r][k] ^= rows[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

Oracle structure_oracle() {
    Oracle o;
    size_t count = 0;
    for (const auto &label : testutil::fixture_labels()) {
        auto g = testutil::load_fixture(label);
        size_t v = g.num_vertices(), e = g.num_edges(), f = g.num_faces();
        size_t ev = 4, ee = 6, ef = 4;
        size_t n = label == "tetrahedron" ? 0 : size_t(std::stoul(label.substr(label.find('-') + 1)));
        if (label.rfind("cube", 0) == 0) {
            ev = 6 * n * n + 2, ee = 12 * n * n, ef = 6 * n * n;
        } else if (label.rfind("torus", 0) == 0) {
            ev = n * n, ee = 2 * n * n, ef = n * n;
        }
        // Vertex-edge and edge-face incidence rows.
        std::vector<std::vector<uint8_t>> d1(v, std::vector<uint8_t>(e)), d2t(f, std::vector<uint8_t>(e));
        for (uint32_t k = 0; k < e; k++) {
            d1[g.edge(k)[0]][k] = 1;
            d1[g.edge(k)[1]][k] = 1;
        }
        for (uint32_t k = 0; k < f; k++) {
            for (uint32_t x : g.face_edges(k)) {
                d2t[k][x] = 1;
            }
        }
        int64_t chi = int64_t(v) - int64_t(e) + int64_t(f);
        size_t logical = e - oracle_rank(d1) - oracle_rank(d2t);
        size_t expect_logical = label.rfind("torus", 0) == 0 ? 2 : 0;
        if (v != ev || e != ee || f != ef || int64_t(logical) != 2 - chi || logical != expect_logical) {
            o.pass = false;
        }
        count++;
    }
    o.note = "closed-form counts and independent ranks on " + std::to_string(count) + " fixtures";
    return o;
}

Oracle separation_oracle() {
    Oracle o;
    size_t pairs = 0, mismatches = 0;
    auto t = testutil::load_fixture("tetrahedron");
    for (uint64_t gm = 0; gm < 64; gm++) {
        BitVec gamma(6);
        for (size_t k = 0; k < 6; k++) {
            gamma.set(k, (gm >> k) & 1);
        }
        auto coset = testutil::brute_class(t, gamma);
        for (uint64_t xm = 0; xm < 64; xm++) {
            BitVec x(6);
            for (size_t k = 0; k < 6; k++) {
                x.set(k, (xm >> k) & 1);
            }
            mismatches += is_gamma_separating(t, Chain{1, gamma}, EdgeSet(x)) != testutil::brute_separates(coset, x);
            pairs++;
        }
    }
    auto c = testutil::load_fixture("cube-1");
    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; k++) {
        auto path = testutil::random_path(c, rng);
        Chain gamma = Chain::from_path(c.num_edges(), path);
        auto coset = testutil::brute_class(c, gamma.coeffs);
        for (int j = 0; j < 200; j++) {
            BitVec x = testutil::random_bits(c.num_edges(), rng, j < 100 ? 0.25 : 0.6);
            mismatches += is_gamma_separating(c, gamma, EdgeSet(x)) != testutil::brute_separates(coset, x);
            pairs++;
        }
    }
    o.pass = mismatches == 0;
    o.note = "brute-force coset oracle " + std::to_string(pairs - mismatches) + "/" + std::to_string(pairs);
    return o;
}

Oracle support_oracle() {
    Oracle o;
    size_t cases = 0, mismatches = 0;
    std::mt19937_64 rng(47);
    for (const char *label : {"tetrahedron", "cube-1"}) {
        auto g = testutil::load_fixture(label);
        size_t n = g.num_edges();
        for (int k = 0; k < 20; k++) {
            Circuit u = random_clifford_circuit(n, 1 + rng() % 3, rng);
            for (int j = 0; j < 5; j++) {
                Chain gamma = Chain::from_path(n, testutil::random_path(g, rng));
                BitVec brute = ~BitVec(n);
                for (const auto &m : testutil::brute_class(g, gamma.coeffs)) {
                    brute &= testutil::dag_light_cone(u, m, false);
                }
                mismatches += effective_support_A(g, u, gamma).mask() != brute;
                cases++;
            }
        }
    }
    o.pass = mismatches == 0;
    o.note = "gate-DAG oracle " + std::to_string(cases - mismatches) + "/" + std::to_string(cases);
    return o;
}

}  // namespace

int main(int argc, char **argv) {
    SuiteOptions opt;
    opt.records = false;
    opt.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string only;
    for (int k = 1; k < argc; k++) {
        if (!std::strcmp(argv[k], "--jobs") && k + 1 < argc) {
            opt.jobs = std::stoul(argv[++k]);
        } else {
            only = argv[k];
        }
    }
    int failed = 0;
    for (const auto &c : acceptance_matrix()) {
        if (!only.empty() && only != c.key && only != std::to_string(c.id)) {
            continue;
        }
        CriterionResult r = c.run(opt);
        std::string line = r.summary;
        bool pass = r.pass;
        Oracle o;
        bool has_oracle = true;
        switch (c.id) {
            case 1:
                o = structure_oracle();
                break;
            case 3:
                o = separation_oracle();
                break;
            case 4:
                o = support_oracle();
                break;
            default:
                has_oracle = false;
        }
        if (has_oracle) {
            pass = pass && o.pass;
            line += "; " + o.note + (o.pass ? "" : " FAILED");
        }
        std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", c.id, c.key.c_str(), line.c_str());
        std::fflush(stdout);
        failed += !pass;
    }
    std::printf("%d criteria failed\n", failed);
    return failed ? 1 : 0;
}
