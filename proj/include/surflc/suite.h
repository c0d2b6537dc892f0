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

#ifndef SURFLC_SUITE_H
#define SURFLC_SUITE_H

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "surflc/complex_ops.h"
#include "surflc/polygonal_complex.h"

namespace surflc {

/// A named built-in complex such as cube-3. `n` is ignored for the tetrahedron.
struct FixtureRef {
    std::string name;
    size_t n = 0;

    std::string label() const;
    PolygonalComplex build() const;
    /// Accepts "tetrahedron", "cube-3", "torus-4".
    static FixtureRef parse(const std::string &label);
};

/// Every shipped fixture: tetrahedron, cube 1..5, torus 3..6.
std::vector<FixtureRef> all_fixtures();

struct SuiteOptions {
    uint64_t seed = 20260101;
    size_t jobs = 1;
    KEdgeRule k_rule = KEdgeRule::FaceEdges;
    /// Replaces the default fixture list of a criterion when non-empty.
    std::vector<FixtureRef> fixtures;
    /// Per-instance records are kept only when set.
    bool records = true;
};

struct CriterionResult {
    int id = 0;
    std::string key;
    bool pass = true;
    size_t instances = 0;
    size_t failures = 0;
    std::string summary;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();

    nlohmann::ordered_json to_json() const;
};

using CriterionFn = std::function<CriterionResult(const SuiteOptions &)>;

struct CriterionEntry {
    int id;
    std::string key;
    std::string title;
    CriterionFn run;
};

/// The fourteen criteria in order.
const std::vector<CriterionEntry> &acceptance_matrix();
const CriterionEntry *find_criterion(const std::string &key);

CriterionResult check_structure(const SuiteOptions &opt);
CriterionResult check_chain_law(const SuiteOptions &opt);
CriterionResult check_separation(const SuiteOptions &opt);
CriterionResult check_effective_support(const SuiteOptions &opt);
CriterionResult check_comut_op(const SuiteOptions &opt);
CriterionResult check_large_b(const SuiteOptions &opt);
CriterionResult check_sausage(const SuiteOptions &opt);
CriterionResult check_ball_bounds(const SuiteOptions &opt);
CriterionResult check_get_around(const SuiteOptions &opt);
CriterionResult check_appendix_a(const SuiteOptions &opt);
CriterionResult check_appendix_b(const SuiteOptions &opt);
CriterionResult check_appendix_c(const SuiteOptions &opt);
CriterionResult check_cross_engine(const SuiteOptions &opt);
CriterionResult check_qecc(const SuiteOptions &opt);

/// Generator for instance `index` of criterion `id`; independent of --jobs.
std::mt19937_64 instance_rng(uint64_t seed, int id, uint64_t index);

/// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any body is rethrown.
void parallel_for(size_t count, size_t jobs, const std::function<void(size_t)> &body);

}  // namespace surflc

#endif
