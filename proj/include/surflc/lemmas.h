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

#ifndef SURFLC_LEMMAS_H
#define SURFLC_LEMMAS_H

#include <optional>
#include <string>
#include <vector>

#include "surflc/circuit.h"
#include "surflc/gf2_topology.h"
#include "surflc/pauli.h"
#include "surflc/surface_code.h"
#include "surflc/tableau.h"

namespace surflc {

enum class Parity { Even, Odd };
/// |a & b| mod 2.
Parity intersection_parity(const EdgeSet &a, const EdgeSet &b);

/// Product of the X-stars of `vertices`; equals X on the edge coboundary.
PauliOperator coboundary_operator(const PolygonalComplex &g, const BitVec &vertices);

/// A basis (with exact signs) of the stabilizer-group elements of `psi`
/// supported inside `region`.
std::vector<PauliOperator> stabilizers_within(const StabilizerTableau &psi, const EdgeSet &region);

/// c^d, saturating at UINT64_MAX.
uint64_t saturating_pow(uint64_t c, uint64_t d);

enum class Verdict { Verified, Violated, PreconditionFailed };
const char *verdict_name(Verdict v);

/// A complex, a circuit meant to prepare one of its code states, and the
/// derived objects shared by several checks.
class LemmaContext {
   public:
    LemmaContext(const PolygonalComplex &g, Circuit u);

    const PolygonalComplex &complex() const {
        return *g_;
    }
    const Circuit &circuit() const {
        return u_;
    }
    const StabilizerTableau &state() const {
        return psi_;
    }
    const ClassSolver &solver() const {
        return solver_;
    }
    const StabilizerGroupSpec &code() const {
        return code_;
    }
    /// Whether U|0...0> is stabilized by every surface generator.
    bool is_code_state() const {
        return code_state_;
    }

    EdgeSet support_a(const Chain &gamma) const;
    EdgeSet support_b(const EdgeSet &a) const;

   private:
    const PolygonalComplex *g_;
    Circuit u_;
    StabilizerGroupSpec code_;
    StabilizerTableau psi_;
    ClassSolver solver_;
    bool code_state_;
};

struct ComutOpResult {
    Verdict verdict = Verdict::Verified;
    /// Which premise failed, when verdict is PreconditionFailed.
    std::string premise;
    /// supp(P) meets supp(gamma).
    bool overlaps_gamma = false;
    /// P and gamma_Z share support with an odd number of X/Z clashes.
    bool anticommutes = false;
};

/// Checks P gamma_Z |psi> = gamma_Z P |psi> for P stabilizing psi and
/// supported off B. `b` is the B set for gamma.
ComutOpResult verify_comut_op(
    const LemmaContext &ctx, const Chain &gamma, const EdgeSet &b, const PauliOperator &p);
ComutOpResult verify_comut_op(
    const PolygonalComplex &g, const Circuit &u, const Chain &gamma, const PauliOperator &p);

struct LargeBResult {
    Verdict verdict = Verdict::Verified;
    std::string premise;
    std::optional<ClassMember> member;
    size_t size_a = 0;
    size_t size_b = 0;
    uint32_t distance = 0;
    size_t locality = 1;
    size_t depth = 0;
    bool b_bound = false;
    bool a_bound = false;
};

/// Looks for a class member of gamma inside B and checks |B| >= d(e,f) and
/// |A| c^depth >= d(e,f), with d the path metric. `b_override` replaces the
/// computed B (harness self-test).
LargeBResult verify_large_b(
    const LemmaContext &ctx,
    const std::vector<uint32_t> &path,
    const std::optional<EdgeSet> &b_override = std::nullopt);
LargeBResult verify_large_b(const PolygonalComplex &g, const Circuit &u, const std::vector<uint32_t> &path);

struct AppendixAReport {
    /// U Z_i U^dagger for each qubit i.
    std::vector<PauliOperator> terms;
    bool commuting = true;
    size_t max_support = 0;
    uint64_t support_bound = 0;
    bool support_ok = true;
    int64_t ground_energy = 0;
    bool energy_ok = true;
    bool unique_ground_state = true;
    int64_t gap = 0;
    bool gap_ok = true;

    bool all_pass() const {
        return commuting && support_ok && energy_ok && unique_ground_state && gap_ok;
    }
};

/// The commuting Hamiltonian -sum_i U Z_i U^dagger and its exact properties.
AppendixAReport appendix_a_hamiltonian(const Circuit &u);

}  // namespace surflc

#endif
