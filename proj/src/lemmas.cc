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

#include "surflc/lemmas.h"

#include "surflc/light_cone.h"
#include "surflc/metric.h"

using namespace surflc;

Parity surflc::intersection_parity(const EdgeSet &a, const EdgeSet &b) {
    return a.mask().dot(b.mask()) ? Parity::Odd : Parity::Even;
}

PauliOperator surflc::coboundary_operator(const PolygonalComplex &g, const BitVec &vertices) {
    PauliOperator p(g.num_edges());
    vertices.for_each_set([&](size_t v) {
        for (uint32_t e : g.vertex_edges(uint32_t(v))) {
            p.x().flip(e);
        }
    });
    return p;
}

std::vector<PauliOperator> surflc::stabilizers_within(const StabilizerTableau &psi, const EdgeSet &region) {
    size_t n = psi.num_qubits();
    const auto &stab = psi.stabilizers();
    EdgeSet outside = region.complement();
    auto cols = outside.members();
    // Row i of m lists stabilizer i's bits outside the region; we want
    // combinations of rows that vanish there.
    Gf2Matrix mt(2 * cols.size(), n);
    for (size_t i = 0; i < n; i++) {
        for (size_t c = 0; c < cols.size(); c++) {
            if (stab[i].x()[cols[c]]) {
                mt.set(2 * c, i);
            }
            if (stab[i].z()[cols[c]]) {
                mt.set(2 * c + 1, i);
            }
        }
    }
    std::vector<PauliOperator> out;
    for (const auto &combo : mt.kernel_basis()) {
        PauliOperator p(n);
        combo.for_each_set([&](size_t i) {
            p *= stab[i];
        });
        out.push_back(std::move(p));
    }
    return out;
}

uint64_t surflc::saturating_pow(uint64_t c, uint64_t d) {
    uint64_t out = 1;
    for (uint64_t k = 0; k < d; k++) {
        if (c != 0 && out > UINT64_MAX / c) {
            return UINT64_MAX;
        }
        out *= c;
    }
    return out;
}

const char *surflc::verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified:
            return "verified";
        case Verdict::Violated:
            return "violated";
        default:
            return "precondition_failed";
    }
}

LemmaContext::LemmaContext(const PolygonalComplex &g, Circuit u)
    : g_(&g), u_(std::move(u)), code_(surface_generators(g)), psi_(g.num_edges()), solver_(g) {
    if (u_.qubit_count != g.num_edges()) {
        throw std::invalid_argument("circuit width differs from the edge count");
    }
    psi_.apply(u_);
    code_state_ = true;
    for (const auto &s : code_.generators) {
        if (!psi_.stabilizes(s)) {
            code_state_ = false;
            break;
        }
    }
}

EdgeSet LemmaContext::support_a(const Chain &gamma) const {
    return effective_support_A(solver_, u_, gamma);
}

EdgeSet LemmaContext::support_b(const EdgeSet &a) const {
    return light_cone(u_, a, Direction::Up);
}

ComutOpResult surflc::verify_comut_op(
    const LemmaContext &ctx, const Chain &gamma, const EdgeSet &b, const PauliOperator &p) {
    ComutOpResult out;
    auto fail = [&](const char *why) {
        out.verdict = Verdict::PreconditionFailed;
        out.premise = why;
        return out;
    };
    if (!ctx.is_code_state()) {
        return fail("circuit output is not a code state");
    }
    if (!p.is_hermitian() || !ctx.state().stabilizes(p)) {
        return fail("P does not stabilize psi");
    }
    if (p.support().intersects(b)) {
        return fail("P is not supported off B");
    }
    PauliOperator gz = PauliOperator::z_on(gamma.support());
    out.overlaps_gamma = p.support().intersects(gamma.support());
    out.anticommutes = !p.commutes(gz);
    // Two independent evaluations: the displaced-state identity, and P
    // acting on the tableau of gamma_Z psi.
    bool equal = displaced_states_equal(ctx.state(), p * gz, gz * p);
    StabilizerTableau moved = ctx.state();
    moved.apply_pauli(gz);
    bool fixed = moved.stabilizes(p);
    if (equal != fixed) {
        throw std::logic_error("verify_comut_op: evaluations disagree");
    }
    out.verdict = equal ? Verdict::Verified : Verdict::Violated;
    return out;
}

ComutOpResult surflc::verify_comut_op(
    const PolygonalComplex &g, const Circuit &u, const Chain &gamma, const PauliOperator &p) {
    LemmaContext ctx(g, u);
    return verify_comut_op(ctx, gamma, ctx.support_b(ctx.support_a(gamma)), p);
}

LargeBResult surflc::verify_large_b(
    const LemmaContext &ctx, const std::vector<uint32_t> &path, const std::optional<EdgeSet> &b_override) {
    LargeBResult out;
    const auto &g = ctx.complex();
    if (!ctx.is_code_state()) {
        out.verdict = Verdict::PreconditionFailed;
        out.premise = "circuit output is not a code state";
        return out;
    }
    if (path.empty()) {
        out.verdict = Verdict::PreconditionFailed;
        out.premise = "empty path";
        return out;
    }
    Chain gamma = Chain::from_path(g.num_edges(), path);
    EdgeSet a = ctx.support_a(gamma);
    EdgeSet b = b_override ? *b_override : ctx.support_b(a);
    out.size_a = a.size();
    out.size_b = b.size();
    out.distance = *edge_distance(g, path.front(), path.back(), Metric::Path);
    out.locality = ctx.circuit().locality();
    out.depth = ctx.circuit().depth();
    out.member = ctx.solver().within(gamma, b);
    out.b_bound = out.size_b >= out.distance;
    uint64_t reach = saturating_pow(out.locality, out.depth);
    out.a_bound = out.size_a != 0 && reach >= (out.distance + out.size_a - 1) / out.size_a;
    if (out.distance == 0) {
        out.a_bound = true;
    }
    bool ok = out.member.has_value() && out.b_bound && out.a_bound;
    out.verdict = ok ? Verdict::Verified : Verdict::Violated;
    return out;
}

LargeBResult surflc::verify_large_b(const PolygonalComplex &g, const Circuit &u, const std::vector<uint32_t> &path) {
    return verify_large_b(LemmaContext(g, u), path);
}

AppendixAReport surflc::appendix_a_hamiltonian(const Circuit &u) {
    u.validate();
    AppendixAReport r;
    size_t n = u.qubit_count;
    StabilizerTableau psi = run_circuit(u);
    r.terms = psi.stabilizers();
    for (size_t i = 0; i < n && r.commuting; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!r.terms[i].commutes(r.terms[j])) {
                r.commuting = false;
                break;
            }
        }
    }
    r.support_bound = saturating_pow(u.locality(), u.depth());
    for (const auto &t : r.terms) {
        r.max_support = std::max(r.max_support, t.weight());
    }
    r.support_ok = r.max_support <= r.support_bound;
    // Each term has eigenvalue +1 on U|0...0>, so the energy of -sum H_i is -n.
    r.ground_energy = 0;
    for (const auto &t : r.terms) {
        r.ground_energy -= psi.expectation(t);
    }
    r.energy_ok = r.ground_energy == -int64_t(n);
    // Independent commuting +-1 terms: every sign pattern s is a 1-dim joint
    // eigenspace with energy -n + 2|s|.
    r.unique_ground_state = r.commuting && symplectic_rank(r.terms) == n;
    r.gap = r.unique_ground_state && n > 0 ? 2 : 0;
    r.gap_ok = n == 0 || r.gap == 2;
    return r;
}
