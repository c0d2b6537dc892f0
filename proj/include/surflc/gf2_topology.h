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

#ifndef SURFLC_GF2_TOPOLOGY_H
#define SURFLC_GF2_TOPOLOGY_H

#include <optional>
#include <vector>

#include "surflc/complex_ops.h"
#include "surflc/errors.h"
#include "surflc/gf2_matrix.h"
#include "surflc/polygonal_complex.h"

namespace surflc {

/// d1 is |V| x |E| (vertex incidence), d2 is |E| x |F| (face incidence).
struct BoundaryMatrices {
    Gf2Matrix d1;
    Gf2Matrix d2;
};
BoundaryMatrices boundary_matrices(const PolygonalComplex &g);

struct HomologyReport {
    size_t h0 = 0, h1 = 0, h2 = 0;
    /// Cohomology dimensions, computed from the transposed maps.
    size_t ch0 = 0, ch1 = 0, ch2 = 0;
    int64_t euler = 0;
    size_t rank_d1 = 0, rank_d2 = 0;
};
HomologyReport homology(const PolygonalComplex &g);

/// A GF(2) chain on vertices (grade 0), edges (1) or faces (2).
struct Chain {
    int grade = 1;
    BitVec coeffs;

    static Chain edges(const EdgeSet &s) {
        return Chain{1, s.mask()};
    }
    static Chain from_path(size_t num_edges, const std::vector<uint32_t> &path);
    EdgeSet support() const {
        return EdgeSet(coeffs);
    }
    bool operator==(const Chain &other) const = default;
};

/// A member of a homology class together with the faces whose boundary was
/// added to reach it.
struct ClassMember {
    Chain chain;
    BitVec faces;
};

/// Reusable solver for homology-class questions on one complex.
class ClassSolver {
   public:
    explicit ClassSolver(const PolygonalComplex &g);

    /// The witness faces w with d2 w = a + b, when a and b are homologous.
    std::optional<BitVec> same_class(const Chain &a, const Chain &b) const;
    /// A class member disjoint from `x`, or nullopt when `x` separates.
    std::optional<ClassMember> avoiding(const Chain &gamma, const EdgeSet &x) const;
    /// A class member supported inside `b`.
    std::optional<ClassMember> within(const Chain &gamma, const EdgeSet &b) const;
    bool separates(const Chain &gamma, const EdgeSet &x) const {
        return !avoiding(gamma, x).has_value();
    }
    /// A basis of the edge sets y inside `x` meeting every face evenly.
    /// `x` separates gamma exactly when some y meets gamma oddly, so the
    /// basis certifies separation for every chain at once.
    std::vector<BitVec> obstructions(const EdgeSet &x) const;
    /// Every member of the class of gamma; 2^rank(d2) of them.
    std::vector<BitVec> enumerate_class(const Chain &gamma) const;
    const Gf2Matrix &d2() const {
        return d2_;
    }

   private:
    size_t num_edges_;
    Gf2Matrix d2_;
};

std::optional<BitVec> same_class(const PolygonalComplex &g, const Chain &a, const Chain &b);
std::optional<ClassMember> class_member_avoiding(const PolygonalComplex &g, const Chain &gamma, const EdgeSet &x);
std::optional<ClassMember> class_member_within(const PolygonalComplex &g, const Chain &gamma, const EdgeSet &b);
bool is_gamma_separating(const PolygonalComplex &g, const Chain &gamma, const EdgeSet &x);

/// A copath-connected component of the separating set `x` that separates on
/// its own. Components are dropped lowest-index first while the remainder
/// still separates. Throws PreconditionError("input not separating").
EdgeSet reduce_to_connected_separator(const PolygonalComplex &g, const Chain &gamma, const EdgeSet &x);

struct SimpleConnectivity {
    bool holds = true;
    /// First edge whose local subcomplex has nonzero H1 or H^1.
    std::optional<uint32_t> witness;
    HomologyReport witness_report;
};
SimpleConnectivity r_simply_connected(
    const PolygonalComplex &g, uint32_t r, KEdgeRule rule = KEdgeRule::FaceEdges);

/// True when the local subcomplex around `e` has trivial H1 and H^1.
bool locally_simply_connected(
    const PolygonalComplex &g, uint32_t e, uint32_t r, KEdgeRule rule = KEdgeRule::FaceEdges);

struct DetourResult {
    /// nullopt means no class member avoids the ball although every
    /// precondition held: a counterexample.
    std::optional<ClassMember> member;
    EdgeSet blocked;
};

/// How far from the center the path endpoints must stay.
enum class DetourEndpoints {
    /// Copath distance at least r + 2 from x0.
    OutsideNextShell,
    /// Copath distance at least r + 1, i.e. merely outside the ball. Detours
    /// can then fail when the ball cuts the surface in two.
    OutsideBall,
};

/// Looks for a member of the class of `path` avoiding the copath ball of
/// radius `r` around `x0`. The subcomplex around `x0` of radius r+1 must have
/// trivial H1 and H^1 and the endpoints must be far enough away per
/// `endpoints`; otherwise throws PreconditionError.
DetourResult detour_path(
    const PolygonalComplex &g,
    const std::vector<uint32_t> &path,
    uint32_t x0,
    uint32_t r,
    KEdgeRule rule = KEdgeRule::FaceEdges,
    DetourEndpoints endpoints = DetourEndpoints::OutsideNextShell);

enum class CheckStatus { Holds, Fails, PreconditionFailed };
const char *check_status_name(CheckStatus s);

struct BoundaryCheck {
    CheckStatus status = CheckStatus::Holds;
    EdgeSet boundary;
    size_t components = 0;
    std::string reason;
};

/// Whether the GF(2) boundary of the faces of the subcomplex around `e` is
/// path connected. Requires that subcomplex to be copath connected with
/// trivial H1.
BoundaryCheck connected_boundary_check(
    const PolygonalComplex &g, uint32_t e, uint32_t r, KEdgeRule rule = KEdgeRule::FaceEdges);

}  // namespace surflc

#endif
