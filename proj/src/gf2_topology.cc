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

#include "surflc/gf2_topology.h"

#include "surflc/metric.h"

using namespace surflc;

BoundaryMatrices surflc::boundary_matrices(const PolygonalComplex &g) {
    BoundaryMatrices m{Gf2Matrix(g.num_vertices(), g.num_edges()), Gf2Matrix(g.num_edges(), g.num_faces())};
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        m.d1.set(g.edge(e)[0], e);
        m.d1.set(g.edge(e)[1], e);
    }
    for (uint32_t f = 0; f < g.num_faces(); f++) {
        for (uint32_t e : g.face_edges(f)) {
            m.d2.set(e, f);
        }
    }
    return m;
}

HomologyReport surflc::homology(const PolygonalComplex &g) {
    auto m = boundary_matrices(g);
    HomologyReport h;
    size_t nv = g.num_vertices(), ne = g.num_edges(), nf = g.num_faces();
    h.rank_d1 = m.d1.rank();
    h.rank_d2 = m.d2.rank();
    h.h0 = nv - h.rank_d1;
    h.h1 = ne - h.rank_d1 - h.rank_d2;
    h.h2 = nf - h.rank_d2;
    size_t t1 = m.d1.transposed().rank();
    size_t t2 = m.d2.transposed().rank();
    h.ch0 = nv - t1;
    h.ch1 = ne - t1 - t2;
    h.ch2 = nf - t2;
    h.euler = g.euler_characteristic();
    return h;
}

Chain Chain::from_path(size_t num_edges, const std::vector<uint32_t> &path) {
    Chain c{1, BitVec(num_edges)};
    for (uint32_t e : path) {
        c.coeffs.flip(e);
    }
    return c;
}

static void require_edge_chain(const Chain &c, size_t num_edges) {
    if (c.grade != 1 || c.coeffs.size() != num_edges) {
        throw std::invalid_argument("expected a 1-chain over " + std::to_string(num_edges) + " edges");
    }
}

ClassSolver::ClassSolver(const PolygonalComplex &g) : num_edges_(g.num_edges()), d2_(boundary_matrices(g).d2) {
}

std::optional<BitVec> ClassSolver::same_class(const Chain &a, const Chain &b) const {
    require_edge_chain(a, num_edges_);
    require_edge_chain(b, num_edges_);
    return d2_.solve(a.coeffs ^ b.coeffs);
}

std::optional<ClassMember> ClassSolver::avoiding(const Chain &gamma, const EdgeSet &x) const {
    require_edge_chain(gamma, num_edges_);
    // Need faces w with (d2 w) restricted to x equal to gamma restricted to x.
    Gf2Matrix restricted = d2_.select_rows(x.mask());
    BitVec rhs(x.size());
    size_t k = 0;
    x.mask().for_each_set([&](size_t e) {
        rhs.set(k++, gamma.coeffs[e]);
    });
    std::optional<BitVec> w = restricted.solve(rhs);
    if (!w) {
        return std::nullopt;
    }
    ClassMember m{gamma, *w};
    m.chain.coeffs ^= d2_.apply(*w);
    return m;
}

std::optional<ClassMember> ClassSolver::within(const Chain &gamma, const EdgeSet &b) const {
    return avoiding(gamma, b.complement());
}

std::vector<BitVec> ClassSolver::obstructions(const EdgeSet &x) const {
    auto rows = x.members();
    // Left kernel of the selected rows of d2, lifted back to edge indices.
    Gf2Matrix t = d2_.select_rows(x.mask()).transposed();
    std::vector<BitVec> out;
    for (const auto &k : t.kernel_basis()) {
        BitVec y(num_edges_);
        k.for_each_set([&](size_t i) {
            y.set(rows[i]);
        });
        out.push_back(std::move(y));
    }
    return out;
}

std::vector<BitVec> ClassSolver::enumerate_class(const Chain &gamma) const {
    require_edge_chain(gamma, num_edges_);
    // Images of an independent set of faces span Im d2.
    Gf2Matrix cols = d2_.transposed();
    std::vector<BitVec> images;
    for (size_t f = 0; f < cols.num_rows(); f++) {
        images.push_back(cols.row(f));
    }
    auto echelon = row_echelon(std::move(images));
    const auto &basis = echelon.rows;
    if (basis.size() > 24) {
        throw std::invalid_argument("enumerate_class: class too large to enumerate");
    }
    std::vector<BitVec> out;
    out.reserve(size_t{1} << basis.size());
    for (uint64_t mask = 0; mask < (uint64_t{1} << basis.size()); mask++) {
        BitVec c = gamma.coeffs;
        for (size_t j = 0; j < basis.size(); j++) {
            if ((mask >> j) & 1) {
                c ^= basis[j];
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<BitVec> surflc::same_class(const PolygonalComplex &g, const Chain &a, const Chain &b) {
    return ClassSolver(g).same_class(a, b);
}

std::optional<ClassMember> surflc::class_member_avoiding(
    const PolygonalComplex &g, const Chain &gamma, const EdgeSet &x) {
    return ClassSolver(g).avoiding(gamma, x);
}

std::optional<ClassMember> surflc::class_member_within(
    const PolygonalComplex &g, const Chain &gamma, const EdgeSet &b) {
    return ClassSolver(g).within(gamma, b);
}

bool surflc::is_gamma_separating(const PolygonalComplex &g, const Chain &gamma, const EdgeSet &x) {
    return ClassSolver(g).separates(gamma, x);
}

EdgeSet surflc::reduce_to_connected_separator(const PolygonalComplex &g, const Chain &gamma, const EdgeSet &x) {
    ClassSolver solver(g);
    if (!solver.separates(gamma, x)) {
        throw PreconditionError("input not separating");
    }
    auto comps = copath_components(g, x);
    EdgeSet current = x;
    std::vector<EdgeSet> kept;
    for (const auto &c : comps) {
        EdgeSet rest = current - c;
        if (solver.separates(gamma, rest)) {
            current = rest;
        } else {
            kept.push_back(c);
        }
    }
    if (kept.size() == 1) {
        return kept[0];
    }
    // More than one component is still needed. Fall back to testing each
    // survivor alone before giving up.
    for (const auto &c : kept) {
        if (solver.separates(gamma, c)) {
            return c;
        }
    }
    throw std::runtime_error("no single copath-connected component separates");
}

bool surflc::locally_simply_connected(const PolygonalComplex &g, uint32_t e, uint32_t r, KEdgeRule rule) {
    auto h = homology(subcomplex_K(g, e, r, rule).complex);
    return h.h1 == 0 && h.ch1 == 0;
}

SimpleConnectivity surflc::r_simply_connected(const PolygonalComplex &g, uint32_t r, KEdgeRule rule) {
    require_two_faces_per_edge(g, "r_simply_connected");
    SimpleConnectivity out;
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        auto h = homology(subcomplex_K(g, e, r, rule).complex);
        if (h.h1 != 0 || h.ch1 != 0) {
            out.holds = false;
            out.witness = e;
            out.witness_report = h;
            break;
        }
    }
    return out;
}

DetourResult surflc::detour_path(
    const PolygonalComplex &g,
    const std::vector<uint32_t> &path,
    uint32_t x0,
    uint32_t r,
    KEdgeRule rule,
    DetourEndpoints endpoints) {
    require_two_faces_per_edge(g, "detour_path");
    if (path.empty()) {
        throw PreconditionError("empty path");
    }
    for (uint32_t e : path) {
        if (e >= g.num_edges()) {
            throw PreconditionError("edge " + std::to_string(e) + " out of range");
        }
    }
    for (size_t k = 0; k + 1 < path.size(); k++) {
        if (!g.common_vertex(path[k], path[k + 1])) {
            throw PreconditionError("consecutive path edges share no vertex");
        }
    }
    DetourResult out;
    out.blocked = ball(g, x0, r, Metric::Copath);
    uint32_t keep_out = endpoints == DetourEndpoints::OutsideNextShell ? r + 1 : r;
    auto dist = distances_from(g, x0, Metric::Copath);
    if (dist[path.front()] <= keep_out || dist[path.back()] <= keep_out) {
        throw PreconditionError(
            "path endpoint within copath distance " + std::to_string(keep_out) + " of the center");
    }
    if (!locally_simply_connected(g, x0, r + 1, rule)) {
        throw PreconditionError("local subcomplex is not simply connected");
    }
    out.member = class_member_avoiding(g, Chain::from_path(g.num_edges(), path), out.blocked);
    return out;
}

const char *surflc::check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Holds:
            return "holds";
        case CheckStatus::Fails:
            return "fails";
        default:
            return "precondition_failed";
    }
}

BoundaryCheck surflc::connected_boundary_check(const PolygonalComplex &g, uint32_t e, uint32_t r, KEdgeRule rule) {
    auto k = subcomplex_K(g, e, r, rule);
    BoundaryCheck out;
    out.boundary = EdgeSet(g.num_edges());
    if (k.complex.num_faces() == 0) {
        return out;
    }
    const auto &kc = k.complex;
    if (copath_components(kc, kc.all_edges()).size() > 1) {
        out.status = CheckStatus::PreconditionFailed;
        out.reason = "subcomplex not copath connected";
        return out;
    }
    if (homology(kc).h1 != 0) {
        out.status = CheckStatus::PreconditionFailed;
        out.reason = "subcomplex has nonzero H1";
        return out;
    }
    BitVec parity(g.num_edges());
    k.parent_faces.for_each_set([&](size_t f) {
        for (uint32_t x : g.face_edges(uint32_t(f))) {
            parity.flip(x);
        }
    });
    out.boundary = EdgeSet(parity);
    out.components = path_components(g, out.boundary).size();
    out.status = out.components <= 1 ? CheckStatus::Holds : CheckStatus::Fails;
    return out;
}
