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

#include "surflc/complex_ops.h"

#include <algorithm>

#include "surflc/metric.h"

using namespace surflc;

BitVec surflc::vertex_support(const PolygonalComplex &g, const EdgeSet &s) {
    BitVec out(g.num_vertices());
    for (uint32_t e : s.members()) {
        out.set(g.edge(e)[0]);
        out.set(g.edge(e)[1]);
    }
    return out;
}

BitVec surflc::face_support(const PolygonalComplex &g, const EdgeSet &s) {
    BitVec out(g.num_faces());
    for (uint32_t e : s.members()) {
        for (uint32_t f : g.edge_faces(e)) {
            out.set(f);
        }
    }
    return out;
}

EdgeSet surflc::edges_of_vertices(const PolygonalComplex &g, const BitVec &vertices) {
    EdgeSet out(g.num_edges());
    vertices.for_each_set([&](size_t v) {
        for (uint32_t e : g.vertex_edges(uint32_t(v))) {
            out.insert(e);
        }
    });
    return out;
}

EdgeSet surflc::edges_of_faces(const PolygonalComplex &g, const BitVec &faces) {
    EdgeSet out(g.num_edges());
    faces.for_each_set([&](size_t f) {
        for (uint32_t e : g.face_edges(uint32_t(f))) {
            out.insert(e);
        }
    });
    return out;
}

BitVec surflc::vertices_of_faces(const PolygonalComplex &g, const BitVec &faces) {
    BitVec out(g.num_vertices());
    faces.for_each_set([&](size_t f) {
        for (uint32_t v : g.face_vertices(uint32_t(f))) {
            out.set(v);
        }
    });
    return out;
}

EdgeSet surflc::edge_boundary(const PolygonalComplex &g, const EdgeSet &s) {
    require_two_faces_per_edge(g, "edge_boundary");
    BitVec touched = face_support(g, s);
    EdgeSet out(g.num_edges());
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        const auto &fs = g.edge_faces(e);
        if (touched[fs[0]] != touched[fs[1]]) {
            out.insert(e);
        }
    }
    return out;
}

EdgeSet surflc::edge_coboundary(const PolygonalComplex &g, const EdgeSet &s) {
    require_two_faces_per_edge(g, "edge_coboundary");
    BitVec touched = vertex_support(g, s);
    EdgeSet out(g.num_edges());
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        if (touched[g.edge(e)[0]] != touched[g.edge(e)[1]]) {
            out.insert(e);
        }
    }
    return out;
}

Degrees surflc::degrees(const PolygonalComplex &g) {
    Degrees d;
    for (uint32_t v = 0; v < g.num_vertices(); v++) {
        d.vertex_degree = std::max(d.vertex_degree, uint32_t(g.vertex_edges(v).size()));
    }
    for (uint32_t f = 0; f < g.num_faces(); f++) {
        d.face_degree = std::max(d.face_degree, uint32_t(g.face_edges(f).size()));
    }
    return d;
}

static std::vector<EdgeSet> components_in(
    const PolygonalComplex &g, const EdgeSet &s, const std::vector<std::vector<uint32_t>> &adj) {
    std::vector<EdgeSet> out;
    EdgeSet remaining = s;
    while (!remaining.empty()) {
        uint32_t seed = uint32_t(remaining.mask().first_set());
        EdgeSet comp(g.num_edges());
        std::vector<uint32_t> stack{seed};
        comp.insert(seed);
        remaining.erase(seed);
        while (!stack.empty()) {
            uint32_t x = stack.back();
            stack.pop_back();
            for (uint32_t y : adj[x]) {
                if (remaining.contains(y)) {
                    remaining.erase(y);
                    comp.insert(y);
                    stack.push_back(y);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<EdgeSet> surflc::copath_components(const PolygonalComplex &g, const EdgeSet &s) {
    return components_in(g, s, edge_adjacency(g, Metric::Copath));
}

std::vector<EdgeSet> surflc::path_components(const PolygonalComplex &g, const EdgeSet &s) {
    return components_in(g, s, edge_adjacency(g, Metric::Path));
}

Subcomplex surflc::make_subcomplex(const PolygonalComplex &g, const BitVec &faces, const EdgeSet &edges) {
    Subcomplex k;
    k.parent_faces = faces;
    k.parent_edges = edges;
    std::vector<uint32_t> vertex_index(g.num_vertices(), kUnreachable);
    std::vector<uint32_t> edge_index(g.num_edges(), kUnreachable);
    BitVec verts = vertex_support(g, edges);
    verts.for_each_set([&](size_t v) {
        vertex_index[v] = uint32_t(k.vertex_map.size());
        k.vertex_map.push_back(uint32_t(v));
    });
    std::vector<VertexPair> sub_edges;
    for (uint32_t e : edges.members()) {
        edge_index[e] = uint32_t(k.edge_map.size());
        k.edge_map.push_back(e);
        sub_edges.push_back({vertex_index[g.edge(e)[0]], vertex_index[g.edge(e)[1]]});
    }
    std::vector<std::vector<uint32_t>> sub_faces;
    faces.for_each_set([&](size_t f) {
        std::vector<uint32_t> cyc;
        for (uint32_t e : g.face_edges(uint32_t(f))) {
            if (edge_index[e] == kUnreachable) {
                throw ComplexError("selected face has an unselected edge", "face " + std::to_string(f));
            }
            cyc.push_back(edge_index[e]);
        }
        k.face_map.push_back(uint32_t(f));
        sub_faces.push_back(std::move(cyc));
    });
    k.complex = PolygonalComplex::build(k.vertex_map.size(), std::move(sub_edges), std::move(sub_faces));
    return k;
}

Subcomplex surflc::subcomplex_K(const PolygonalComplex &g, uint32_t e, uint32_t r, KEdgeRule rule) {
    auto dist = distances_from(g, e, Metric::Copath);
    BitVec core(g.num_faces());
    for (uint32_t f = 0; f < g.num_faces(); f++) {
        const auto &es = g.face_edges(f);
        if (std::all_of(es.begin(), es.end(), [&](uint32_t x) {
                return dist[x] <= r;
            })) {
            core.set(f);
        }
    }
    // GF(2) boundary of the core faces.
    BitVec core_boundary(g.num_edges());
    core.for_each_set([&](size_t f) {
        for (uint32_t x : g.face_edges(uint32_t(f))) {
            core_boundary.flip(x);
        }
    });
    BitVec faces = core;
    for (uint32_t f = 0; f < g.num_faces(); f++) {
        if (core[f]) {
            continue;
        }
        const auto &es = g.face_edges(f);
        if (std::all_of(es.begin(), es.end(), [&](uint32_t x) {
                return core_boundary[x];
            })) {
            faces.set(f);
        }
    }
    EdgeSet edges = rule == KEdgeRule::FaceEdges ? edges_of_faces(g, faces)
                                                 : edges_of_vertices(g, vertices_of_faces(g, faces));
    return make_subcomplex(g, faces, edges);
}
