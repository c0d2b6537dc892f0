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

#include "surflc/polygonal_complex.h"

#include <algorithm>
#include <map>
#include <set>

using namespace surflc;

EdgeSet EdgeSet::of(size_t universe, const std::vector<uint32_t> &members) {
    EdgeSet s(universe);
    for (uint32_t e : members) {
        s.insert(e);
    }
    return s;
}

EdgeSet EdgeSet::full(size_t universe) {
    return EdgeSet(~BitVec(universe));
}

std::vector<uint32_t> EdgeSet::members() const {
    std::vector<uint32_t> out;
    out.reserve(count_);
    mask_.for_each_set([&](size_t e) {
        out.push_back(uint32_t(e));
    });
    return out;
}

static std::string face_locus(size_t f) {
    return "faces[" + std::to_string(f) + "]";
}

PolygonalComplex PolygonalComplex::build(
    size_t num_vertices, std::vector<VertexPair> edges, std::vector<std::vector<uint32_t>> faces) {
    PolygonalComplex g;
    g.num_vertices_ = num_vertices;

    std::map<std::pair<uint32_t, uint32_t>, uint32_t> seen;
    for (size_t e = 0; e < edges.size(); e++) {
        auto [u, v] = edges[e];
        std::string locus = "edges[" + std::to_string(e) + "]";
        if (u >= num_vertices || v >= num_vertices) {
            throw ComplexError("dangling index (vertex out of range)", locus);
        }
        if (u == v) {
            throw ComplexError("self-edge", locus);
        }
        auto key = std::minmax(u, v);
        auto [it, fresh] = seen.emplace(std::pair{key.first, key.second}, uint32_t(e));
        if (!fresh) {
            throw ComplexError("duplicate edge (same vertices as edge " + std::to_string(it->second) + ")", locus);
        }
    }
    g.edges_ = std::move(edges);

    g.face_vertices_.reserve(faces.size());
    for (size_t f = 0; f < faces.size(); f++) {
        const auto &cyc = faces[f];
        if (cyc.size() < 3) {
            throw ComplexError(cyc.size() == 2 ? "digon face" : "face with fewer than 3 edges", face_locus(f));
        }
        for (uint32_t e : cyc) {
            if (e >= g.edges_.size()) {
                throw ComplexError("dangling index (edge " + std::to_string(e) + " out of range)", face_locus(f));
            }
        }
        // Starting vertex: the endpoint of the first edge not shared with the second.
        const auto &e0 = g.edges_[cyc[0]];
        const auto &e1 = g.edges_[cyc[1]];
        uint32_t start;
        if (e0[0] != e1[0] && e0[0] != e1[1]) {
            start = e0[0];
        } else if (e0[1] != e1[0] && e0[1] != e1[1]) {
            start = e0[1];
        } else {
            throw ComplexError("non-cyclic face", face_locus(f));
        }
        std::vector<uint32_t> verts;
        verts.reserve(cyc.size());
        uint32_t cur = start;
        for (uint32_t e : cyc) {
            const auto &ev = g.edges_[e];
            if (ev[0] != cur && ev[1] != cur) {
                throw ComplexError("non-cyclic face (consecutive edges share no vertex)", face_locus(f));
            }
            verts.push_back(cur);
            cur = ev[0] == cur ? ev[1] : ev[0];
        }
        if (cur != start) {
            throw ComplexError("non-cyclic face (edge cycle does not close)", face_locus(f));
        }
        std::set<uint32_t> distinct(verts.begin(), verts.end());
        if (distinct.size() != verts.size()) {
            throw ComplexError("non-simple face (repeated vertex)", face_locus(f));
        }
        g.face_vertices_.push_back(std::move(verts));
    }
    g.faces_ = std::move(faces);

    g.vertex_edges_.assign(num_vertices, {});
    g.vertex_faces_.assign(num_vertices, {});
    g.edge_faces_.assign(g.edges_.size(), {});
    for (size_t e = 0; e < g.edges_.size(); e++) {
        g.vertex_edges_[g.edges_[e][0]].push_back(uint32_t(e));
        g.vertex_edges_[g.edges_[e][1]].push_back(uint32_t(e));
    }
    for (size_t f = 0; f < g.faces_.size(); f++) {
        for (uint32_t e : g.faces_[f]) {
            g.edge_faces_[e].push_back(uint32_t(f));
        }
        for (uint32_t v : g.face_vertices_[f]) {
            g.vertex_faces_[v].push_back(uint32_t(f));
        }
    }

    // Pairwise face intersections: nothing, one vertex, or one edge with its ends.
    for (uint32_t v = 0; v < num_vertices; v++) {
        const auto &fs = g.vertex_faces_[v];
        for (size_t a = 0; a < fs.size(); a++) {
            for (size_t b = a + 1; b < fs.size(); b++) {
                uint32_t f1 = fs[a], f2 = fs[b];
                const auto &v1 = g.face_vertices_[f1];
                const auto &v2 = g.face_vertices_[f2];
                std::vector<uint32_t> shared_v;
                for (uint32_t x : v1) {
                    if (std::find(v2.begin(), v2.end(), x) != v2.end()) {
                        shared_v.push_back(x);
                    }
                }
                if (*std::min_element(shared_v.begin(), shared_v.end()) != v) {
                    continue;  // checked from the lowest shared vertex
                }
                std::vector<uint32_t> shared_e;
                for (uint32_t x : g.faces_[f1]) {
                    if (std::find(g.faces_[f2].begin(), g.faces_[f2].end(), x) != g.faces_[f2].end()) {
                        shared_e.push_back(x);
                    }
                }
                bool ok = (shared_v.size() == 1 && shared_e.empty()) ||
                          (shared_v.size() == 2 && shared_e.size() == 1);
                if (!ok) {
                    throw ComplexError(
                        "faces " + std::to_string(f1) + " and " + std::to_string(f2) +
                            " intersect in more than a single vertex or edge",
                        face_locus(f2));
                }
            }
        }
    }
    return g;
}

std::optional<uint32_t> PolygonalComplex::common_vertex(uint32_t e1, uint32_t e2) const {
    const auto &a = edges_[e1];
    const auto &b = edges_[e2];
    for (uint32_t x : a) {
        if (x == b[0] || x == b[1]) {
            return x;
        }
    }
    return std::nullopt;
}

bool PolygonalComplex::is_connected() const {
    if (num_vertices_ == 0) {
        return true;
    }
    std::vector<char> seen(num_vertices_, 0);
    std::vector<uint32_t> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (uint32_t e : vertex_edges_[v]) {
            uint32_t w = edges_[e][0] == v ? edges_[e][1] : edges_[e][0];
            if (!seen[w]) {
                seen[w] = 1;
                reached++;
                stack.push_back(w);
            }
        }
    }
    return reached == num_vertices_;
}

bool PolygonalComplex::operator==(const PolygonalComplex &other) const {
    return num_vertices_ == other.num_vertices_ && edges_ == other.edges_ && faces_ == other.faces_;
}

void surflc::require_two_faces_per_edge(const PolygonalComplex &g, const char *context) {
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        if (g.edge_faces(e).size() != 2) {
            throw ComplexError(
                std::string(context) + " requires a closed surface complex; edge lies in " +
                    std::to_string(g.edge_faces(e).size()) + " faces",
                "edge " + std::to_string(e));
        }
    }
}

CscCertificate surflc::validate_csc(const PolygonalComplex &g) {
    CscCertificate cert;
    auto fail = [&](uint32_t v, std::string reason) {
        cert.is_csc = false;
        cert.fan_edges.clear();
        cert.fan_faces.clear();
        cert.failure = CscCertificate::Witness{v, std::move(reason)};
        return cert;
    };

    cert.fan_edges.resize(g.num_vertices());
    cert.fan_faces.resize(g.num_vertices());
    for (uint32_t v = 0; v < g.num_vertices(); v++) {
        const auto &ev = g.vertex_edges(v);
        const auto &fv = g.vertex_faces(v);
        if (ev.size() != fv.size()) {
            return fail(
                v, "vertex has " + std::to_string(ev.size()) + " edges but " + std::to_string(fv.size()) + " faces");
        }
        if (ev.size() < 2) {
            return fail(v, "vertex has fewer than 2 incident edges");
        }
        // Each face through v contains exactly two of v's edges; walk the fan.
        auto v_edges_of = [&](uint32_t f) {
            std::vector<uint32_t> out;
            for (uint32_t e : g.face_edges(f)) {
                if (g.edge(e)[0] == v || g.edge(e)[1] == v) {
                    out.push_back(e);
                }
            }
            return out;
        };
        size_t k = ev.size();
        std::vector<uint32_t> fan_e, fan_f;
        std::set<uint32_t> used_faces;
        uint32_t face = *std::min_element(fv.begin(), fv.end());
        auto pair = v_edges_of(face);
        uint32_t edge = std::min(pair[0], pair[1]);
        for (size_t step = 0; step < k; step++) {
            fan_f.push_back(face);
            fan_e.push_back(edge);
            used_faces.insert(face);
            // f_{i+1}: the other face through `edge` that also contains v.
            std::optional<uint32_t> next;
            for (uint32_t f2 : g.edge_faces(edge)) {
                if (f2 != face) {
                    if (next.has_value()) {
                        return fail(v, "edge " + std::to_string(edge) + " lies in more than two faces");
                    }
                    next = f2;
                }
            }
            if (!next.has_value()) {
                return fail(v, "edge " + std::to_string(edge) + " lies in only one face");
            }
            face = *next;
            auto p = v_edges_of(face);
            edge = p[0] == edge ? p[1] : p[0];
        }
        if (face != fan_f[0] || used_faces.size() != k) {
            return fail(v, "incident faces do not form a single cyclic fan");
        }
        std::set<uint32_t> fan_edge_set(fan_e.begin(), fan_e.end());
        if (fan_edge_set.size() != k) {
            return fail(v, "incident edges do not form a single cyclic fan");
        }
        // f_i ∩ f_{i+1} = {e_i}; non-consecutive faces share no edge.
        for (size_t i = 0; i < k; i++) {
            for (size_t j = i + 1; j < k; j++) {
                const auto &a = g.face_edges(fan_f[i]);
                const auto &b = g.face_edges(fan_f[j]);
                std::vector<uint32_t> common;
                for (uint32_t x : a) {
                    if (std::find(b.begin(), b.end(), x) != b.end()) {
                        common.push_back(x);
                    }
                }
                bool consecutive_fwd = j == i + 1;
                bool consecutive_wrap = i == 0 && j == k - 1;
                if (consecutive_fwd) {
                    if (common.size() != 1 || common[0] != fan_e[i]) {
                        return fail(v, "consecutive fan faces do not meet in exactly the fan edge");
                    }
                } else if (consecutive_wrap) {
                    if (common.size() != 1 || common[0] != fan_e[k - 1]) {
                        return fail(v, "consecutive fan faces do not meet in exactly the fan edge");
                    }
                } else if (!common.empty()) {
                    return fail(v, "non-consecutive fan faces share an edge");
                }
            }
        }
        cert.fan_edges[v] = std::move(fan_e);
        cert.fan_faces[v] = std::move(fan_f);
    }
    if (!g.is_connected()) {
        return fail(0, "complex is not connected");
    }
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        if (g.edge_faces(e).size() != 2) {
            return fail(g.edge(e)[0], "edge " + std::to_string(e) + " does not lie in exactly two faces");
        }
    }
    cert.is_csc = true;
    return cert;
}
