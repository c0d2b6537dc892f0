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

#ifndef SURFLC_COMPLEX_OPS_H
#define SURFLC_COMPLEX_OPS_H

#include <vector>

#include "surflc/bit_vec.h"
#include "surflc/polygonal_complex.h"

namespace surflc {

/// Vertices touched by some edge of `s`.
BitVec vertex_support(const PolygonalComplex &g, const EdgeSet &s);
/// Faces containing some edge of `s`.
BitVec face_support(const PolygonalComplex &g, const EdgeSet &s);
/// Edges incident to a vertex in `vertices`.
EdgeSet edges_of_vertices(const PolygonalComplex &g, const BitVec &vertices);
/// Edges lying in a face in `faces`.
EdgeSet edges_of_faces(const PolygonalComplex &g, const BitVec &faces);
/// Vertices of the faces in `faces`.
BitVec vertices_of_faces(const PolygonalComplex &g, const BitVec &faces);

/// Edges lying in exactly one of their two faces' worth of `s`: e is in the
/// boundary when exactly one of the two faces through e meets `s`.
/// Requires every edge to lie in exactly two faces.
EdgeSet edge_boundary(const PolygonalComplex &g, const EdgeSet &s);

/// Edges with exactly one endpoint among the vertices touched by `s`.
EdgeSet edge_coboundary(const PolygonalComplex &g, const EdgeSet &s);

struct Degrees {
    /// Maximum number of edges at a vertex.
    uint32_t vertex_degree = 0;
    /// Maximum number of edges on a face.
    uint32_t face_degree = 0;
};
Degrees degrees(const PolygonalComplex &g);

/// Components of `s` where two edges are adjacent when they lie in a common
/// face. Ordered by lowest member.
std::vector<EdgeSet> copath_components(const PolygonalComplex &g, const EdgeSet &s);
/// Components of `s` where two edges are adjacent when they share a vertex.
std::vector<EdgeSet> path_components(const PolygonalComplex &g, const EdgeSet &s);

/// Which edges accompany the selected faces of a local subcomplex.
enum class KEdgeRule {
    /// Only the edges of the selected faces.
    FaceEdges,
    /// Every edge incident to a vertex of the selected faces.
    IncidentToFaceVertices,
};

/// A subcomplex together with maps from its indices back into the parent.
struct Subcomplex {
    PolygonalComplex complex;
    std::vector<uint32_t> vertex_map;
    std::vector<uint32_t> edge_map;
    std::vector<uint32_t> face_map;
    /// Same selections as parent-indexed masks.
    BitVec parent_faces;
    EdgeSet parent_edges;
};

/// Builds a subcomplex from parent face and edge selections. Vertices are the
/// endpoints of the selected edges; every selected face must have all of its
/// edges selected.
Subcomplex make_subcomplex(const PolygonalComplex &g, const BitVec &faces, const EdgeSet &edges);

/// The local subcomplex around edge `e`.
///
/// Core faces are those whose every edge is within copath distance `r` of
/// `e`. A further face joins when every one of its edges lies in the GF(2)
/// boundary of the core faces. Edges follow `rule`.
Subcomplex subcomplex_K(
    const PolygonalComplex &g, uint32_t e, uint32_t r, KEdgeRule rule = KEdgeRule::FaceEdges);

}  // namespace surflc

#endif
