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

#ifndef SURFLC_POLYGONAL_COMPLEX_H
#define SURFLC_POLYGONAL_COMPLEX_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "surflc/edge_set.h"

namespace surflc {

/// Raised when a complex is structurally malformed. `locus` names the
/// offending element, e.g. "face 3" or "edge 7".
struct ComplexError : std::invalid_argument {
    std::string locus;
    ComplexError(const std::string &message, std::string locus)
        : std::invalid_argument(locus.empty() ? message : locus + ": " + message), locus(std::move(locus)) {
    }
};

using VertexPair = std::array<uint32_t, 2>;

/// Vertices, edges and polygonal faces of a 2-dimensional complex.
///
/// Faces are closed simple edge cycles stored in cyclic order. Any two
/// distinct faces meet in nothing, a single vertex, or a single edge.
/// Instances are immutable once built; the incidence caches are derived from
/// the three primary lists.
class PolygonalComplex {
   public:
    PolygonalComplex() = default;

    /// Validates and builds a complex. Throws ComplexError on self-edges,
    /// duplicate edges, dangling indices, non-cyclic or digon faces and
    /// faces that overlap in more than one edge or in two separated places.
    static PolygonalComplex build(
        size_t num_vertices, std::vector<VertexPair> edges, std::vector<std::vector<uint32_t>> faces);

    size_t num_vertices() const {
        return num_vertices_;
    }
    size_t num_edges() const {
        return edges_.size();
    }
    size_t num_faces() const {
        return faces_.size();
    }

    const VertexPair &edge(uint32_t e) const {
        return edges_[e];
    }
    const std::vector<VertexPair> &edges() const {
        return edges_;
    }
    /// Edges of face `f` in cyclic order.
    const std::vector<uint32_t> &face_edges(uint32_t f) const {
        return faces_[f];
    }
    const std::vector<std::vector<uint32_t>> &faces() const {
        return faces_;
    }
    /// Vertices of face `f` in cyclic order; edge k joins vertex k and k+1.
    const std::vector<uint32_t> &face_vertices(uint32_t f) const {
        return face_vertices_[f];
    }
    const std::vector<uint32_t> &vertex_edges(uint32_t v) const {
        return vertex_edges_[v];
    }
    const std::vector<uint32_t> &vertex_faces(uint32_t v) const {
        return vertex_faces_[v];
    }
    const std::vector<uint32_t> &edge_faces(uint32_t e) const {
        return edge_faces_[e];
    }

    /// Shared vertex of two distinct edges, if any.
    std::optional<uint32_t> common_vertex(uint32_t e1, uint32_t e2) const;

    int64_t euler_characteristic() const {
        return int64_t(num_vertices_) - int64_t(edges_.size()) + int64_t(faces_.size());
    }
    /// Connectivity of the underlying graph (isolated vertices count).
    bool is_connected() const;

    EdgeSet no_edges() const {
        return EdgeSet(edges_.size());
    }
    EdgeSet all_edges() const {
        return EdgeSet::full(edges_.size());
    }

    /// Equality of the primary lists (same indices, same orientation).
    bool operator==(const PolygonalComplex &other) const;

   private:
    size_t num_vertices_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<uint32_t>> faces_;
    std::vector<std::vector<uint32_t>> face_vertices_;
    std::vector<std::vector<uint32_t>> vertex_edges_;
    std::vector<std::vector<uint32_t>> vertex_faces_;
    std::vector<std::vector<uint32_t>> edge_faces_;
};

/// Result of checking the closed-surface conditions around every vertex.
///
/// When `is_csc` holds, `fan_edges[v]` and `fan_faces[v]` are the cyclic
/// orderings (e_1..e_k), (f_1..f_k) with f_i and f_{i+1} sharing exactly the
/// edge e_i, and non-consecutive faces sharing no edge.
struct CscCertificate {
    bool is_csc = false;
    std::vector<std::vector<uint32_t>> fan_edges;
    std::vector<std::vector<uint32_t>> fan_faces;
    struct Witness {
        uint32_t vertex;
        std::string reason;
    };
    std::optional<Witness> failure;
};

/// Checks connectivity and the local fan condition at each vertex. Simple
/// connectivity is a homological property and is checked separately.
CscCertificate validate_csc(const PolygonalComplex &g);

/// Throws ComplexError unless every edge lies in exactly two faces.
void require_two_faces_per_edge(const PolygonalComplex &g, const char *context);

}  // namespace surflc

#endif
