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

#ifndef SURFLC_BUILDERS_H
#define SURFLC_BUILDERS_H

#include <string>

#include "surflc/polygonal_complex.h"

namespace surflc {

/// Surface of the cube [0,n]^3 tiled by unit squares (6n^2 faces).
///
/// Sides are visited in the order +x, -x, +y, -y, +z, -z; within a side the
/// squares are visited row-major over the two remaining axes in increasing
/// axis order. Vertices and edges receive ids in order of first appearance,
/// so a seam edge is owned by the lexicographically smallest
/// (side, row, col) square that contains it. Each face lists its edges in
/// cyclic order starting from its lowest corner.
PolygonalComplex build_cube(size_t n);

/// Periodic n x n square grid. Vertex (i, j) has id i*n + j; the edge leaving
/// it along j has id 2*(i*n + j), along i has id 2*(i*n + j) + 1. Requires
/// n >= 3.
PolygonalComplex build_torus(size_t n);

/// Boundary of a tetrahedron: 4 vertices, 6 edges, 4 triangles.
PolygonalComplex build_tetrahedron();

/// Builds a named fixture: "tetrahedron", "cube" (n >= 1) or "torus" (n >= 3).
PolygonalComplex build_fixture(const std::string &name, size_t n);

}  // namespace surflc

#endif
