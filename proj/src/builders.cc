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

#include "surflc/builders.h"

#include <map>

using namespace surflc;

PolygonalComplex surflc::build_cube(size_t n) {
    if (n < 1) {
        throw std::invalid_argument("build_cube: n must be at least 1");
    }
    using Point = std::array<uint32_t, 3>;
    std::map<Point, uint32_t> vertex_ids;
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> edge_ids;
    std::vector<VertexPair> edges;
    std::vector<std::vector<uint32_t>> faces;

    auto vertex_id = [&](const Point &p) {
        auto [it, fresh] = vertex_ids.emplace(p, uint32_t(vertex_ids.size()));
        return it->second;
    };
    auto edge_id = [&](uint32_t a, uint32_t b) {
        auto key = std::minmax(a, b);
        auto [it, fresh] = edge_ids.emplace(std::pair{key.first, key.second}, uint32_t(edges.size()));
        if (fresh) {
            edges.push_back({a, b});
        }
        return it->second;
    };

    uint32_t m = uint32_t(n);
    for (int axis = 0; axis < 3; axis++) {
        for (uint32_t fixed : {m, 0u}) {
            int b = axis == 0 ? 1 : 0;
            int c = axis == 2 ? 1 : 2;
            for (uint32_t row = 0; row < m; row++) {
                for (uint32_t col = 0; col < m; col++) {
                    auto corner = [&](uint32_t s, uint32_t t) {
                        Point p{};
                        p[axis] = fixed;
                        p[b] = s;
                        p[c] = t;
                        return vertex_id(p);
                    };
                    uint32_t p00 = corner(row, col);
                    uint32_t p01 = corner(row, col + 1);
                    uint32_t p11 = corner(row + 1, col + 1);
                    uint32_t p10 = corner(row + 1, col);
                    faces.push_back({edge_id(p00, p01), edge_id(p01, p11), edge_id(p11, p10), edge_id(p10, p00)});
                }
            }
        }
    }
    return PolygonalComplex::build(vertex_ids.size(), std::move(edges), std::move(faces));
}

PolygonalComplex surflc::build_torus(size_t n) {
    if (n < 3) {
        throw std::invalid_argument("build_torus: n must be at least 3");
    }
    auto vid = [n](size_t i, size_t j) {
        return uint32_t((i % n) * n + (j % n));
    };
    std::vector<VertexPair> edges(2 * n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            edges[2 * vid(i, j)] = {vid(i, j), vid(i, j + 1)};
            edges[2 * vid(i, j) + 1] = {vid(i, j), vid(i + 1, j)};
        }
    }
    std::vector<std::vector<uint32_t>> faces;
    faces.reserve(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            faces.push_back({2 * vid(i, j), 2 * vid(i, j + 1) + 1, 2 * vid(i + 1, j), 2 * vid(i, j) + 1});
        }
    }
    return PolygonalComplex::build(n * n, std::move(edges), std::move(faces));
}

PolygonalComplex surflc::build_tetrahedron() {
    // Edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3).
    std::vector<VertexPair> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<uint32_t>> faces{
        {0, 3, 1},  // 0-1-2
        {0, 4, 2},  // 0-1-3
        {1, 5, 2},  // 0-2-3
        {3, 5, 4},  // 1-2-3
    };
    return PolygonalComplex::build(4, std::move(edges), std::move(faces));
}

PolygonalComplex surflc::build_fixture(const std::string &name, size_t n) {
    if (name == "tetrahedron") {
        return build_tetrahedron();
    }
    if (name == "cube") {
        return build_cube(n);
    }
    if (name == "torus") {
        return build_torus(n);
    }
    throw std::invalid_argument("unknown fixture '" + name + "' (expected tetrahedron, cube or torus)");
}
