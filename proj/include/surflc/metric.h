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

#ifndef SURFLC_METRIC_H
#define SURFLC_METRIC_H

#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "surflc/polygonal_complex.h"

namespace surflc {

/// `Path`: consecutive edges share a vertex. `Copath`: consecutive edges lie
/// in a common face. Distances are (number of edges in the sequence) - 1.
enum class Metric { Path, Copath };

Metric parse_metric(const std::string &text);
const char *metric_name(Metric m);

inline constexpr uint32_t kUnreachable = std::numeric_limits<uint32_t>::max();

/// Sorted neighbour lists of the edge graph for the given metric.
std::vector<std::vector<uint32_t>> edge_adjacency(const PolygonalComplex &g, Metric metric);

/// BFS distances from a set of source edges (distance 0 at each source).
std::vector<uint32_t> distances_from(const PolygonalComplex &g, const EdgeSet &sources, Metric metric);
std::vector<uint32_t> distances_from(const PolygonalComplex &g, uint32_t source, Metric metric);

/// nullopt when the two edges are in different components.
std::optional<uint32_t> edge_distance(const PolygonalComplex &g, uint32_t e, uint32_t f, Metric metric);

/// All edges within distance `r` of `e`.
EdgeSet ball(const PolygonalComplex &g, uint32_t e, uint32_t r, Metric metric);

/// All-pairs edge distances, row-major.
class DistanceTable {
   public:
    DistanceTable(const PolygonalComplex &g, Metric metric);
    uint32_t operator()(uint32_t e, uint32_t f) const {
        return dist_[size_t(e) * n_ + f];
    }
    size_t num_edges() const {
        return n_;
    }
    /// Throws std::domain_error ("unreachable") on a disconnected edge graph.
    uint32_t diameter() const;
    EdgeSet ball(uint32_t e, uint32_t r) const;

   private:
    size_t n_;
    std::vector<uint32_t> dist_;
};

uint32_t diameter(const PolygonalComplex &g, Metric metric);

/// A shortest edge sequence from `e` to `f` (both included). Ties are broken
/// toward the lowest edge index. Empty when unreachable.
std::vector<uint32_t> shortest_path(const PolygonalComplex &g, uint32_t e, uint32_t f, Metric metric = Metric::Path);

/// A uniformly chosen next step at each hop of a shortest edge sequence.
std::vector<uint32_t> random_shortest_path(
    const PolygonalComplex &g, uint32_t e, uint32_t f, Metric metric, std::mt19937_64 &rng);

}  // namespace surflc

#endif
