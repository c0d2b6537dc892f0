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

#include "surflc/metric.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

using namespace surflc;

Metric surflc::parse_metric(const std::string &text) {
    if (text == "path") {
        return Metric::Path;
    }
    if (text == "copath") {
        return Metric::Copath;
    }
    throw std::invalid_argument("unknown metric '" + text + "' (expected path or copath)");
}

const char *surflc::metric_name(Metric m) {
    return m == Metric::Path ? "path" : "copath";
}

std::vector<std::vector<uint32_t>> surflc::edge_adjacency(const PolygonalComplex &g, Metric metric) {
    std::vector<std::vector<uint32_t>> adj(g.num_edges());
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        auto &out = adj[e];
        if (metric == Metric::Path) {
            for (uint32_t v : g.edge(e)) {
                for (uint32_t x : g.vertex_edges(v)) {
                    if (x != e) {
                        out.push_back(x);
                    }
                }
            }
        } else {
            for (uint32_t f : g.edge_faces(e)) {
                for (uint32_t x : g.face_edges(f)) {
                    if (x != e) {
                        out.push_back(x);
                    }
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return adj;
}

static void bfs(
    const std::vector<std::vector<uint32_t>> &adj,
    std::vector<uint32_t> &dist,
    std::vector<uint32_t> *parent,
    std::deque<uint32_t> queue) {
    while (!queue.empty()) {
        uint32_t x = queue.front();
        queue.pop_front();
        for (uint32_t y : adj[x]) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                if (parent) {
                    (*parent)[y] = x;
                }
                queue.push_back(y);
            }
        }
    }
}

std::vector<uint32_t> surflc::distances_from(const PolygonalComplex &g, const EdgeSet &sources, Metric metric) {
    auto adj = edge_adjacency(g, metric);
    std::vector<uint32_t> dist(g.num_edges(), kUnreachable);
    std::deque<uint32_t> queue;
    for (uint32_t s : sources.members()) {
        dist[s] = 0;
        queue.push_back(s);
    }
    bfs(adj, dist, nullptr, std::move(queue));
    return dist;
}

std::vector<uint32_t> surflc::distances_from(const PolygonalComplex &g, uint32_t source, Metric metric) {
    return distances_from(g, EdgeSet::of(g.num_edges(), {source}), metric);
}

std::optional<uint32_t> surflc::edge_distance(const PolygonalComplex &g, uint32_t e, uint32_t f, Metric metric) {
    uint32_t d = distances_from(g, e, metric)[f];
    if (d == kUnreachable) {
        return std::nullopt;
    }
    return d;
}

EdgeSet surflc::ball(const PolygonalComplex &g, uint32_t e, uint32_t r, Metric metric) {
    auto dist = distances_from(g, e, metric);
    EdgeSet out(g.num_edges());
    for (uint32_t x = 0; x < g.num_edges(); x++) {
        if (dist[x] <= r) {
            out.insert(x);
        }
    }
    return out;
}

DistanceTable::DistanceTable(const PolygonalComplex &g, Metric metric)
    : n_(g.num_edges()), dist_(n_ * n_, kUnreachable) {
    auto adj = edge_adjacency(g, metric);
    std::vector<uint32_t> row(n_);
    for (uint32_t e = 0; e < n_; e++) {
        std::fill(row.begin(), row.end(), kUnreachable);
        row[e] = 0;
        bfs(adj, row, nullptr, std::deque<uint32_t>{e});
        std::copy(row.begin(), row.end(), dist_.begin() + size_t(e) * n_);
    }
}

uint32_t DistanceTable::diameter() const {
    uint32_t best = 0;
    for (uint32_t d : dist_) {
        if (d == kUnreachable) {
            throw std::domain_error("unreachable: edge graph is disconnected");
        }
        best = std::max(best, d);
    }
    return best;
}

EdgeSet DistanceTable::ball(uint32_t e, uint32_t r) const {
    EdgeSet out(n_);
    for (uint32_t x = 0; x < n_; x++) {
        if ((*this)(e, x) <= r) {
            out.insert(x);
        }
    }
    return out;
}

uint32_t surflc::diameter(const PolygonalComplex &g, Metric metric) {
    return DistanceTable(g, metric).diameter();
}

std::vector<uint32_t> surflc::shortest_path(const PolygonalComplex &g, uint32_t e, uint32_t f, Metric metric) {
    auto adj = edge_adjacency(g, metric);
    std::vector<uint32_t> dist(g.num_edges(), kUnreachable);
    std::vector<uint32_t> parent(g.num_edges(), kUnreachable);
    dist[e] = 0;
    bfs(adj, dist, &parent, std::deque<uint32_t>{e});
    if (dist[f] == kUnreachable) {
        return {};
    }
    std::vector<uint32_t> path;
    for (uint32_t x = f; x != kUnreachable; x = parent[x]) {
        path.push_back(x);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<uint32_t> surflc::random_shortest_path(
    const PolygonalComplex &g, uint32_t e, uint32_t f, Metric metric, std::mt19937_64 &rng) {
    auto adj = edge_adjacency(g, metric);
    auto dist = distances_from(g, f, metric);
    if (dist[e] == kUnreachable) {
        return {};
    }
    std::vector<uint32_t> path{e};
    uint32_t x = e;
    std::vector<uint32_t> next;
    while (x != f) {
        next.clear();
        for (uint32_t y : adj[x]) {
            if (dist[y] + 1 == dist[x]) {
                next.push_back(y);
            }
        }
        x = next[rng() % next.size()];
        path.push_back(x);
    }
    return path;
}
