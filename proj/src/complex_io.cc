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

#include "surflc/complex_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

using namespace surflc;
using nlohmann::ordered_json;

static uint32_t as_index(const ordered_json &j, const std::string &locus) {
    if (!j.is_number_integer() || j.get<int64_t>() < 0 || j.get<int64_t>() > int64_t(UINT32_MAX)) {
        throw ComplexError("expected a non-negative integer", locus);
    }
    return j.get<uint32_t>();
}

PolygonalComplex surflc::parse_complex(const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error &ex) {
        throw ComplexError(std::string("malformed JSON: ") + ex.what(), "byte " + std::to_string(ex.byte));
    }
    if (!j.is_object()) {
        throw ComplexError("expected an object", "root");
    }
    for (const char *key : {"vertices", "edges", "faces"}) {
        if (!j.contains(key)) {
            throw ComplexError(std::string("missing key '") + key + "'", "root");
        }
    }
    uint32_t nv = as_index(j["vertices"], "vertices");
    const auto &je = j["edges"];
    const auto &jf = j["faces"];
    if (!je.is_array()) {
        throw ComplexError("expected an array", "edges");
    }
    if (!jf.is_array()) {
        throw ComplexError("expected an array", "faces");
    }
    std::vector<VertexPair> edges;
    for (size_t k = 0; k < je.size(); k++) {
        std::string locus = "edges[" + std::to_string(k) + "]";
        if (!je[k].is_array() || je[k].size() != 2) {
            throw ComplexError("expected a pair of vertex indices", locus);
        }
        edges.push_back({as_index(je[k][0], locus), as_index(je[k][1], locus)});
    }
    std::vector<std::vector<uint32_t>> faces;
    for (size_t k = 0; k < jf.size(); k++) {
        std::string locus = "faces[" + std::to_string(k) + "]";
        if (!jf[k].is_array()) {
            throw ComplexError("expected an array of edge indices", locus);
        }
        std::vector<uint32_t> cyc;
        for (const auto &x : jf[k]) {
            cyc.push_back(as_index(x, locus));
        }
        faces.push_back(std::move(cyc));
    }
    return PolygonalComplex::build(nv, std::move(edges), std::move(faces));
}

std::string surflc::format_complex(const PolygonalComplex &g) {
    // Hand-rolled so each edge and face sits on its own line.
    std::ostringstream out;
    out << "{\"vertices\": " << g.num_vertices() << ",\n \"edges\": [";
    for (size_t k = 0; k < g.num_edges(); k++) {
        out << (k ? ",\n  " : "\n  ") << "[" << g.edge(uint32_t(k))[0] << ", " << g.edge(uint32_t(k))[1] << "]";
    }
    out << "],\n \"faces\": [";
    for (size_t k = 0; k < g.num_faces(); k++) {
        out << (k ? ",\n  " : "\n  ") << "[";
        const auto &es = g.face_edges(uint32_t(k));
        for (size_t i = 0; i < es.size(); i++) {
            out << (i ? ", " : "") << es[i];
        }
        out << "]";
    }
    out << "]}\n";
    return out.str();
}

PolygonalComplex surflc::load_complex(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ComplexError("cannot open file", path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

void surflc::save_complex(const PolygonalComplex &g, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << format_complex(g);
}
