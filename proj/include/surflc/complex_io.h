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

#ifndef SURFLC_COMPLEX_IO_H
#define SURFLC_COMPLEX_IO_H

#include <string>

#include "surflc/polygonal_complex.h"

namespace surflc {

/// Text form: {"vertices": N, "edges": [[u,v],...], "faces": [[e,...],...]}.
/// Parse failures throw ComplexError with a locus such as "edges[3]".
PolygonalComplex parse_complex(const std::string &text);
std::string format_complex(const PolygonalComplex &g);

PolygonalComplex load_complex(const std::string &path);
void save_complex(const PolygonalComplex &g, const std::string &path);

}  // namespace surflc

#endif
