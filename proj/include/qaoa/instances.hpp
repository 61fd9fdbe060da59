// Copyright 2026 The qaoa-engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qaoa/problem.hpp"

namespace qaoa::instances {

/// Two triangles sharing vertex 2: edges (0,1) (0,2) (1,2) (2,3) (3,4) (2,4).
Graph butterfly();

/// Moser spindle, 7 vertices and 11 unit edges, 0-indexed.
Graph moser_spindle();

Graph single_edge();
Graph triangle();
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
/// 3-regular Moebius ladder on 8 vertices (ring plus antipodal chords).
Graph wagner();
/// Unit-weight 3-cube on 8 vertices.
Graph cube();

} // namespace qaoa::instances
