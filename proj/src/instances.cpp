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

#include "qaoa/instances.hpp"

namespace qaoa::instances {

Graph butterfly() {
    return {5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {2, 4}}};
}

Graph moser_spindle() {
    return {7,
            {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {4, 6},
             {5, 6}, {0, 5}, {0, 6}}};
}

Graph single_edge() { return {2, {{0, 1}}}; }

Graph triangle() { return {3, {{0, 1}, {1, 2}, {0, 2}}}; }

Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e.push_back({i, i + 1});
    }
    return {n, std::move(e)};
}

Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});
    }
    return {n, std::move(e)};
}

Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) {
        e.push_back({0, i});
    }
    return {leaves + 1, std::move(e)};
}

Graph wagner() {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < 8; ++i) {
        e.push_back({i, (i + 1) % 8});
    }
    for (std::size_t i = 0; i < 4; ++i) {
        e.push_back({i, i + 4});
    }
    return {8, std::move(e)};
}

Graph cube() {
    std::vector<Edge> e;
    for (std::size_t v = 0; v < 8; ++v) {
        for (std::size_t b = 1; b < 8; b <<= 1U) {
            if ((v & b) == 0) {
                e.push_back({v, v | b});
            }
        }
    }
    return {8, std::move(e)};
}

} // namespace qaoa::instances
