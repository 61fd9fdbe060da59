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

#include <filesystem>
#include <istream>

#include "qaoa/problem.hpp"

namespace qaoa::io {

// Both formats are line oriented and 0-indexed. '#' starts a comment, blank
// lines are skipped, and the first content line must be `n <count>`.
//
//   edge list:  i j [weight]      (weight defaults to 1)
//   QUBO:       i j value         (i <= j; i == j is a linear term)
//
// Out-of-range indices, self-loops and duplicate entries raise ParseError
// carrying the 1-based line number.

Graph parse_edge_list(std::istream &in);
QuboProblem parse_qubo(std::istream &in);

Graph load_edge_list(const std::filesystem::path &path);
QuboProblem load_qubo(const std::filesystem::path &path);

} // namespace qaoa::io
