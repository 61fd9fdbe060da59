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

#include "qaoa/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qaoa/error.hpp"

namespace qaoa::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

/// Yields tokenised content lines with comments stripped.
std::vector<Line> content_lines(std::istream &in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ss(raw);
        Line line{number, {}};
        for (std::string tok; ss >> tok;) {
            line.tokens.push_back(std::move(tok));
        }
        if (!line.tokens.empty()) {
            out.push_back(std::move(line));
        }
    }
    return out;
}

std::size_t parse_index(const std::string &tok, std::size_t line) {
    std::size_t v = 0;
    const auto *end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line, "expected a non-negative integer, got '" + tok +
                                   "'");
    }
    return v;
}

double parse_real(const std::string &tok, std::size_t line) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size() || !std::isfinite(v)) {
            throw std::invalid_argument(tok);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError(line, "expected a finite real number, got '" + tok +
                                   "'");
    }
}

std::size_t parse_header(const std::vector<Line> &lines) {
    if (lines.empty()) {
        throw ParseError(0, "empty problem file: missing 'n <count>' header");
    }
    const auto &h = lines.front();
    if (h.tokens.size() != 2 || h.tokens[0] != "n") {
        throw ParseError(h.number, "expected header 'n <count>'");
    }
    auto n = parse_index(h.tokens[1], h.number);
    if (n == 0) {
        throw ParseError(h.number, "count must be positive");
    }
    return n;
}

std::ifstream open(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    return in;
}

} // namespace

Graph parse_edge_list(std::istream &in) {
    auto lines = content_lines(in);
    const auto n = parse_header(lines);
    std::vector<Edge> edges;
    std::set<IndexPair> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto &[number, tok] = lines[k];
        if (tok.size() != 2 && tok.size() != 3) {
            throw ParseError(number, "expected 'i j [weight]'");
        }
        auto i = parse_index(tok[0], number);
        auto j = parse_index(tok[1], number);
        double w = tok.size() == 3 ? parse_real(tok[2], number) : 1.0;
        if (i >= n || j >= n) {
            throw ParseError(number, "vertex index out of range for n = " +
                                         std::to_string(n));
        }
        if (i == j) {
            throw ParseError(number, "self-loop on vertex " + std::to_string(i));
        }
        if (i > j) {
            std::swap(i, j);
        }
        if (!seen.emplace(i, j).second) {
            throw ParseError(number, "duplicate edge (" + std::to_string(i) +
                                         ", " + std::to_string(j) + ")");
        }
        edges.push_back({i, j, w});
    }
    return {n, std::move(edges)};
}

QuboProblem parse_qubo(std::istream &in) {
    auto lines = content_lines(in);
    const auto n = parse_header(lines);
    std::map<IndexPair, double> coeffs;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto &[number, tok] = lines[k];
        if (tok.size() != 3) {
            throw ParseError(number, "expected 'i j value'");
        }
        auto i = parse_index(tok[0], number);
        auto j = parse_index(tok[1], number);
        double v = parse_real(tok[2], number);
        if (i >= n || j >= n) {
            throw ParseError(number, "variable index out of range for n = " +
                                         std::to_string(n));
        }
        if (i > j) {
            throw ParseError(number, "QUBO entries must satisfy i <= j");
        }
        if (!coeffs.emplace(IndexPair{i, j}, v).second) {
            throw ParseError(number, "duplicate entry (" + std::to_string(i) +
                                         ", " + std::to_string(j) + ")");
        }
    }
    return {n, std::move(coeffs)};
}

Graph load_edge_list(const std::filesystem::path &path) {
    auto in = open(path);
    return parse_edge_list(in);
}

QuboProblem load_qubo(const std::filesystem::path &path) {
    auto in = open(path);
    return parse_qubo(in);
}

} // namespace qaoa::io
