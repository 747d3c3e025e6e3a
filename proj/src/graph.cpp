// Copyright 2026 The noisyqaoa Authors
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

#include "noisyqaoa/graph.hpp"

#include "noisyqaoa/state.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace noisyqaoa {

Graph::Graph(int n_nodes, std::vector<Edge> edges, std::string name)
    : n_nodes_(n_nodes), edges_(std::move(edges)), name_(std::move(name)) {
    if (n_nodes_ < 1) {
        throw std::invalid_argument("graph needs at least one node");
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n_nodes_ || e.v >= n_nodes_) {
            throw std::invalid_argument(fmt::format("edge ({}, {}) references a node outside [0, {})", e.u, e.v, n_nodes_));
        }
        if (e.u == e.v) {
            throw std::invalid_argument(fmt::format("self-loop on node {}", e.u));
        }
        if (!std::isfinite(e.weight)) {
            throw std::invalid_argument("edge weight must be finite");
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            throw std::invalid_argument(fmt::format("duplicate edge ({}, {})", e.u, e.v));
        }
    }
}

double Graph::total_weight() const {
    return std::accumulate(edges_.begin(), edges_.end(), 0.0, [](double s, const Edge& e) { return s + e.weight; });
}

std::vector<std::string> builtin_graph_names() {
    return {"2n-edge", "4n-irregular", "4n-yutsis", "6n-yutsis", "6n-prism"};
}

Graph builtin_graph(std::string_view name) {
    if (name == "2n-edge") {
        return Graph(2, {{0, 1}}, "2n-edge");
    }
    if (name == "4n-irregular") {
        return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}, "4n-irregular");
    }
    if (name == "4n-yutsis") {
        return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, "4n-yutsis");
    }
    if (name == "6n-yutsis") {
        return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}, "6n-yutsis");
    }
    if (name == "6n-prism") {
        return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}, "6n-prism");
    }
    throw std::invalid_argument(fmt::format("unknown built-in graph '{}'", name));
}

Graph parse_graph(std::string_view text, std::string name) {
    std::vector<std::string> lines;
    {
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                lines.push_back(line);
            }
        }
    }
    if (lines.empty()) {
        throw std::invalid_argument("graph file: missing 'N M' header");
    }
    std::istringstream header(lines[0]);
    long n = -1, m = -1;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 1 || m < 0) {
        throw std::invalid_argument("graph file: malformed 'N M' header");
    }
    if (lines.size() - 1 != static_cast<std::size_t>(m)) {
        throw std::invalid_argument(
            fmt::format("graph file: header declares {} edges but {} edge lines follow", m, lines.size() - 1));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        Edge e;
        if (!(in >> e.u >> e.v)) {
            throw std::invalid_argument(fmt::format("graph file: malformed edge line '{}'", lines[i]));
        }
        if (!(in >> e.weight)) {
            if (!in.eof()) {
                throw std::invalid_argument(fmt::format("graph file: malformed weight in '{}'", lines[i]));
            }
            e.weight = 1.0;
        } else if (in >> extra) {
            throw std::invalid_argument(fmt::format("graph file: trailing data in '{}'", lines[i]));
        }
        edges.push_back(e);
    }
    return Graph(static_cast<int>(n), std::move(edges), std::move(name));
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open graph file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str(), path.stem().string());
}

Graph resolve_graph(const std::string& ref) {
    const auto names = builtin_graph_names();
    if (std::find(names.begin(), names.end(), ref) != names.end()) {
        return builtin_graph(ref);
    }
    if (std::filesystem::exists(ref)) {
        return load_graph(ref);
    }
    throw std::invalid_argument(fmt::format("unknown graph '{}': not a built-in name and no such file", ref));
}

std::string to_bitstring(std::uint64_t index, int n_bits) {
    std::string s(static_cast<std::size_t>(n_bits), '0');
    for (int b = 0; b < n_bits; ++b) {
        if ((index >> b) & 1U) {
            s[static_cast<std::size_t>(n_bits - 1 - b)] = '1';
        }
    }
    return s;
}

std::uint64_t from_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > 64) {
        throw std::invalid_argument("bitstring length must be in [1, 64]");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument(fmt::format("invalid bitstring '{}'", bits));
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

double cut_value(const Graph& graph, std::uint64_t assignment) {
    double total = 0.0;
    for (const auto& e : graph.edges()) {
        if (((assignment >> e.u) ^ (assignment >> e.v)) & 1U) {
            total += e.weight;
        }
    }
    return total;
}

double cut_value(const Graph& graph, std::string_view bits) {
    if (bits.size() != static_cast<std::size_t>(graph.n_nodes())) {
        throw std::invalid_argument(
            fmt::format("bitstring length {} does not match {} nodes", bits.size(), graph.n_nodes()));
    }
    return cut_value(graph, from_bitstring(bits));
}

MaxCutSolution max_cut_brute_force(const Graph& graph) {
    if (graph.n_nodes() > kMaxEnumerationNodes) {
        throw std::invalid_argument(
            fmt::format("brute-force MaxCut limited to {} nodes, got {}", kMaxEnumerationNodes, graph.n_nodes()));
    }
    const std::uint64_t count = std::uint64_t{1} << graph.n_nodes();
    MaxCutSolution best;
    best.c_max = -std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> argmax;
    for (std::uint64_t z = 0; z < count; ++z) {
        const double v = cut_value(graph, z);
        if (v > best.c_max + 1e-12) {
            best.c_max = v;
            argmax.assign(1, z);
        } else if (std::abs(v - best.c_max) <= 1e-12) {
            argmax.push_back(z);
        }
    }
    for (auto z : argmax) {
        best.witnesses.push_back(to_bitstring(z, graph.n_nodes()));
    }
    return best;
}

std::vector<double> cost_diagonal(const Graph& graph) {
    if (graph.n_nodes() > kMaxQubits) {
        throw std::invalid_argument(
            fmt::format("cost diagonal limited to {} nodes, got {}", kMaxQubits, graph.n_nodes()));
    }
    std::vector<double> values(std::size_t{1} << graph.n_nodes());
    for (std::size_t z = 0; z < values.size(); ++z) {
        values[z] = cut_value(graph, static_cast<std::uint64_t>(z));
    }
    return values;
}

}  // namespace noisyqaoa
