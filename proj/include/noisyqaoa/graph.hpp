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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace noisyqaoa {

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

/// Undirected weighted graph. Edge order is preserved; it fixes the gate
/// order of the cost layer.
class Graph {
public:
    Graph(int n_nodes, std::vector<Edge> edges, std::string name = {});

    int n_nodes() const { return n_nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t n_edges() const { return edges_.size(); }
    const std::string& name() const { return name_; }
    double total_weight() const;

private:
    int n_nodes_;
    std::vector<Edge> edges_;
    std::string name_;
};

/// Built-in instances: 2n-edge, 4n-irregular, 4n-yutsis (K4),
/// 6n-yutsis (K3,3), 6n-prism.
std::vector<std::string> builtin_graph_names();
Graph builtin_graph(std::string_view name);

/// Edge-list text: "N M" then M lines "u v [w]"; '#' starts a comment.
Graph parse_graph(std::string_view text, std::string name = {});
Graph load_graph(const std::filesystem::path& path);
/// Built-in name if one matches, otherwise a file path.
Graph resolve_graph(const std::string& ref);

/// Bitstrings are written most significant node first, so the text is the
/// binary form of the basis index: "01" on two nodes puts node 0 in
/// partition 1 and node 1 in partition 0.
std::string to_bitstring(std::uint64_t index, int n_bits);
std::uint64_t from_bitstring(std::string_view bits);

double cut_value(const Graph& graph, std::uint64_t assignment);
double cut_value(const Graph& graph, std::string_view bits);

struct MaxCutSolution {
    double c_max = 0.0;
    std::vector<std::string> witnesses;
};

inline constexpr int kMaxEnumerationNodes = 24;

MaxCutSolution max_cut_brute_force(const Graph& graph);

/// values[z] = cut value of basis index z, for the diagonal cost Hamiltonian.
std::vector<double> cost_diagonal(const Graph& graph);

}  // namespace noisyqaoa
