// Copyright 2026 The qwalk Authors
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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwalk {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph, optionally with self-loops, on vertices 0..n-1.
///
/// Neighbor lists are strictly ascending; the position of a neighbor in its
/// list is the port (coin direction) index at that vertex. A self-loop shows
/// up once in the vertex's own list. Every vertex has degree >= 1.
class Graph {
 public:
  /// Validates symmetry, ordering, and the no-isolated-vertex rule.
  Graph(std::vector<std::vector<Vertex>> neighbors, std::string name = {});

  /// Builds from an edge list. Duplicate edges are rejected; (u, u) is a
  /// self-loop.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::string name = {});

  std::size_t vertex_count() const noexcept { return neighbors_.size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }
  std::vector<std::size_t> degrees() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Undirected edges (u <= v) in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  std::size_t self_loop_count() const;
  bool connected() const;

  const std::string& name() const noexcept { return name_; }
  Graph with_name(std::string name) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::vector<Vertex>> neighbors_;
  std::string name_;
};

/// Directed arcs of a graph, sorted by (tail, head). Arc index is the
/// single-particle basis index: arc (v, neighbors(v)[p]) is |v, c_p>.
struct ArcTable {
  std::vector<Edge> arcs;
  /// reverse[a] is the index of arc (head, tail); an involution.
  std::vector<std::size_t> reverse;
  /// Arcs leaving vertex v occupy [vertex_offset[v], vertex_offset[v + 1]).
  std::vector<std::size_t> vertex_offset;

  std::size_t size() const noexcept { return arcs.size(); }
  std::size_t vertex_count() const noexcept { return vertex_offset.size() - 1; }
  std::size_t degree(Vertex v) const {
    return vertex_offset[v + 1] - vertex_offset[v];
  }
};

ArcTable build_arc_table(const Graph& g);

Graph complete_graph(std::size_t n, bool self_loops);
Graph hypercube(std::size_t dim);

/// Rooted tree: vertex 0 has `branching` children, every later non-leaf has
/// branching - 1. Labels are assigned breadth first. With `joined`, the
/// leaves are additionally closed into one cycle in ascending label order.
Graph cayley_tree(std::size_t branching, std::size_t generations, bool joined);

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges,
                   bool require_connected);

/// Names accepted by catalog(), in display order.
const std::vector<std::string>& catalog_names();

/// One of: k8, q3, 3ct2-joined, k8-modified, q3-modified, 3ct2-unjoined.
/// Throws std::invalid_argument for anything else.
Graph catalog(std::string_view name);

/// Text format:
///   # comment
///   n <vertex-count>
///   e <u> <v>
/// Edges are written sorted; the output for a given graph is byte-stable.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in, std::string name = {});

}  // namespace qwalk
