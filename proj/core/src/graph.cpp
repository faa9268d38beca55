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

#include "qwalk/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

Edge normalized(Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

std::string edge_str(Edge e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(std::vector<std::vector<Vertex>> neighbors, std::string name)
    : neighbors_(std::move(neighbors)), name_(std::move(name)) {
  const std::size_t n = neighbors_.size();
  if (n == 0) throw std::invalid_argument("Graph: no vertices");
  for (Vertex v = 0; v < n; ++v) {
    const auto& nb = neighbors_[v];
    if (nb.empty()) {
      throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                  " is isolated");
    }
    for (std::size_t p = 0; p < nb.size(); ++p) {
      if (nb[p] >= n) {
        throw std::invalid_argument("Graph: neighbor label out of range at vertex " +
                                    std::to_string(v));
      }
      if (p > 0 && nb[p] <= nb[p - 1]) {
        throw std::invalid_argument(
            "Graph: neighbor list not strictly ascending at vertex " +
            std::to_string(v));
      }
      const auto& back = neighbors_[nb[p]];
      if (!std::binary_search(back.begin(), back.end(), v)) {
        throw std::invalid_argument("Graph: asymmetric adjacency " +
                                    edge_str({v, nb[p]}));
      }
    }
  }
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges,
                        std::string name) {
  std::set<Edge> seen;
  std::vector<std::vector<Vertex>> nb(n);
  for (Edge e : edges) {
    e = normalized(e);
    if (e.second >= n) {
      throw std::invalid_argument("Graph: edge " + edge_str(e) +
                                  " references a vertex >= " + std::to_string(n));
    }
    if (!seen.insert(e).second) {
      throw std::invalid_argument("Graph: duplicate edge " + edge_str(e));
    }
    nb[e.first].push_back(e.second);
    if (e.first != e.second) nb[e.second].push_back(e.first);
  }
  for (auto& list : nb) std::sort(list.begin(), list.end());
  return Graph(std::move(nb), std::move(name));
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d;
  d.reserve(neighbors_.size());
  for (const auto& nb : neighbors_) d.push_back(nb.size());
  return d;
}

Graph Graph::with_name(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& nb = neighbors_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < neighbors_.size(); ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u <= v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

std::size_t Graph::self_loop_count() const {
  std::size_t loops = 0;
  for (Vertex v = 0; v < neighbors_.size(); ++v) loops += adjacent(v, v) ? 1 : 0;
  return loops;
}

bool Graph::connected() const {
  std::vector<bool> seen(vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : neighbors_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == vertex_count();
}

ArcTable build_arc_table(const Graph& g) {
  ArcTable t;
  const std::size_t n = g.vertex_count();
  t.vertex_offset.reserve(n + 1);
  t.vertex_offset.push_back(0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) t.arcs.emplace_back(v, w);
    t.vertex_offset.push_back(t.arcs.size());
  }
  t.reverse.resize(t.arcs.size());
  for (std::size_t a = 0; a < t.arcs.size(); ++a) {
    const auto [tail, head] = t.arcs[a];
    const auto& nb = g.neighbors(head);
    const auto port = static_cast<std::size_t>(
        std::lower_bound(nb.begin(), nb.end(), tail) - nb.begin());
    t.reverse[a] = t.vertex_offset[head] + port;
  }
  return t;
}

Graph complete_graph(std::size_t n, bool self_loops) {
  if (n < 2) throw std::invalid_argument("complete_graph: n must be >= 2");
  std::vector<std::vector<Vertex>> nb(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v || self_loops) nb[u].push_back(v);
    }
  }
  return Graph(std::move(nb), "k" + std::to_string(n) + (self_loops ? "-loops" : ""));
}

Graph hypercube(std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("hypercube: dim must be >= 1");
  if (dim > 20) throw std::invalid_argument("hypercube: dim too large");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<std::vector<Vertex>> nb(n);
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t b = 0; b < dim; ++b) nb[u].push_back(u ^ (std::size_t{1} << b));
    std::sort(nb[u].begin(), nb[u].end());
  }
  return Graph(std::move(nb), "q" + std::to_string(dim));
}

Graph cayley_tree(std::size_t branching, std::size_t generations, bool joined) {
  if (branching < 2) throw std::invalid_argument("cayley_tree: branching must be >= 2");
  if (generations < 1) throw std::invalid_argument("cayley_tree: generations must be >= 1");

  std::vector<Edge> edges;
  std::vector<Vertex> frontier{0};
  std::size_t next = 1;
  for (std::size_t gen = 0; gen < generations; ++gen) {
    const std::size_t children = gen == 0 ? branching : branching - 1;
    std::vector<Vertex> level;
    for (Vertex parent : frontier) {
      for (std::size_t c = 0; c < children; ++c) {
        edges.emplace_back(parent, next);
        level.push_back(next++);
      }
    }
    frontier = std::move(level);
  }

  if (joined) {
    if (frontier.size() < 3) {
      throw std::invalid_argument("cayley_tree: joining needs at least 3 leaves");
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      edges.emplace_back(frontier[i], frontier[(i + 1) % frontier.size()]);
    }
  }

  std::string name = std::to_string(branching) + "ct" + std::to_string(generations) +
                     (joined ? "-joined" : "-unjoined");
  return Graph::from_edges(next, edges, std::move(name));
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges,
                   bool require_connected) {
  std::set<Edge> drop;
  for (Edge e : edges) {
    e = normalized(e);
    if (!g.adjacent(e.first, e.second)) {
      throw std::invalid_argument("remove_edges: " + edge_str(e) + " is not an edge");
    }
    if (!drop.insert(e).second) {
      throw std::invalid_argument("remove_edges: duplicate " + edge_str(e));
    }
  }

  std::vector<std::vector<Vertex>> nb(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (!drop.contains(normalized({u, v}))) nb[u].push_back(v);
    }
    if (nb[u].empty()) {
      throw std::invalid_argument("remove_edges: vertex " + std::to_string(u) +
                                  " would be isolated");
    }
  }
  Graph out(std::move(nb), g.name());
  if (require_connected && !out.connected()) {
    throw std::invalid_argument("remove_edges: result is disconnected");
  }
  return out;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "k8", "q3", "3ct2-joined", "k8-modified", "q3-modified", "3ct2-unjoined"};
  return names;
}

Graph catalog(std::string_view name) {
  auto named = [&](const Graph& g) { return g.with_name(std::string(name)); };

  if (name == "k8") return named(complete_graph(8, false));
  if (name == "q3") return named(hypercube(3));
  if (name == "3ct2-joined") return named(cayley_tree(3, 2, true));
  if (name == "3ct2-unjoined") return named(cayley_tree(3, 2, false));
  if (name == "k8-modified") {
    // 10 of 28 edges: a K4 on {0..3}, a triangle on {4,5,6}, and (6,7).
    return named(remove_edges(complete_graph(8, false),
                              {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                               {2, 3}, {4, 5}, {4, 6}, {5, 6}, {6, 7}},
                              true));
  }
  if (name == "q3-modified") {
    return named(remove_edges(hypercube(3), {{0, 1}, {0, 2}, {3, 7}, {5, 7}}, true));
  }
  throw std::invalid_argument("unknown graph '" + std::string(name) + "'");
}

void write_graph(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "# " << g.name() << '\n';
  out << "n " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in, std::string name) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;

  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("graph file line " + std::to_string(line_no) + ": " +
                                what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;

    if (tag == "n") {
      if (have_n) fail("repeated 'n' line");
      long long count = 0;
      if (!(fields >> count) || count < 1) fail("expected 'n <vertex-count>'");
      n = static_cast<std::size_t>(count);
      have_n = true;
    } else if (tag == "e") {
      if (!have_n) fail("'e' before 'n'");
      long long u = -1, v = -1;
      if (!(fields >> u >> v) || u < 0 || v < 0) fail("expected 'e <u> <v>'");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing field '" + extra + "'");
  }
  if (!have_n) throw std::invalid_argument("graph file: missing 'n' line");
  return Graph::from_edges(n, edges, std::move(name));
}

}  // namespace qwalk
