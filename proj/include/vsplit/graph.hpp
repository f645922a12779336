#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vsplit {

// Vertex labels are opaque, case-sensitive strings.
using VertexId = std::string;
using VertexSet = std::set<VertexId>;

// Undirected edge stored with the lexicographically smaller endpoint first.
struct Edge {
  VertexId u;
  VertexId v;

  Edge() = default;
  Edge(VertexId a, VertexId b);

  bool has(const VertexId& x) const { return u == x || v == x; }
  const VertexId& other(const VertexId& x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

/// Finite simple undirected graph over string-labelled vertices.
///
/// Iteration orders (vertices(), edges(), neighbors()) are lexicographic, which
/// is what every solver relies on for reproducible tie-breaking.
class Graph {
 public:
  Graph() = default;
  Graph(std::initializer_list<VertexId> vertices,
        std::initializer_list<std::pair<VertexId, VertexId>> edges);

  static Graph from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges,
                          const std::vector<VertexId>& extra_vertices = {});

  void add_vertex(const VertexId& v);
  // Adds missing endpoints. Throws InvalidGraph on self-loops or repeated edges.
  void add_edge(const VertexId& a, const VertexId& b);
  void remove_edge(const VertexId& a, const VertexId& b);
  void remove_vertex(const VertexId& v);

  bool has_vertex(const VertexId& v) const { return adj_.count(v) != 0; }
  bool has_edge(const VertexId& a, const VertexId& b) const;

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  std::size_t degree(const VertexId& v) const { return neighbors(v).size(); }
  // Throws UnknownVertex.
  const VertexSet& neighbors(const VertexId& v) const;

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  std::vector<VertexId> isolated_vertices() const;

  Graph induced(const VertexSet& keep) const;
  Graph without(const VertexSet& drop) const;

  const std::map<VertexId, VertexSet>& adjacency() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  std::map<VertexId, VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

/// Multigraph with positive edge multiplicities, used for postman walks and
/// parallel-copy constructions.
struct Multigraph {
  VertexSet vertices;
  std::map<Edge, int> multiplicity;

  void add_vertex(const VertexId& v) { vertices.insert(v); }
  void add_edge(const VertexId& a, const VertexId& b, int count = 1);
  std::size_t degree(const VertexId& v) const;
  std::size_t edge_count() const;
};

}  // namespace vsplit
