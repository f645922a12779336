#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "vsplit/graph.hpp"

namespace vsplit {

// One parallel edge of an edge-list multigraph. Auxiliary edges are pairing
// edges that do not exist in the host graph.
struct MultiEdge {
  VertexId u;
  VertexId v;
  bool auxiliary = false;
};

std::vector<MultiEdge> expand(const Multigraph& mg);

struct EulerCircuit {
  // Closed: vertices.front() == vertices.back(); edges[i] joins vertices[i] and vertices[i + 1].
  std::vector<VertexId> vertices;
  std::vector<std::size_t> edges;
};

// Hierholzer's algorithm from `start`. Ties are broken by neighbour id, then by
// edge index. Throws OddDegreeVertex or Disconnected when no Euler circuit exists.
EulerCircuit euler_circuit(const std::vector<MultiEdge>& edges, const VertexId& start);

/// A closed walk w_0 .. w_{l-1}; the closing step w_{l-1} -> w_0 is implicit.
struct ClosedWalk {
  std::vector<VertexId> steps;

  std::size_t length() const { return steps.size(); }
  bool operator==(const ClosedWalk&) const = default;
};

// Multiplicity of each edge traversal in the walk.
Multigraph traversal_multigraph(const ClosedWalk& w);

// Unweighted BFS distances and parents from `source`; neighbours are scanned in
// lexicographic order so the recovered paths are deterministic.
struct ShortestPaths {
  std::map<VertexId, std::size_t> dist;
  std::map<VertexId, VertexId> parent;

  std::vector<VertexId> path_to(const VertexId& target) const;
};
ShortestPaths bfs(const Graph& g, const VertexId& source);

}  // namespace vsplit
