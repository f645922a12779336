#include "vsplit/graph.hpp"

#include "vsplit/errors.hpp"

namespace vsplit {

Edge::Edge(VertexId a, VertexId b) {
  if (b < a) std::swap(a, b);
  u = std::move(a);
  v = std::move(b);
}

Graph::Graph(std::initializer_list<VertexId> vertices,
             std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  for (const auto& v : vertices) add_vertex(v);
  for (const auto& [a, b] : edges) add_edge(a, b);
}

Graph Graph::from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges,
                        const std::vector<VertexId>& extra_vertices) {
  Graph g;
  for (const auto& v : extra_vertices) g.add_vertex(v);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

void Graph::add_vertex(const VertexId& v) { adj_.try_emplace(v); }

void Graph::add_edge(const VertexId& a, const VertexId& b) {
  if (a == b) throw Error(Errc::InvalidGraph, "self-loop on '" + a + "'");
  auto& na = adj_[a];
  if (!na.insert(b).second) throw Error(Errc::InvalidGraph, "repeated edge " + a + "-" + b);
  adj_[b].insert(a);
  ++edge_count_;
}

void Graph::remove_edge(const VertexId& a, const VertexId& b) {
  auto ia = adj_.find(a);
  auto ib = adj_.find(b);
  if (ia == adj_.end() || ib == adj_.end() || ia->second.erase(b) == 0) return;
  ib->second.erase(a);
  --edge_count_;
}

void Graph::remove_vertex(const VertexId& v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (const auto& w : it->second) adj_[w].erase(v);
  edge_count_ -= it->second.size();
  adj_.erase(it);
}

bool Graph::has_edge(const VertexId& a, const VertexId& b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.count(b) != 0;
}

const VertexSet& Graph::neighbors(const VertexId& v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw Error(Errc::UnknownVertex, "'" + v + "'");
  return it->second;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, ns] : adj_)
    for (const auto& w : ns)
      if (v < w) out.emplace_back(v, w);
  return out;
}

std::vector<VertexId> Graph::isolated_vertices() const {
  std::vector<VertexId> out;
  for (const auto& [v, ns] : adj_)
    if (ns.empty()) out.push_back(v);
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph g;
  for (const auto& v : keep)
    if (has_vertex(v)) g.add_vertex(v);
  for (const auto& [v, ns] : adj_) {
    if (!keep.count(v)) continue;
    for (const auto& w : ns)
      if (v < w && keep.count(w)) g.add_edge(v, w);
  }
  return g;
}

Graph Graph::without(const VertexSet& drop) const {
  VertexSet keep;
  for (const auto& [v, _] : adj_)
    if (!drop.count(v)) keep.insert(v);
  return induced(keep);
}

void Multigraph::add_edge(const VertexId& a, const VertexId& b, int count) {
  if (a == b) throw Error(Errc::InvalidGraph, "self-loop on '" + a + "'");
  if (count <= 0) throw Error(Errc::InvalidArgument, "multiplicity must be positive");
  vertices.insert(a);
  vertices.insert(b);
  multiplicity[Edge(a, b)] += count;
}

std::size_t Multigraph::degree(const VertexId& v) const {
  std::size_t d = 0;
  for (const auto& [e, k] : multiplicity)
    if (e.has(v)) d += static_cast<std::size_t>(k);
  return d;
}

std::size_t Multigraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& [e, k] : multiplicity) total += static_cast<std::size_t>(k);
  return total;
}

}  // namespace vsplit
