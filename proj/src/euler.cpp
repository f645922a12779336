#include "vsplit/euler.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "vsplit/errors.hpp"

namespace vsplit {

std::vector<MultiEdge> expand(const Multigraph& mg) {
  std::vector<MultiEdge> out;
  for (const auto& [e, k] : mg.multiplicity)
    for (int i = 0; i < k; ++i) out.push_back({e.u, e.v, false});
  return out;
}

EulerCircuit euler_circuit(const std::vector<MultiEdge>& edges, const VertexId& start) {
  EulerCircuit out;
  if (edges.empty()) {
    out.vertices.push_back(start);
    return out;
  }

  std::map<VertexId, std::size_t> index;
  for (const auto& e : edges) {
    index.emplace(e.u, 0);
    index.emplace(e.v, 0);
  }
  if (!index.count(start)) throw Error(Errc::Disconnected, "start '" + start + "' has no edges");
  std::vector<VertexId> names;
  for (auto& [name, idx] : index) {
    idx = names.size();
    names.push_back(name);
  }

  // incident[v] = (neighbour index, edge index), sorted
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(names.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto a = index.at(edges[i].u);
    const auto b = index.at(edges[i].v);
    incident[a].emplace_back(b, i);
    incident[b].emplace_back(a, i);
  }
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (incident[v].size() % 2 != 0)
      throw Error(Errc::OddDegreeVertex, "'" + names[v] + "' has odd degree");
    std::sort(incident[v].begin(), incident[v].end());
  }

  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> cursor(names.size(), 0);
  // (vertex, edge used to reach it)
  std::vector<std::pair<std::size_t, std::size_t>> stack{{index.at(start), SIZE_MAX}};
  std::vector<std::pair<std::size_t, std::size_t>> circuit;
  while (!stack.empty()) {
    const auto v = stack.back().first;
    auto& cur = cursor[v];
    while (cur < incident[v].size() && used[incident[v][cur].second]) ++cur;
    if (cur == incident[v].size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    const auto [w, e] = incident[v][cur];
    used[e] = true;
    stack.emplace_back(w, e);
  }
  if (circuit.size() != edges.size() + 1)
    throw Error(Errc::Disconnected, "edges do not form a single connected component");

  std::reverse(circuit.begin(), circuit.end());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    out.vertices.push_back(names[circuit[i].first]);
    if (i > 0) out.edges.push_back(circuit[i].second);
  }
  return out;
}

Multigraph traversal_multigraph(const ClosedWalk& w) {
  Multigraph mg;
  const auto l = w.steps.size();
  for (std::size_t i = 0; i < l; ++i) {
    mg.add_vertex(w.steps[i]);
    if (l > 1) mg.add_edge(w.steps[i], w.steps[(i + 1) % l]);
  }
  return mg;
}

std::vector<VertexId> ShortestPaths::path_to(const VertexId& target) const {
  if (!dist.count(target)) return {};
  std::vector<VertexId> path{target};
  for (auto it = parent.find(target); it != parent.end(); it = parent.find(it->second))
    path.push_back(it->second);
  std::reverse(path.begin(), path.end());
  return path;
}

ShortestPaths bfs(const Graph& g, const VertexId& source) {
  ShortestPaths sp;
  sp.dist[source] = 0;
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& w : g.neighbors(v)) {
      if (sp.dist.count(w)) continue;
      sp.dist[w] = sp.dist[v] + 1;
      sp.parent[w] = v;
      queue.push_back(w);
    }
  }
  return sp;
}

}  // namespace vsplit
