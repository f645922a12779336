#include "vsplit/cycle_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "vsplit/errors.hpp"
#include "vsplit/membership.hpp"

namespace vsplit::cycle {

CycleDecomposition cycle_decomposition(const Graph& g) {
  for (const auto& [v, ns] : g.adjacency()) {
    if (ns.empty()) throw Error(Errc::IsolatedVertex, "'" + v + "' cannot lie on a cycle");
    if (ns.size() % 2 != 0) throw Error(Errc::OddDegreeVertex, "'" + v + "'");
  }

  auto remaining = g.adjacency();
  auto take = [&](const VertexId& a, const VertexId& b) {
    remaining[a].erase(b);
    remaining[b].erase(a);
  };

  CycleDecomposition out;
  for (const auto& [start, _] : g.adjacency()) {
    // The path is kept simple; a repeated vertex closes a cycle which is cut off.
    std::vector<VertexId> path{start};
    std::map<VertexId, std::size_t> position{{start, 0}};
    while (true) {
      const VertexId v = path.back();
      if (remaining[v].empty()) break;  // only reachable when path == {start}
      const VertexId w = *remaining[v].begin();
      take(v, w);
      auto hit = position.find(w);
      if (hit == position.end()) {
        position.emplace(w, path.size());
        path.push_back(w);
        continue;
      }
      const std::size_t from = hit->second;
      std::vector<VertexId> cyc(path.begin() + static_cast<std::ptrdiff_t>(from), path.end());
      for (std::size_t i = from + 1; i < path.size(); ++i) position.erase(path[i]);
      path.resize(from + 1);
      out.cycles.push_back(std::move(cyc));
    }
  }
  return out;
}

Decomposition to_decomposition(const Graph& g, const CycleDecomposition& cd) {
  Decomposition d{g, {}, Family::Cycles};
  for (const auto& cyc : cd.cycles) {
    EdgePart part;
    for (std::size_t i = 0; i < cyc.size(); ++i) part.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    std::sort(part.begin(), part.end());
    d.parts.push_back(std::move(part));
  }
  return d;
}

Pairing min_weight_pairing(const std::vector<std::vector<std::size_t>>& dist) {
  const std::size_t k = dist.size();
  Pairing out;
  if (k == 0) return out;
  if (k % 2 != 0) throw Error(Errc::InvalidArgument, "odd number of vertices to pair");
  const std::size_t full = (std::size_t{1} << k) - 1;
  constexpr std::size_t kInf = SIZE_MAX / 4;
  // best[mask]: cheapest pairing of the vertices NOT in mask.
  std::vector<std::size_t> best(full + 1, kInf);
  std::vector<std::uint8_t> partner(full + 1, 0);
  best[full] = 0;
  for (std::size_t mask = full; mask-- > 0;) {
    std::size_t i = 0;
    while (mask & (std::size_t{1} << i)) ++i;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const std::size_t next = mask | (std::size_t{1} << i) | (std::size_t{1} << j);
      if (best[next] >= kInf) continue;
      const std::size_t cost = dist[i][j] + best[next];
      if (cost < best[mask]) {
        best[mask] = cost;
        partner[mask] = static_cast<std::uint8_t>(j);
      }
    }
  }
  out.weight = best[0];
  for (std::size_t mask = 0; mask != full;) {
    std::size_t i = 0;
    while (mask & (std::size_t{1} << i)) ++i;
    const std::size_t j = partner[mask];
    out.pairs.emplace_back(i, j);
    mask |= (std::size_t{1} << i) | (std::size_t{1} << j);
  }
  return out;
}

ClosedWalk chinese_postman(const Graph& component, const PostmanOptions& options) {
  if (component.size() == 0) throw Error(Errc::NoEdges, "postman walk needs at least one edge");
  if (!is_connected(component)) throw Error(Errc::Disconnected, "postman walk needs a connected graph");

  std::vector<VertexId> odd;
  for (const auto& [v, ns] : component.adjacency())
    if (ns.size() % 2 != 0) odd.push_back(v);
  if (odd.size() > options.odd_cap || odd.size() > 60)
    throw Error(Errc::TooManyOddVertices, std::to_string(odd.size()) + " odd-degree vertices exceed cap " +
                                              std::to_string(options.odd_cap));

  std::vector<ShortestPaths> trees;
  std::vector<std::vector<std::size_t>> dist(odd.size(), std::vector<std::size_t>(odd.size(), 0));
  for (const auto& o : odd) trees.push_back(bfs(component, o));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j) dist[i][j] = trees[i].dist.at(odd[j]);

  std::vector<MultiEdge> edges;
  for (const auto& e : component.edges()) edges.push_back({e.u, e.v, false});
  for (const auto& [i, j] : min_weight_pairing(dist).pairs) {
    const auto path = trees[i].path_to(odd[j]);
    for (std::size_t s = 0; s + 1 < path.size(); ++s) edges.push_back({path[s], path[s + 1], false});
  }

  const auto circuit = euler_circuit(edges, component.adjacency().begin()->first);
  return ClosedWalk{{circuit.vertices.begin(), circuit.vertices.end() - 1}};
}

namespace {

// Checks adjacency of every step (including the closing one) and, when asked,
// that the walk uses every edge and visits every vertex of `component`.
void validate_walk(const Graph& component, const ClosedWalk& walk, bool require_cover) {
  const auto l = walk.length();
  if (l < 2) throw Error(Errc::WalkInvalid, "closed walk needs at least two steps");
  std::set<Edge> used;
  for (std::size_t i = 0; i < l; ++i) {
    const auto& a = walk.steps[i];
    const auto& b = walk.steps[(i + 1) % l];
    if (!component.has_edge(a, b))
      throw Error(Errc::WalkInvalid, "step " + a + " -> " + b + " is not an edge");
    used.emplace(a, b);
  }
  if (!require_cover) return;
  for (const auto& e : component.edges())
    if (!used.count(e)) throw Error(Errc::WalkInvalid, "edge " + e.u + "-" + e.v + " is never traversed");
  for (const auto& v : component.vertices())
    if (std::find(walk.steps.begin(), walk.steps.end(), v) == walk.steps.end())
      throw Error(Errc::WalkInvalid, "vertex '" + v + "' is never visited");
}

using Multiplicities = std::map<VertexId, std::map<VertexId, int>>;

void bump(Multiplicities& mult, const VertexId& a, const VertexId& b, int delta) {
  if ((mult[a][b] += delta) == 0) mult[a].erase(b);
  if ((mult[b][a] += delta) == 0) mult[b].erase(a);
}

int degree_of(const Multiplicities& mult, const VertexId& v) {
  int d = 0;
  if (auto it = mult.find(v); it != mult.end())
    for (const auto& [_, k] : it->second) d += k;
  return d;
}

}  // namespace

std::vector<SplitRecord> open_walk(Graph& state, const Graph& component, const ClosedWalk& walk) {
  if (walk.length() >= 1 && walk.length() <= 2 && component.size() > 0) {
    validate_walk(component, walk, true);
    throw Error(Errc::WalkTooShort, "a closed walk of length " + std::to_string(walk.length()) +
                                        " cannot become a simple cycle");
  }
  validate_walk(component, walk, true);

  const auto& w = walk.steps;
  const std::size_t l = w.size();
  Multiplicities mult;
  for (std::size_t i = 0; i < l; ++i) bump(mult, w[i], w[(i + 1) % l], 1);

  std::map<VertexId, VertexId> current;  // remaining (uncoloured) copy of each walk vertex
  for (const auto& v : w) current[v] = v;

  std::vector<SplitRecord> records;
  VertexId prev = w[l - 1];
  for (std::size_t j = 0; j < l; ++j) {
    const VertexId v = current.at(w[j]);
    if (j == l - 1 || degree_of(mult, v) == 2) {
      prev = v;
      continue;
    }
    const VertexId next = current.at(w[j + 1]);

    std::map<VertexId, int> taken{{prev, 1}};
    ++taken[next];
    std::map<VertexId, int> kept = mult.at(v);
    for (const auto& [x, k] : taken) {
      auto it = kept.find(x);
      if (it == kept.end() || it->second < k)
        throw Error(Errc::WalkInvalid, "traversal edge " + v + "-" + x + " already consumed");
      if ((it->second -= k) == 0) kept.erase(it);
    }

    std::vector<VertexId> side_a, side_b;
    for (const auto& [x, _] : taken) side_a.push_back(x);
    for (const auto& [x, _] : kept) side_b.push_back(x);
    const bool shared = std::any_of(side_a.begin(), side_a.end(), [&](const VertexId& x) {
      return kept.count(x) != 0;
    });
    SplitRecord r = make_split_in(state, v, side_a, side_b, shared ? Variant::Inclusive : Variant::Exclusive);
    apply_split_in_place(state, r);

    const auto before = mult.at(v);
    for (const auto& [x, k] : before) bump(mult, v, x, -k);
    mult.erase(v);
    for (const auto& [x, k] : taken) bump(mult, r.descendant_a, x, k);
    for (const auto& [x, k] : kept) bump(mult, r.descendant_b, x, k);

    current[w[j]] = r.descendant_b;
    prev = r.descendant_a;
    records.push_back(std::move(r));
  }
  return records;
}

SplitSequence walk_to_cycle(const Graph& component, const ClosedWalk& walk) {
  Graph state = component;
  return SplitSequence{component, open_walk(state, component, walk)};
}

ClosedWalk merge_closed_walks(const Graph& component, const std::vector<ClosedWalk>& walks) {
  std::vector<MultiEdge> edges;
  std::set<Edge> used;
  for (const auto& walk : walks) {
    validate_walk(component, walk, false);
    const auto l = walk.length();
    for (std::size_t i = 0; i < l; ++i) {
      edges.push_back({walk.steps[i], walk.steps[(i + 1) % l], false});
      used.emplace(walk.steps[i], walk.steps[(i + 1) % l]);
    }
  }
  for (const auto& e : component.edges())
    if (!used.count(e)) throw Error(Errc::CoverageGap, "edge " + e.u + "-" + e.v + " is not covered");
  if (edges.empty()) throw Error(Errc::NoEdges, "nothing to merge");
  if (walks.size() == 1) return walks.front();
  if (!is_connected(component)) throw Error(Errc::Disconnected, "walks must lie in one component");

  const auto circuit = euler_circuit(edges, component.adjacency().begin()->first);
  return ClosedWalk{{circuit.vertices.begin(), circuit.vertices.end() - 1}};
}

SolveResult solve_evs(const Graph& g) {
  SolveResult result;
  result.graph_class = GraphClass::CycleGraph;
  result.variant = Variant::Exclusive;
  result.certificate.base = g;
  for (const auto& [v, ns] : g.adjacency()) {
    if (ns.empty()) {
      result.reason = "isolated vertex '" + v + "' can never lie on a cycle";
      return result;
    }
    if (ns.size() % 2 != 0) {
      result.reason = "vertex '" + v + "' has odd degree; exclusive splits preserve degree parity";
      return result;
    }
  }
  const auto decomposition = to_decomposition(g, cycle_decomposition(g));
  result.certificate = decomposition_to_splits(decomposition);
  result.feasible = true;
  result.min_splits = result.certificate.steps.size();
  result.provenance.assign(result.certificate.steps.size(), "desplit");
  return result;
}

SolveResult solve_ivs(const Graph& g, const PostmanOptions& options) {
  SolveResult result;
  result.graph_class = GraphClass::CycleGraph;
  result.variant = Variant::Inclusive;
  result.certificate.base = g;
  if (const auto iso = g.isolated_vertices(); !iso.empty()) {
    result.reason = "isolated vertex '" + iso.front() + "' can never lie on a cycle";
    return result;
  }

  Graph state = g;
  for (const auto& vs : component_vertex_sets(g)) {
    const Graph component = g.induced(vs);
    ClosedWalk walk = chinese_postman(component, options);
    if (component.size() == 1) walk = merge_closed_walks(component, {walk, walk});
    for (auto& r : open_walk(state, component, walk)) result.certificate.steps.push_back(std::move(r));
  }
  result.feasible = true;
  result.min_splits = result.certificate.steps.size();
  result.provenance.assign(result.certificate.steps.size(), "algorithm-1");
  return result;
}

}  // namespace vsplit::cycle
