#include "vsplit/linear_forest.hpp"

#include <algorithm>
#include <map>

#include "vsplit/errors.hpp"
#include "vsplit/euler.hpp"
#include "vsplit/membership.hpp"

namespace vsplit::linear_forest {

TrailCover min_trail_cover(const Graph& component) {
  if (component.size() == 0) throw Error(Errc::NoEdges, "component has no edges");
  if (!is_connected(component)) throw Error(Errc::Disconnected, "trail cover needs a connected graph");

  std::vector<MultiEdge> edges;
  for (const auto& e : component.edges()) edges.push_back({e.u, e.v, false});
  std::vector<VertexId> odd;
  for (const auto& [v, ns] : component.adjacency())
    if (ns.size() % 2 != 0) odd.push_back(v);
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) edges.push_back({odd[i], odd[i + 1], true});

  TrailCover tc;
  tc.alpha = odd.size();
  tc.mnt = std::max<std::size_t>(tc.alpha / 2, 1);

  const auto circuit = euler_circuit(edges, component.vertices().front());
  const std::size_t len = circuit.edges.size();
  if (odd.empty()) {
    tc.trails.push_back(circuit.vertices);
    return tc;
  }

  std::size_t first_false = 0;
  while (!edges[circuit.edges[first_false]].auxiliary) ++first_false;
  Trail current;
  for (std::size_t step = 1; step <= len; ++step) {
    const std::size_t i = (first_false + step) % len;
    if (edges[circuit.edges[i]].auxiliary) {
      if (current.size() > 1) tc.trails.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (current.empty()) current.push_back(circuit.vertices[i]);
    current.push_back(circuit.vertices[i + 1]);
  }
  return tc;
}

SplitSequence trails_to_splits(const Graph& g, const std::vector<TrailCover>& covers) {
  // Occurrence (trail, position) -> id of the vertex currently carrying it.
  std::vector<Trail> trails;
  for (const auto& tc : covers)
    for (const auto& t : tc.trails) trails.push_back(t);
  std::vector<std::vector<VertexId>> holder(trails.size());
  std::map<VertexId, std::vector<std::pair<std::size_t, std::size_t>>> occurrences;
  for (std::size_t t = 0; t < trails.size(); ++t) {
    holder[t] = trails[t];
    for (std::size_t p = 0; p < trails[t].size(); ++p) occurrences[trails[t][p]].emplace_back(t, p);
  }

  SplitSequence seq{g, {}};
  Graph state = g;
  const auto iso = g.isolated_vertices();
  const VertexSet reserved(iso.begin(), iso.end());
  for (const auto& [v, occ] : occurrences) {
    for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
      const auto [t, p] = occ[i];
      const VertexId current = holder[t][p];
      std::vector<VertexId> side_a;
      if (p > 0) side_a.push_back(holder[t][p - 1]);
      if (p + 1 < trails[t].size()) side_a.push_back(holder[t][p + 1]);
      std::sort(side_a.begin(), side_a.end());
      std::vector<VertexId> side_b;
      for (const auto& w : state.neighbors(current))
        if (!std::binary_search(side_a.begin(), side_a.end(), w)) side_b.push_back(w);

      auto r = make_split_in(state, current, side_a, side_b, Variant::Exclusive, reserved);
      apply_split_in_place(state, r);
      holder[t][p] = r.descendant_a;
      for (std::size_t j = i + 1; j < occ.size(); ++j) holder[occ[j].first][occ[j].second] = r.descendant_b;
      seq.steps.push_back(std::move(r));
    }
  }
  return seq;
}

SplitSequence trails_to_splits(const Graph& component, const TrailCover& tc) {
  return trails_to_splits(component, std::vector<TrailCover>{tc});
}

SplitSequence exclusivize_sequence(const Graph& g, const SplitSequence& s) {
  try {
    if (!is_linear_forest(apply_sequence(SplitSequence{g, s.steps})))
      throw Error(Errc::InvalidSequence, "sequence does not end in a linear forest");
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidSequence) throw;
    throw Error(Errc::InvalidSequence, e.what());
  }

  SplitSequence out{g, {}};
  Graph sim = g;
  for (const auto& r : s.steps) {
    const VertexSet& present = sim.neighbors(r.target);
    const VertexSet a(r.side_a.begin(), r.side_a.end());
    SplitRecord x = r;
    x.variant = Variant::Exclusive;
    x.side_a.clear();
    x.side_b.clear();
    for (const auto& w : r.side_a)
      if (present.count(w)) x.side_a.push_back(w);
    for (const auto& w : r.side_b)
      if (present.count(w) && !a.count(w)) x.side_b.push_back(w);
    apply_split_in_place(sim, x);
    out.steps.push_back(std::move(x));
  }
  return out;
}

SolveResult solve_linear_forest(const Graph& g, Variant variant) {
  SolveResult result;
  result.graph_class = GraphClass::LinearForest;
  result.variant = variant;
  result.isolated = g.isolated_vertices();

  std::vector<TrailCover> covers;
  for (const auto& vs : component_vertex_sets(g)) {
    if (vs.size() == 1) continue;
    covers.push_back(min_trail_cover(g.induced(vs)));
  }
  result.certificate = trails_to_splits(g, covers);
  result.feasible = true;
  result.min_splits = result.certificate.steps.size();
  result.provenance.assign(result.certificate.steps.size(), "trail-opening");
  return result;
}

}  // namespace vsplit::linear_forest
