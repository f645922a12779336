#include "vsplit/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "vsplit/errors.hpp"

namespace vsplit::bipartite {
namespace {

using Adjacency = std::vector<std::vector<int>>;

// Vertices of a shortest odd closed walk avoiding `removed`, or empty if none.
std::vector<int> shortest_odd_cycle(const Adjacency& adj, const std::vector<char>& removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> best;
  std::size_t best_len = SIZE_MAX;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    if (removed[s]) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    std::optional<std::pair<int, int>> hit;
    while (!queue.empty() && !hit) {
      const int x = queue.front();
      queue.pop_front();
      if (2 * static_cast<std::size_t>(dist[x]) + 1 >= best_len) break;
      for (int y : adj[x]) {
        if (removed[y]) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (dist[y] == dist[x]) {
          hit = {x, y};
          break;
        }
      }
    }
    if (!hit) continue;
    std::vector<int> cycle;
    for (int v = hit->first; v >= 0; v = parent[v]) cycle.push_back(v);
    for (int v = hit->second; v != s; v = parent[v]) cycle.push_back(v);
    std::sort(cycle.begin(), cycle.end());
    cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
    best_len = 2 * static_cast<std::size_t>(dist[hit->first]) + 1;
    best = std::move(cycle);
  }
  return best;
}

bool transversal_within(const Adjacency& adj, std::vector<char>& removed, std::size_t budget) {
  const auto cycle = shortest_odd_cycle(adj, removed);
  if (cycle.empty()) return true;
  if (budget == 0) return false;
  for (int v : cycle) {
    removed[v] = 1;
    if (transversal_within(adj, removed, budget - 1)) return true;
    removed[v] = 0;
  }
  return false;
}

}  // namespace

OctResult exact_oct(const Graph& g, const OctOptions& options) {
  const auto names = g.vertices();
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  Adjacency adj(names.size());
  for (const auto& e : g.edges()) {
    adj[index[e.u]].push_back(index[e.v]);
    adj[index[e.v]].push_back(index[e.u]);
  }

  for (std::size_t k = 0; k <= options.max_k; ++k) {
    std::vector<char> removed(names.size(), 0);
    if (!transversal_within(adj, removed, k)) continue;
    OctResult out;
    VertexSet drop;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (removed[i]) {
        out.deletion_set.push_back(names[i]);
        drop.insert(names[i]);
      }
    out.bipartition = *two_coloring(g.without(drop));
    return out;
  }
  throw Error(Errc::BudgetExceeded, "odd cycle transversal larger than " + std::to_string(options.max_k));
}

SplitSequence oct_to_splits(const Graph& g, const OctResult& o) {
  const VertexSet s(o.deletion_set.begin(), o.deletion_set.end());
  if (s.size() != o.deletion_set.size()) throw Error(Errc::InvalidOct, "repeated vertex in deletion set");
  for (const auto& v : s)
    if (!g.has_vertex(v)) throw Error(Errc::InvalidOct, "unknown vertex '" + v + "' in deletion set");
  const auto& [v1, v2] = o.bipartition;
  for (const auto& v : g.vertices()) {
    const int places = static_cast<int>(s.count(v)) + static_cast<int>(v1.count(v)) + static_cast<int>(v2.count(v));
    if (places != 1) throw Error(Errc::InvalidOct, "vertex '" + v + "' not in exactly one of S, V_1, V_2");
  }
  if (v1.size() + v2.size() + s.size() != g.order())
    throw Error(Errc::InvalidOct, "bipartition names vertices outside the graph");
  for (const auto& e : g.edges())
    if ((v1.count(e.u) && v1.count(e.v)) || (v2.count(e.u) && v2.count(e.v)))
      throw Error(Errc::InvalidOct, "edge " + e.u + "-" + e.v + " inside one side");

  SplitSequence seq{g, {}};
  Graph state = g;
  VertexSet pending = s;
  VertexSet first_copies;
  for (const auto& v : o.deletion_set) {
    pending.erase(v);
    std::vector<VertexId> side_a, side_b;
    for (const auto& w : state.neighbors(v)) {
      if (v2.count(w) || pending.count(w))
        side_a.push_back(w);
      else
        side_b.push_back(w);
    }
    auto r = make_split_in(state, v, side_a, side_b, Variant::Exclusive);
    apply_split_in_place(state, r);
    first_copies.insert(r.descendant_a);
    seq.steps.push_back(std::move(r));
  }
  return seq;
}

OctResult splits_to_oct(const Graph& g, const SplitSequence& s) {
  const auto rep = replay(SplitSequence{g, s.steps});
  if (!is_bipartite(rep.graph)) throw Error(Errc::FinalGraphNotBipartite, "final graph has an odd cycle");
  VertexSet drop;
  for (const auto& r : s.steps) drop.insert(rep.ancestry.at(r.target));
  OctResult out;
  out.deletion_set.assign(drop.begin(), drop.end());
  out.bipartition = *two_coloring(g.without(drop));
  return out;
}

SolveResult solve_bipartite(const Graph& g, Variant variant, const OctOptions& options) {
  SolveResult result;
  result.graph_class = GraphClass::Bipartite;
  result.variant = variant;
  result.isolated = g.isolated_vertices();
  result.certificate = oct_to_splits(g, exact_oct(g, options));
  result.feasible = true;
  result.min_splits = result.certificate.steps.size();
  result.provenance.assign(result.certificate.steps.size(), "oct-construction");
  return result;
}

}  // namespace vsplit::bipartite
