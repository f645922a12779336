#include "vsplit/constellation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vsplit/errors.hpp"

namespace vsplit::constellation {

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (const auto& e : g.edges())
    if (!cover.count(e.u) && !cover.count(e.v)) return false;
  return true;
}

namespace {

// Branch-and-reduce decision procedure over an index graph with an undo trail.
class CoverSearch {
 public:
  CoverSearch(const std::vector<std::vector<int>>& adj, std::uint64_t& nodes, std::uint64_t limit)
      : adj_(adj), status_(adj.size(), kActive), deg_(adj.size()), nodes_(nodes), limit_(limit) {
    for (std::size_t v = 0; v < adj_.size(); ++v) deg_[v] = static_cast<int>(adj_[v].size());
  }

  void force_in(int v) { take(v); }
  void force_out(int v) {
    for (int w : adj_[v])
      if (status_[w] == kActive) take(w);
    drop(v);
  }
  bool active(int v) const { return status_[v] == kActive; }
  int forced_size() const {
    return static_cast<int>(std::count(status_.begin(), status_.end(), kCovered));
  }

  // True iff the remaining active graph has a cover within `budget`; on success
  // the cover is left applied.
  bool search(int budget) {
    if (++nodes_ > limit_) throw Error(Errc::BudgetExceeded, "vertex cover search node limit reached");
    const std::size_t mark = trail_.size();

    for (bool changed = true; changed && budget >= 0;) {
      changed = false;
      for (int v = 0; v < static_cast<int>(adj_.size()) && budget >= 0; ++v) {
        if (status_[v] != kActive) continue;
        if (deg_[v] == 0) {
          drop(v);
          changed = true;
        } else if (deg_[v] == 1) {
          for (int w : adj_[v])
            if (status_[w] == kActive) {
              take(w);
              break;
            }
          --budget;
          changed = true;
        }
      }
    }
    if (budget < 0) return undo(mark);

    int best = -1;
    int edges2 = 0;
    for (int v = 0; v < static_cast<int>(adj_.size()); ++v) {
      if (status_[v] != kActive) continue;
      edges2 += deg_[v];
      if (best < 0 || deg_[v] > deg_[best]) best = v;
    }
    if (edges2 == 0) return true;
    if (budget == 0 || edges2 / 2 > budget * deg_[best]) return undo(mark);

    const std::size_t branch = trail_.size();
    take(best);
    if (search(budget - 1)) return true;
    undo(branch);

    if (deg_[best] <= budget) {
      std::vector<int> nbrs;
      for (int w : adj_[best])
        if (status_[w] == kActive) nbrs.push_back(w);
      for (int w : nbrs) take(w);
      if (search(budget - static_cast<int>(nbrs.size()))) return true;
    }
    return undo(mark);
  }

  std::vector<int> covered() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < status_.size(); ++v)
      if (status_[v] == kCovered) out.push_back(static_cast<int>(v));
    return out;
  }

 private:
  enum Status : unsigned char { kActive, kCovered, kDropped };

  void take(int v) {
    status_[v] = kCovered;
    for (int w : adj_[v])
      if (status_[w] == kActive) --deg_[w];
    trail_.push_back(v);
  }
  void drop(int v) {
    status_[v] = kDropped;
    trail_.push_back(v);
  }
  bool undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int v = trail_.back();
      trail_.pop_back();
      const bool was_covered = status_[v] == kCovered;
      status_[v] = kActive;
      if (was_covered)
        for (int w : adj_[v])
          if (status_[w] == kActive) ++deg_[w];
      deg_[v] = 0;
      for (int w : adj_[v])
        if (status_[w] == kActive) ++deg_[v];
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<Status> status_;
  std::vector<int> deg_;
  std::vector<int> trail_;
  std::uint64_t& nodes_;
  std::uint64_t limit_;
};

}  // namespace

VertexCoverResult exact_vertex_cover(const Graph& g, const VcOptions& options) {
  const auto names = g.vertices();
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(names.size());
  for (const auto& e : g.edges()) {
    adj[index[e.u]].push_back(index[e.v]);
    adj[index[e.v]].push_back(index[e.u]);
  }

  std::uint64_t nodes = 0;
  auto feasible = [&](const std::vector<int>& in, const std::vector<int>& out, int budget) {
    CoverSearch s(adj, nodes, options.node_limit);
    for (int v : in)
      if (s.active(v)) s.force_in(v);
    for (int v : out) s.force_out(v);
    const int rest = budget - s.forced_size();
    return rest >= 0 && s.search(rest);
  };

  int optimum = 0;
  while (!feasible({}, {}, optimum)) ++optimum;

  // Fix vertices in id order, preferring to include each one.
  std::vector<int> in, out;
  for (int v = 0; v < static_cast<int>(names.size()); ++v) {
    if (adj[v].empty()) {
      out.push_back(v);
      continue;
    }
    in.push_back(v);
    if (!feasible(in, out, optimum)) {
      in.pop_back();
      out.push_back(v);
    }
  }

  VertexCoverResult result;
  for (int v : in) result.cover.insert(names[v]);
  result.size = result.cover.size();
  result.optimal = true;
  return result;
}

Decomposition vc_to_star_decomposition(const Graph& g, const std::vector<VertexId>& cover) {
  if (const auto iso = g.isolated_vertices(); !iso.empty())
    throw Error(Errc::IsolatedVertexInHost, "'" + iso.front() + "'");
  for (const auto& v : cover)
    if (!g.has_vertex(v)) throw Error(Errc::UnknownVertex, "'" + v + "' in cover");
  const VertexSet cover_set(cover.begin(), cover.end());
  if (!is_vertex_cover(g, cover_set)) throw Error(Errc::NotACover, "some edge has no endpoint in the cover");

  Decomposition d{g, {}, Family::Stars};
  VertexSet earlier;
  for (const auto& c : cover) {
    EdgePart part;
    for (const auto& w : g.neighbors(c))
      if (!earlier.count(w)) part.emplace_back(c, w);
    earlier.insert(c);
    if (!part.empty()) d.parts.push_back(std::move(part));
  }
  return d;
}

VertexId star_center(const EdgePart& part) {
  if (part.size() == 1) return part.front().u;
  const auto& e = part.front();
  return part[1].has(e.u) ? e.u : e.v;
}

VertexCoverResult star_decomposition_to_vc(const Decomposition& d) {
  if (d.family != Family::Stars) throw Error(Errc::PartNotInFamily, "expected a star decomposition");
  validate_and_weigh(d);
  VertexCoverResult out;
  for (const auto& part : d.parts) out.cover.insert(star_center(part));
  out.size = out.cover.size();
  return out;
}

Decomposition merge_star_decomposition_through_split(const Graph& g, const Graph& g_split,
                                                     const SplitRecord& r, const Decomposition& d_split) {
  try {
    if (apply_split(g, r) != g_split)
      throw Error(Errc::InconsistentSplit, "split does not turn g into g_split");
  } catch (const Error& e) {
    if (e.code() == Errc::InconsistentSplit) throw;
    throw Error(Errc::InconsistentSplit, e.what());
  }
  if (d_split.family != Family::Stars) throw Error(Errc::PartNotInFamily, "expected a star decomposition");
  validate_and_weigh(Decomposition{g_split, d_split.parts, Family::Stars});

  auto pull = [&](const VertexId& x) -> const VertexId& {
    return x == r.descendant_a || x == r.descendant_b ? r.target : x;
  };
  Decomposition out{g, {}, Family::Stars};
  std::set<Edge> placed;
  for (const auto& part : d_split.parts) {
    std::set<Edge> mapped;
    for (const auto& e : part) mapped.emplace(pull(e.u), pull(e.v));
    EdgePart kept;
    for (const auto& e : mapped)
      if (placed.insert(e).second) kept.push_back(e);
    if (!kept.empty()) out.parts.push_back(std::move(kept));
  }
  return out;
}

SolveResult solve_constellation(const Graph& g, Variant variant, const VcOptions& options) {
  SolveResult result;
  result.graph_class = GraphClass::Constellation;
  result.variant = variant;
  result.certificate.base = g;
  result.isolated = g.isolated_vertices();

  const VertexSet isolated(result.isolated.begin(), result.isolated.end());
  const Graph core = g.without(isolated);
  const auto vc = exact_vertex_cover(core, options);
  const std::vector<VertexId> order(vc.cover.begin(), vc.cover.end());
  const auto seq = decomposition_to_splits(vc_to_star_decomposition(core, order), isolated);

  result.certificate.steps = seq.steps;
  result.feasible = true;
  result.min_splits = seq.steps.size();
  result.provenance.assign(seq.steps.size(), "desplit");
  return result;
}

}  // namespace vsplit::constellation
