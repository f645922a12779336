#include "vsplit/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vsplit/errors.hpp"

namespace vsplit {

std::string_view to_string(Family f) { return f == Family::Stars ? "stars" : "cycles"; }

std::optional<Family> parse_family(std::string_view text) {
  if (text == "stars") return Family::Stars;
  if (text == "cycles") return Family::Cycles;
  return std::nullopt;
}

VertexSet part_vertices(const EdgePart& part) {
  VertexSet out;
  for (const auto& e : part) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

bool part_is_connected(const EdgePart& part) {
  if (part.empty()) return false;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : part) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  VertexSet seen{part.front().u};
  std::deque<VertexId> queue{part.front().u};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) queue.push_back(w);
  }
  return seen.size() == adj.size();
}

bool part_is_star(const EdgePart& part) {
  if (part.empty()) return false;
  if (part.size() == 1) return true;
  // The centre must be an endpoint of the first edge shared by all others.
  for (const auto& centre : {part.front().u, part.front().v})
    if (std::all_of(part.begin(), part.end(), [&](const Edge& e) { return e.has(centre); }))
      return true;
  return false;
}

bool part_is_cycle(const EdgePart& part) {
  if (part.size() < 3 || !part_is_connected(part)) return false;
  std::map<VertexId, int> deg;
  for (const auto& e : part) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return std::all_of(deg.begin(), deg.end(), [](const auto& kv) { return kv.second == 2; });
}

WeightReport validate_and_weigh(const Decomposition& d) {
  const auto isolated = d.host.isolated_vertices();
  if (!isolated.empty())
    throw Error(Errc::IsolatedVertexInHost, "'" + isolated.front() + "' has no incident edge");

  std::set<Edge> covered;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    for (const auto& e : d.parts[i]) {
      if (!d.host.has_edge(e.u, e.v))
        throw Error(Errc::UnknownEdge, e.u + "-" + e.v + " in part " + std::to_string(i));
      if (!covered.insert(e).second)
        throw Error(Errc::EdgeCoveredTwice, e.u + "-" + e.v);
    }
  }
  for (const auto& e : d.host.edges())
    if (!covered.count(e)) throw Error(Errc::EdgeNotCovered, e.u + "-" + e.v);

  WeightReport report;
  for (const auto& v : d.host.vertices()) report.per_vertex[v] = 0;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& part = d.parts[i];
    if (part.empty()) throw Error(Errc::PartNotInFamily, "part " + std::to_string(i) + " is empty");
    if (!part_is_connected(part))
      throw Error(Errc::PartNotConnected, "part " + std::to_string(i));
    const bool ok = d.family == Family::Stars ? part_is_star(part) : part_is_cycle(part);
    if (!ok)
      throw Error(Errc::PartNotInFamily,
                  "part " + std::to_string(i) + " is not in family " + std::string(to_string(d.family)));
    for (const auto& v : part_vertices(part)) {
      ++report.per_vertex[v];
      ++report.total;
    }
  }
  return report;
}

namespace {

const Edge& smallest_edge(const EdgePart& part) { return *std::min_element(part.begin(), part.end()); }

std::vector<std::size_t> parts_containing(const Decomposition& d, const VertexId& u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    if (std::any_of(d.parts[i].begin(), d.parts[i].end(), [&](const Edge& e) { return e.has(u); }))
      out.push_back(i);
  return out;
}

}  // namespace

DesplitOutcome desplit_at(const Decomposition& d, const VertexId& u, std::size_t part_index,
                          const VertexSet& reserved) {
  const auto containing = parts_containing(d, u);
  if (containing.size() < 2)
    throw Error(Errc::InvalidArgument, "'" + u + "' does not lie in two or more parts");
  if (std::find(containing.begin(), containing.end(), part_index) == containing.end())
    throw Error(Errc::InvalidArgument, "part " + std::to_string(part_index) + " does not contain '" + u + "'");

  std::vector<VertexId> inside;
  for (const auto& e : d.parts[part_index])
    if (e.has(u)) inside.push_back(e.other(u));
  std::sort(inside.begin(), inside.end());
  std::vector<VertexId> outside;
  for (const auto& w : d.host.neighbors(u))
    if (!std::binary_search(inside.begin(), inside.end(), w)) outside.push_back(w);

  SplitRecord record = make_split_in(d.host, u, inside, outside, Variant::Exclusive, reserved);

  DesplitOutcome out{apply_split(d.host, record), Decomposition{}, record};
  out.decomposition.family = d.family;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const VertexId& replacement = i == part_index ? record.descendant_a : record.descendant_b;
    EdgePart rebuilt;
    rebuilt.reserve(d.parts[i].size());
    for (const auto& e : d.parts[i])
      rebuilt.push_back(e.has(u) ? Edge(replacement, e.other(u)) : e);
    std::sort(rebuilt.begin(), rebuilt.end());
    out.decomposition.parts.push_back(std::move(rebuilt));
  }
  out.decomposition.host = out.graph;
  return out;
}

std::optional<DesplitOutcome> desplit_step(const Decomposition& d, const VertexSet& reserved) {
  const auto weight = validate_and_weigh(d);
  for (const auto& [u, count] : weight.per_vertex) {
    if (count < 2) continue;
    const auto containing = parts_containing(d, u);
    const auto best = *std::min_element(containing.begin(), containing.end(), [&](auto a, auto b) {
      return smallest_edge(d.parts[a]) < smallest_edge(d.parts[b]);
    });
    return desplit_at(d, u, best, reserved);
  }
  return std::nullopt;
}

SplitSequence decomposition_to_splits(const Decomposition& d, const VertexSet& reserved) {
  SplitSequence seq{d.host, {}};
  Decomposition current = d;
  while (auto step = desplit_step(current, reserved)) {
    seq.steps.push_back(std::move(step->record));
    current = std::move(step->decomposition);
  }
  return seq;
}

}  // namespace vsplit
