#include "vsplit/membership.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

namespace vsplit {

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Constellation: return "constellation";
    case GraphClass::CycleGraph: return "cycle-graph";
    case GraphClass::LinearForest: return "linear-forest";
    case GraphClass::Bipartite: return "bipartite";
  }
  return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view text) {
  for (auto c : {GraphClass::Constellation, GraphClass::CycleGraph, GraphClass::LinearForest,
                 GraphClass::Bipartite})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::vector<VertexSet> component_vertex_sets(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  // adjacency() iterates in lexicographic order, so components come out sorted
  // by their smallest member.
  for (const auto& [start, _] : g.adjacency()) {
    if (seen.count(start)) continue;
    VertexSet comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = std::move(queue.front());
      queue.pop_front();
      for (const auto& w : g.neighbors(v))
        if (seen.insert(w).second) queue.push_back(w);
      comp.insert(std::move(v));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& vs : component_vertex_sets(g)) out.push_back(g.induced(vs));
  return out;
}

bool is_connected(const Graph& g) { return component_vertex_sets(g).size() <= 1; }

namespace {

struct ComponentShape {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
};

std::vector<ComponentShape> shapes(const Graph& g) {
  std::vector<ComponentShape> out;
  for (const auto& comp : component_vertex_sets(g)) {
    ComponentShape s;
    s.n = comp.size();
    s.min_degree = SIZE_MAX;
    std::size_t degree_sum = 0;
    for (const auto& v : comp) {
      const std::size_t d = g.degree(v);
      degree_sum += d;
      s.max_degree = std::max(s.max_degree, d);
      s.min_degree = std::min(s.min_degree, d);
    }
    s.m = degree_sum / 2;
    out.push_back(s);
  }
  return out;
}

}  // namespace

bool is_constellation(const Graph& g) {
  for (const auto& s : shapes(g)) {
    if (s.n <= 2) continue;
    // a tree whose centre sees every other vertex
    if (s.m != s.n - 1 || s.max_degree != s.n - 1) return false;
  }
  return true;
}

bool is_cycle_graph(const Graph& g) {
  for (const auto& s : shapes(g))
    if (s.n < 3 || s.min_degree != 2 || s.max_degree != 2) return false;
  return true;
}

bool is_linear_forest(const Graph& g, PathPolicy policy) {
  for (const auto& s : shapes(g)) {
    if (s.n == 1 && policy == PathPolicy::Strict) return false;
    if (s.m != s.n - 1 || s.max_degree > 2) return false;
  }
  return true;
}

std::optional<Bipartition> two_coloring(const Graph& g) {
  std::map<VertexId, int> color;
  for (const auto& [start, _] : g.adjacency()) {
    if (color.count(start)) continue;
    color[start] = 0;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId v = std::move(queue.front());
      queue.pop_front();
      const int cv = color.at(v);
      for (const auto& w : g.neighbors(v)) {
        auto [it, inserted] = color.emplace(w, 1 - cv);
        if (inserted)
          queue.push_back(w);
        else if (it->second == cv)
          return std::nullopt;
      }
    }
  }
  Bipartition out;
  for (const auto& [v, c] : color) (c == 0 ? out.first : out.second).insert(v);
  return out;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

bool check_membership(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::Constellation: return is_constellation(g);
    case GraphClass::CycleGraph: return is_cycle_graph(g);
    case GraphClass::LinearForest: return is_linear_forest(g);
    case GraphClass::Bipartite: return is_bipartite(g);
  }
  return false;
}

}  // namespace vsplit
