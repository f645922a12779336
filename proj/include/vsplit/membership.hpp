#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "vsplit/graph.hpp"

namespace vsplit {

enum class GraphClass { Constellation, CycleGraph, LinearForest, Bipartite };

std::string_view to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(std::string_view text);

// Linear forests accept K1 components by default; the strict form requires
// every component to have at least one edge.
enum class PathPolicy { Lenient, Strict };

bool check_membership(const Graph& g, GraphClass c);

bool is_constellation(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool is_linear_forest(const Graph& g, PathPolicy policy = PathPolicy::Lenient);
bool is_bipartite(const Graph& g);

struct Bipartition {
  VertexSet first;
  VertexSet second;
};

// BFS 2-colouring; each component's smallest vertex goes to `first`.
std::optional<Bipartition> two_coloring(const Graph& g);

// Components ordered by their lexicographically smallest vertex.
std::vector<VertexSet> component_vertex_sets(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace vsplit
