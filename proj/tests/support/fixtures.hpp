#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vsplit/graph.hpp"

namespace fixtures {

using vsplit::Graph;

Graph edge();      // x-y
Graph p3();        // a-b-c
Graph path(int n);  // a-b-c-...
Graph triangle();  // a b c
Graph cycle(int n);
Graph complete(int n);
Graph k13();       // centre c, leaves x y z
Graph bowtie();    // triangles abc, cde
Graph petersen();
Graph four_triangles();  // triangles xab, xyu, bdu, efu on 8 vertices

// Connected graphs on exactly n vertices (letters a, b, ...), one per
// isomorphism class, found by trying every relabelling.
std::vector<Graph> connected_graphs(int n);
std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only = false);

// Every graph on vertices a, b, ... with the given edge mask over pairs (i<j)
// in lexicographic order.
Graph from_mask(int n, std::uint32_t mask);

// Independent oracles, all by plain enumeration.
std::size_t min_vertex_cover(const Graph& g);  // any size up to 64 vertices
std::size_t min_oct_by_subsets(const Graph& g, std::size_t cap);  // returns cap+1 if larger
bool two_colourable_by_search(const Graph& g);

struct ComponentShape {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t odd = 0;
};
std::vector<ComponentShape> component_shapes(const Graph& g);

Graph drop_isolated(const Graph& g);

}  // namespace fixtures
