#include "vsplit/solve.hpp"

#include "vsplit/bipartite.hpp"
#include "vsplit/constellation.hpp"
#include "vsplit/cycle_graph.hpp"
#include "vsplit/linear_forest.hpp"

namespace vsplit {

SolveResult solve(const Graph& g, GraphClass c, Variant variant, const SolveOptions& options) {
  switch (c) {
    case GraphClass::Constellation:
      return constellation::solve_constellation(g, variant, {options.vc_node_limit});
    case GraphClass::CycleGraph:
      return variant == Variant::Exclusive ? cycle::solve_evs(g) : cycle::solve_ivs(g, {options.odd_cap});
    case GraphClass::LinearForest:
      return linear_forest::solve_linear_forest(g, variant);
    case GraphClass::Bipartite:
      return bipartite::solve_bipartite(g, variant, {options.oct_max_k});
  }
  return {};
}

}  // namespace vsplit
