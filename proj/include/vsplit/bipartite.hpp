#pragma once

#include <cstddef>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/membership.hpp"
#include "vsplit/solve_result.hpp"
#include "vsplit/split.hpp"

namespace vsplit::bipartite {

struct OctResult {
  std::vector<VertexId> deletion_set;  // sorted
  Bipartition bipartition;             // 2-colouring of the rest
};

struct OctOptions {
  std::size_t max_k = 12;
};

/// Minimum odd cycle transversal.
///
/// Tries budgets 0, 1, 2, ... and at each node branches on the vertices of a
/// shortest odd cycle of what is left. Throws BudgetExceeded past max_k.
OctResult exact_oct(const Graph& g, const OctOptions& options = {});

/// One exclusive split per deletion-set vertex, in order. v_i keeps its V_2
/// neighbours and the not yet split deletion vertices on its first copy, and
/// its V_1 neighbours and the earlier first copies on its second copy.
/// Throws InvalidOct unless `o` is a valid transversal with a proper colouring.
SplitSequence oct_to_splits(const Graph& g, const OctResult& o);

// Distinct base ancestors of all split targets. Throws FinalGraphNotBipartite.
OctResult splits_to_oct(const Graph& g, const SplitSequence& s);

// k = minimum odd cycle transversal size, for both variants.
SolveResult solve_bipartite(const Graph& g, Variant variant, const OctOptions& options = {});

}  // namespace vsplit::bipartite
