#pragma once

#include <cstddef>
#include <vector>

#include "vsplit/decomposition.hpp"
#include "vsplit/euler.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/solve_result.hpp"
#include "vsplit/split.hpp"

namespace vsplit::cycle {

// Edge-disjoint cycles covering every edge; each cycle is listed as its cyclic
// vertex order.
struct CycleDecomposition {
  std::vector<std::vector<VertexId>> cycles;
};

// Peels cycles by walking from the smallest vertex with unused edges along the
// smallest unused neighbour until a vertex repeats.
// Throws IsolatedVertex or OddDegreeVertex.
CycleDecomposition cycle_decomposition(const Graph& g);

Decomposition to_decomposition(const Graph& g, const CycleDecomposition& cd);

struct PostmanOptions {
  // Upper bound on odd-degree vertices handled by the matching table.
  std::size_t odd_cap = 20;
};

/// Shortest closed walk using every edge of a connected graph at least once.
///
/// Odd-degree vertices are paired by an exact minimum-weight perfect matching
/// (dynamic programming over subsets, BFS distances as weights); the matched
/// shortest paths are duplicated and an Euler circuit of the result is taken
/// from the smallest vertex. Length is m plus the matching weight.
/// Throws Disconnected, NoEdges, TooManyOddVertices.
ClosedWalk chinese_postman(const Graph& component, const PostmanOptions& options = {});

// Minimum total BFS-distance pairing of `odd` (even count, at most odd_cap entries).
// Returns pairs as indices into `odd` and the total weight.
struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t weight = 0;
};
Pairing min_weight_pairing(const std::vector<std::vector<std::size_t>>& dist);

/// Opens a closed walk into one simple cycle of |W| vertices using exactly
/// |W| - |V| splits.
///
/// Walk occurrences are processed in order. An occurrence whose current copy
/// still carries more than two traversal edges is split: the new copy takes
/// the traversal edge back to the previous occurrence and the one forward to
/// the next, the remainder keeps everything else. Splits are exclusive on the
/// traversal multigraph; on the simple graph a neighbour that both copies keep
/// makes the record inclusive.
/// Throws WalkInvalid, WalkTooShort.
SplitSequence walk_to_cycle(const Graph& component, const ClosedWalk& walk);

// Same as walk_to_cycle but applies the splits to `state`, which must contain
// the component, so descendant ids stay fresh across the whole graph.
std::vector<SplitRecord> open_walk(Graph& state, const Graph& component, const ClosedWalk& walk);

// Euler circuit of the multigraph holding one parallel copy per traversal of
// every input walk. Throws WalkInvalid, CoverageGap, Disconnected.
ClosedWalk merge_closed_walks(const Graph& component, const std::vector<ClosedWalk>& walks);

// Exclusive variant: infeasible unless every degree is even and positive; then
// exactly m - n splits derived from a cycle decomposition.
SolveResult solve_evs(const Graph& g);

// Inclusive variant: per component, postman walk length minus component order
// (a lone edge needs a walk of length 4).
SolveResult solve_ivs(const Graph& g, const PostmanOptions& options = {});

}  // namespace vsplit::cycle
