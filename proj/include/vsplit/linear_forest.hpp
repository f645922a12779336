#pragma once

#include <cstddef>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/solve_result.hpp"
#include "vsplit/split.hpp"

namespace vsplit::linear_forest {

// A trail is its vertex sequence; a closed trail repeats its first vertex at the end.
using Trail = std::vector<VertexId>;

struct TrailCover {
  std::vector<Trail> trails;
  std::size_t alpha = 0;  // odd-degree vertices
  std::size_t mnt = 0;    // max(alpha / 2, 1)
};

/// Fewest edge-disjoint trails covering a connected graph.
///
/// Odd vertices are paired in sorted order by false edges, the augmented
/// multigraph is toured from its smallest vertex, and the tour is cut at the
/// false edges. An Eulerian component yields its closed tour as one trail.
/// Throws NoEdges, Disconnected.
TrailCover min_trail_cover(const Graph& component);

// Turns every trail of every cover into its own path: each occurrence of a
// vertex along a trail becomes a separate descendant. All splits are exclusive.
// `covers` must partition the edges of `g`; isolated vertices are left alone.
SplitSequence trails_to_splits(const Graph& g, const std::vector<TrailCover>& covers);
SplitSequence trails_to_splits(const Graph& component, const TrailCover& tc);

/// Replaces an inclusive sequence by exclusive splits of the same length.
///
/// A simulated graph is replayed alongside. At each step the target keeps only
/// the neighbours it still has there; a neighbour listed on both sides goes to
/// side_a only. The result may leave descendants without neighbours.
/// Throws InvalidSequence if `s` is not valid on `g` or does not end in a
/// linear forest.
SplitSequence exclusivize_sequence(const Graph& g, const SplitSequence& s);

// k = m - n + sum over nontrivial components of max(alpha / 2, 1), the same
// for both variants.
SolveResult solve_linear_forest(const Graph& g, Variant variant);

}  // namespace vsplit::linear_forest
