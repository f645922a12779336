#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vsplit/decomposition.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/solve_result.hpp"
#include "vsplit/split.hpp"

namespace vsplit::constellation {

struct VertexCoverResult {
  VertexSet cover;
  std::size_t size = 0;
  bool optimal = false;
};

struct VcOptions {
  // Search nodes allowed across all branch-and-reduce calls of one solve.
  std::uint64_t node_limit = 100'000'000;
};

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

/// Minimum vertex cover by branch and reduce.
///
/// Degree-0 vertices are dropped and degree-1 vertices force their neighbour;
/// otherwise the search branches on a maximum-degree vertex (take it, or take
/// all of its neighbours) under an iteratively deepened budget. Among minimum
/// covers the lexicographically least sorted one is returned.
/// Throws BudgetExceeded when the node limit is hit.
VertexCoverResult exact_vertex_cover(const Graph& g, const VcOptions& options = {});

// Part i holds the edges from cover[i] to neighbours not among cover[0..i-1];
// empty parts are dropped. Throws NotACover, IsolatedVertexInHost.
Decomposition vc_to_star_decomposition(const Graph& g, const std::vector<VertexId>& cover);

// Centre of a star part; a single edge is centred at its smaller endpoint.
VertexId star_center(const EdgePart& part);

// The set of star centres of a validated star decomposition.
VertexCoverResult star_decomposition_to_vc(const Decomposition& d);

/// Pulls a star decomposition of `g_split` back through the split `r` that
/// produced it: both descendants are identified with `r.target`, and an edge
/// that several parts now share stays in the first of them. The result is a
/// star decomposition of `g` whose weight does not exceed that of `d_split`.
/// Throws InconsistentSplit when apply_split(g, r) != g_split.
Decomposition merge_star_decomposition_through_split(const Graph& g, const Graph& g_split,
                                                     const SplitRecord& r, const Decomposition& d_split);

// Minimum splits to a constellation: m + |minimum vertex cover| - n over the
// graph without isolated vertices. Identical for both variants; the
// certificate only uses exclusive splits.
SolveResult solve_constellation(const Graph& g, Variant variant, const VcOptions& options = {});

}  // namespace vsplit::constellation
