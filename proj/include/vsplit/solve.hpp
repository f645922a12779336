#pragma once

#include <cstddef>
#include <cstdint>

#include "vsplit/graph.hpp"
#include "vsplit/membership.hpp"
#include "vsplit/solve_result.hpp"
#include "vsplit/split.hpp"

namespace vsplit {

struct SolveOptions {
  std::uint64_t vc_node_limit = 100'000'000;  // constellation
  std::size_t odd_cap = 20;                   // cycle graph, inclusive
  std::size_t oct_max_k = 12;                 // bipartite
};

// Minimum number of splits turning `g` into a member of `c`, with certificate.
SolveResult solve(const Graph& g, GraphClass c, Variant variant, const SolveOptions& options = {});

}  // namespace vsplit
