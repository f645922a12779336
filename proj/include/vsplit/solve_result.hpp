#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vsplit/membership.hpp"
#include "vsplit/split.hpp"

namespace vsplit {

/// Answer of a solver: the minimum number of splits plus a certificate that
/// reaches the target class with exactly that many steps.
struct SolveResult {
  GraphClass graph_class = GraphClass::Constellation;
  Variant variant = Variant::Exclusive;
  bool feasible = false;
  std::optional<std::size_t> min_splits;
  SplitSequence certificate;
  // One tag per certificate step naming the construction that produced it.
  std::vector<std::string> provenance;
  // Isolated input vertices that were set aside before solving.
  std::vector<VertexId> isolated;
  // Why the instance is infeasible, when it is.
  std::string reason;
};

}  // namespace vsplit
