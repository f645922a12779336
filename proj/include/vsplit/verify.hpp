#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/membership.hpp"
#include "vsplit/split.hpp"

namespace vsplit::verify {

enum class ViolationKind {
  BaseMismatch,
  UnknownVertex,
  CoverageViolation,
  OverlapViolation,
  DuplicateDescendantId,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  std::size_t step = 0;  // one-based; 0 refers to the base graph
  ViolationKind kind = ViolationKind::CoverageViolation;
  std::string message;
};

struct CheckReport {
  bool valid = false;
  std::size_t steps_checked = 0;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  bool final_class_membership = false;
};

/// Replays `s` on `g` with its own bookkeeping and reports every problem found.
///
/// Each step must name a present target, list each current neighbour on at
/// least one side and nothing else, and introduce two new distinct ids.
/// Overlapping sides are an OverlapViolation when checking the exclusive
/// variant or when the record itself is marked exclusive. Replay stops at the
/// first step with a violation. Empty sides only produce a warning.
CheckReport check_certificate(const Graph& g, const SplitSequence& s, Variant variant, GraphClass c);

struct OracleOptions {
  std::size_t k_max = 4;
  std::size_t state_budget = 5'000'000;
};

struct OracleResult {
  std::optional<std::size_t> min_splits;  // empty when the target needs more than k_max
  std::size_t states = 0;
};

/// Breadth-first search over all graphs reachable by at most k_max splits,
/// memoised on canonical forms. Splits with an empty side are not generated.
/// Throws StateBudgetExceeded, InvalidArgument (more than 32 vertices at depth
/// k_max).
OracleResult brute_force_min_splits(const Graph& g, GraphClass c, Variant variant,
                                    const OracleOptions& options = {});

// Canonical adjacency code of a graph on at most 32 vertices given as bitmask
// rows: equal codes iff isomorphic.
std::vector<std::uint32_t> canonical_code(const std::vector<std::uint32_t>& rows);

}  // namespace vsplit::verify
