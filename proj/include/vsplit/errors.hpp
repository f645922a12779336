#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vsplit {

enum class Errc {
  // graph-core
  UnknownVertex,
  CoverageViolation,
  OverlapViolation,
  DuplicateDescendantId,
  InvalidGraph,
  ParseError,
  // decomposition
  EdgeNotCovered,
  EdgeCoveredTwice,
  UnknownEdge,
  PartNotConnected,
  PartNotInFamily,
  IsolatedVertexInHost,
  // constellation
  NotACover,
  InconsistentSplit,
  // cycle graph / linear forest
  OddDegreeVertex,
  IsolatedVertex,
  Disconnected,
  NoEdges,
  TooManyOddVertices,
  WalkInvalid,
  WalkTooShort,
  CoverageGap,
  InvalidSequence,
  // bipartite
  InvalidOct,
  FinalGraphNotBipartite,
  // search limits
  BudgetExceeded,
  StateBudgetExceeded,
  InvalidArgument,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> step = std::nullopt);

  Errc code() const noexcept { return code_; }
  // Zero-based index of the failing step when raised while replaying a sequence.
  std::optional<std::size_t> step() const noexcept { return step_; }
  // Message without the code/step decoration.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
  std::optional<std::size_t> step_;
};

}  // namespace vsplit
