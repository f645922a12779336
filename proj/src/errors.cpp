#include "vsplit/errors.hpp"

namespace vsplit {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::CoverageViolation: return "CoverageViolation";
    case Errc::OverlapViolation: return "OverlapViolation";
    case Errc::DuplicateDescendantId: return "DuplicateDescendantId";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::ParseError: return "ParseError";
    case Errc::EdgeNotCovered: return "EdgeNotCovered";
    case Errc::EdgeCoveredTwice: return "EdgeCoveredTwice";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::PartNotConnected: return "PartNotConnected";
    case Errc::PartNotInFamily: return "PartNotInFamily";
    case Errc::IsolatedVertexInHost: return "IsolatedVertexInHost";
    case Errc::NotACover: return "NotACover";
    case Errc::InconsistentSplit: return "InconsistentSplit";
    case Errc::OddDegreeVertex: return "OddDegreeVertex";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NoEdges: return "NoEdges";
    case Errc::TooManyOddVertices: return "TooManyOddVertices";
    case Errc::WalkInvalid: return "WalkInvalid";
    case Errc::WalkTooShort: return "WalkTooShort";
    case Errc::CoverageGap: return "CoverageGap";
    case Errc::InvalidSequence: return "InvalidSequence";
    case Errc::InvalidOct: return "InvalidOct";
    case Errc::FinalGraphNotBipartite: return "FinalGraphNotBipartite";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::StateBudgetExceeded: return "StateBudgetExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {
std::string decorate(Errc code, const std::string& what, std::optional<std::size_t> step) {
  std::string out{to_string(code)};
  if (step) out += " at step " + std::to_string(*step + 1);
  if (!what.empty()) out += ": " + what;
  return out;
}
}  // namespace

Error::Error(Errc code, const std::string& what, std::optional<std::size_t> step)
    : std::runtime_error(decorate(code, what, step)), code_(code), detail_(what), step_(step) {}

}  // namespace vsplit
