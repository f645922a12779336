#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/split.hpp"

namespace vsplit {

// The admissible shapes of a decomposition part.
enum class Family { Stars, Cycles };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

using EdgePart = std::vector<Edge>;

/// Partition of `host`'s edges into connected parts of one family. Each part
/// is described by its edge set; its vertices are the edge endpoints.
struct Decomposition {
  Graph host;
  std::vector<EdgePart> parts;
  Family family = Family::Stars;
};

struct WeightReport {
  std::size_t total = 0;
  // Number of parts containing each host vertex.
  std::map<VertexId, std::size_t> per_vertex;
};

VertexSet part_vertices(const EdgePart& part);
bool part_is_connected(const EdgePart& part);
bool part_is_star(const EdgePart& part);
bool part_is_cycle(const EdgePart& part);

// Throws IsolatedVertexInHost, UnknownEdge, EdgeCoveredTwice, EdgeNotCovered,
// PartNotConnected, PartNotInFamily.
WeightReport validate_and_weigh(const Decomposition& d);

struct DesplitOutcome {
  Graph graph;
  Decomposition decomposition;
  SplitRecord record;
};

/// One exclusive split that separates a shared vertex from one of its parts.
///
/// Picks the smallest vertex lying in two or more parts and, among the parts
/// containing it, the one whose smallest edge is smallest. That part keeps the
/// first descendant; every other part containing the vertex is rewired to the
/// second. Weight is unchanged while the vertex count grows by one. Returns
/// nullopt when the parts are already vertex-disjoint.
std::optional<DesplitOutcome> desplit_step(const Decomposition& d, const VertexSet& reserved = {});

// Same construction with the vertex and the retained part chosen by the caller.
// Throws InvalidArgument when `u` is not shared or `part_index` does not contain it.
// `reserved` lists ids descendants must avoid besides the host's own vertices.
DesplitOutcome desplit_at(const Decomposition& d, const VertexId& u, std::size_t part_index,
                          const VertexSet& reserved = {});

// Repeats desplit_step to exhaustion; yields exactly weight - |V(host)| splits.
SplitSequence decomposition_to_splits(const Decomposition& d, const VertexSet& reserved = {});

}  // namespace vsplit
