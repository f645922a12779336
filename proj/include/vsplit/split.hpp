#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "vsplit/graph.hpp"

namespace vsplit {

enum class Variant { Inclusive, Exclusive };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

/// One vertex split: `target` is replaced by `descendant_a` adjacent to
/// `side_a` and `descendant_b` adjacent to `side_b`.
struct SplitRecord {
  VertexId target;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
  Variant variant = Variant::Exclusive;
  VertexId descendant_a;
  VertexId descendant_b;

  bool operator==(const SplitRecord&) const = default;
};

// "v#1" / "v#2".
std::pair<VertexId, VertexId> default_descendant_ids(const VertexId& target);

// Default ids when free in `g`, otherwise the first free "v#2i+1" / "v#2i+2" pair.
std::pair<VertexId, VertexId> fresh_descendant_ids(const Graph& g, const VertexId& target,
                                                   const VertexSet& reserved = {});

SplitRecord make_split(VertexId target, std::vector<VertexId> side_a, std::vector<VertexId> side_b,
                       Variant variant);

// Like make_split but picks descendant ids that are fresh in `g`.
SplitRecord make_split_in(const Graph& g, VertexId target, std::vector<VertexId> side_a,
                          std::vector<VertexId> side_b, Variant variant, const VertexSet& reserved = {});

bool is_empty_sided(const SplitRecord& r);

/// Base graph plus an ordered list of splits applied to it.
struct SplitSequence {
  Graph base;
  std::vector<SplitRecord> steps;

  bool operator==(const SplitSequence&) const = default;
};

// Throws UnknownVertex, CoverageViolation, OverlapViolation, DuplicateDescendantId.
Graph apply_split(const Graph& g, const SplitRecord& r);
void apply_split_in_place(Graph& g, const SplitRecord& r);

// Errors from individual steps are rethrown with the step index attached.
Graph apply_sequence(const SplitSequence& s);

// Every vertex that ever exists in the sequence mapped to its ancestor in `base`.
std::map<VertexId, VertexId> ancestry(const SplitSequence& s);

struct Replay {
  Graph graph;
  std::map<VertexId, VertexId> ancestry;
};
Replay replay(const SplitSequence& s);

}  // namespace vsplit
