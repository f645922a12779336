#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "vsplit/decomposition.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/solve_result.hpp"
#include "vsplit/split.hpp"
#include "vsplit/verify.hpp"

namespace vsplit::io {

using nlohmann::json;

// {"vertices": [...], "edges": [[u, v], ...]}. "vertices" may be omitted;
// numeric ids are read as their decimal text. Throws ParseError, InvalidGraph.
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"base": graph, "steps": [{"target", "side_a", "side_b", "variant"}]}; the
// descendant ids are written only when they differ from "v#1"/"v#2".
json to_json(const SplitRecord& r);
json to_json(const SplitSequence& s);
SplitRecord split_from_json(const json& j);
SplitSequence certificate_from_json(const json& j);

// {"family": "stars"|"cycles", "parts": [[[u, v], ...], ...]}; the host is
// supplied separately.
json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Graph& host, const json& j);

json to_json(const SolveResult& r);
json to_json(const verify::CheckReport& r);

// One "u v" per line, or "u" for a vertex; blank lines are skipped.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g);

// JSON when the first non-blank character is '{', edge list otherwise.
Graph parse_graph(std::string_view text);

std::string read_file(const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);

// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace vsplit::io
