#include "vsplit/io.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include "vsplit/errors.hpp"

namespace vsplit::io {
namespace {

VertexId read_id(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(Errc::ParseError, "vertex id must be a string or integer, got " + j.dump());
}

std::vector<VertexId> read_ids(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array");
  std::vector<VertexId> out;
  for (const auto& x : j) out.push_back(read_id(x));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw Error(Errc::ParseError, "expected an object holding \"" + std::string(key) + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::ParseError, "missing field \"" + std::string(key) + "\"");
  return *it;
}

std::vector<std::pair<VertexId, VertexId>> read_edges(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "\"edges\" must be an array");
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "edge must be a pair, got " + e.dump());
    out.emplace_back(read_id(e[0]), read_id(e[1]));
  }
  return out;
}

json edge_pairs(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

json to_json(const Graph& g) { return {{"vertices", g.vertices()}, {"edges", edge_pairs(g.edges())}}; }

Graph graph_from_json(const json& j) {
  std::vector<VertexId> vertices;
  if (j.is_object() && j.contains("vertices")) vertices = read_ids(j["vertices"], "\"vertices\"");
  return Graph::from_edges(read_edges(field(j, "edges")), vertices);
}

json to_json(const SplitRecord& r) {
  json out{{"target", r.target}, {"side_a", r.side_a}, {"side_b", r.side_b}, {"variant", to_string(r.variant)}};
  const auto [da, db] = default_descendant_ids(r.target);
  if (r.descendant_a != da || r.descendant_b != db) {
    out["descendant_a"] = r.descendant_a;
    out["descendant_b"] = r.descendant_b;
  }
  return out;
}

json to_json(const SplitSequence& s) {
  json steps = json::array();
  for (const auto& r : s.steps) steps.push_back(to_json(r));
  return {{"base", to_json(s.base)}, {"steps", steps}};
}

SplitRecord split_from_json(const json& j) {
  const VertexId target = read_id(field(j, "target"));
  const auto& vtext = field(j, "variant");
  const auto variant = vtext.is_string() ? parse_variant(vtext.get<std::string>()) : std::nullopt;
  if (!variant) throw Error(Errc::ParseError, "variant must be \"inclusive\" or \"exclusive\"");
  SplitRecord r = make_split(target, read_ids(field(j, "side_a"), "\"side_a\""),
                             read_ids(field(j, "side_b"), "\"side_b\""), *variant);
  if (j.contains("descendant_a")) r.descendant_a = read_id(j["descendant_a"]);
  if (j.contains("descendant_b")) r.descendant_b = read_id(j["descendant_b"]);
  return r;
}

SplitSequence certificate_from_json(const json& j) {
  SplitSequence s{graph_from_json(field(j, "base")), {}};
  const auto& steps = field(j, "steps");
  if (!steps.is_array()) throw Error(Errc::ParseError, "\"steps\" must be an array");
  for (const auto& step : steps) s.steps.push_back(split_from_json(step));
  return s;
}

json to_json(const Decomposition& d) {
  json parts = json::array();
  for (const auto& p : d.parts) parts.push_back(edge_pairs(p));
  return {{"family", to_string(d.family)}, {"parts", parts}};
}

Decomposition decomposition_from_json(const Graph& host, const json& j) {
  const auto& ftext = field(j, "family");
  const auto family = ftext.is_string() ? parse_family(ftext.get<std::string>()) : std::nullopt;
  if (!family) throw Error(Errc::ParseError, "family must be \"stars\" or \"cycles\"");
  Decomposition d{host, {}, *family};
  const auto& parts = field(j, "parts");
  if (!parts.is_array()) throw Error(Errc::ParseError, "\"parts\" must be an array");
  for (const auto& p : parts) {
    EdgePart part;
    for (const auto& [u, v] : read_edges(p)) part.emplace_back(u, v);
    d.parts.push_back(std::move(part));
  }
  return d;
}

json to_json(const SolveResult& r) {
  json out{{"class", to_string(r.graph_class)},
           {"variant", to_string(r.variant)},
           {"feasible", r.feasible},
           {"certificate", to_json(r.certificate)},
           {"provenance", r.provenance}};
  if (r.min_splits) out["min_splits"] = *r.min_splits;
  if (!r.isolated.empty()) out["isolated"] = r.isolated;
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

json to_json(const verify::CheckReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"step", v.step}, {"kind", verify::to_string(v.kind)}, {"message", v.message}});
  return {{"valid", r.valid},
          {"steps_checked", r.steps_checked},
          {"violations", violations},
          {"warnings", r.warnings},
          {"final_class_membership", r.final_class_membership}};
}

Graph parse_edge_list(std::string_view text) {
  Graph g;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() > 2)
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected \"u v\" or \"u\"");
    g.add_vertex(tokens[0]);
    if (tokens.size() == 2) {
      g.add_vertex(tokens[1]);
      try {
        g.add_edge(tokens[0], tokens[1]);
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.detail());
      }
    }
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& v : g.isolated_vertices()) out += v + "\n";
  for (const auto& e : g.edges()) out += e.u + " " + e.v + "\n";
  return out;
}

std::string to_dot(const Graph& g) {
  auto quote = [](const std::string& s) { return json(s).dump(); };
  std::string out = "graph G {\n";
  for (const auto& v : g.vertices()) out += "  " + quote(v) + ";\n";
  for (const auto& e : g.edges()) out += "  " + quote(e.u) + " -- " + quote(e.v) + ";\n";
  return out + "}\n";
}

Graph parse_graph(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(Errc::ParseError, e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

json read_json_file(const std::filesystem::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, "'" + path.string() + "': " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out.flush()) throw Error(Errc::InvalidArgument, "write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace vsplit::io
