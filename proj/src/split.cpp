#include "vsplit/split.hpp"

#include <algorithm>

#include "vsplit/errors.hpp"

namespace vsplit {

std::string_view to_string(Variant v) {
  return v == Variant::Inclusive ? "inclusive" : "exclusive";
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "inclusive") return Variant::Inclusive;
  if (text == "exclusive") return Variant::Exclusive;
  return std::nullopt;
}

std::pair<VertexId, VertexId> default_descendant_ids(const VertexId& target) {
  return {target + "#1", target + "#2"};
}

std::pair<VertexId, VertexId> fresh_descendant_ids(const Graph& g, const VertexId& target,
                                                   const VertexSet& reserved) {
  auto taken = [&](const VertexId& x) { return g.has_vertex(x) || reserved.count(x) != 0; };
  for (int i = 1;; i += 2) {
    VertexId a = target + "#" + std::to_string(i);
    VertexId b = target + "#" + std::to_string(i + 1);
    if (!taken(a) && !taken(b)) return {std::move(a), std::move(b)};
  }
}

SplitRecord make_split(VertexId target, std::vector<VertexId> side_a, std::vector<VertexId> side_b,
                       Variant variant) {
  auto [da, db] = default_descendant_ids(target);
  return SplitRecord{std::move(target), std::move(side_a), std::move(side_b), variant,
                     std::move(da), std::move(db)};
}

SplitRecord make_split_in(const Graph& g, VertexId target, std::vector<VertexId> side_a,
                          std::vector<VertexId> side_b, Variant variant, const VertexSet& reserved) {
  auto [da, db] = fresh_descendant_ids(g, target, reserved);
  return SplitRecord{std::move(target), std::move(side_a), std::move(side_b), variant,
                     std::move(da), std::move(db)};
}

bool is_empty_sided(const SplitRecord& r) { return r.side_a.empty() || r.side_b.empty(); }

namespace {

VertexSet to_set_checked(const std::vector<VertexId>& side, const VertexSet& nbrs,
                         const VertexId& target, const char* label) {
  VertexSet out;
  for (const auto& x : side) {
    if (!nbrs.count(x))
      throw Error(Errc::CoverageViolation,
                  "'" + x + "' in " + label + " is not a neighbour of '" + target + "'");
    if (!out.insert(x).second)
      throw Error(Errc::CoverageViolation, "'" + x + "' listed twice in " + label);
  }
  return out;
}

}  // namespace

void apply_split_in_place(Graph& g, const SplitRecord& r) {
  if (!g.has_vertex(r.target)) throw Error(Errc::UnknownVertex, "split target '" + r.target + "'");
  const VertexSet nbrs = g.neighbors(r.target);
  const VertexSet a = to_set_checked(r.side_a, nbrs, r.target, "side_a");
  const VertexSet b = to_set_checked(r.side_b, nbrs, r.target, "side_b");
  for (const auto& x : nbrs)
    if (!a.count(x) && !b.count(x))
      throw Error(Errc::CoverageViolation,
                  "neighbour '" + x + "' of '" + r.target + "' assigned to neither side");
  if (r.variant == Variant::Exclusive) {
    for (const auto& x : a)
      if (b.count(x))
        throw Error(Errc::OverlapViolation,
                    "'" + x + "' on both sides of exclusive split of '" + r.target + "'");
  }
  if (r.descendant_a.empty() || r.descendant_b.empty() || r.descendant_a == r.descendant_b)
    throw Error(Errc::DuplicateDescendantId, "descendants of '" + r.target + "' must be distinct");
  for (const auto* d : {&r.descendant_a, &r.descendant_b})
    if (g.has_vertex(*d)) throw Error(Errc::DuplicateDescendantId, "'" + *d + "' already exists");

  g.remove_vertex(r.target);
  g.add_vertex(r.descendant_a);
  g.add_vertex(r.descendant_b);
  for (const auto& x : a) g.add_edge(r.descendant_a, x);
  for (const auto& x : b) g.add_edge(r.descendant_b, x);
}

Graph apply_split(const Graph& g, const SplitRecord& r) {
  Graph out = g;
  apply_split_in_place(out, r);
  return out;
}

Replay replay(const SplitSequence& s) {
  Replay out{s.base, {}};
  for (const auto& v : s.base.vertices()) out.ancestry.emplace(v, v);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& r = s.steps[i];
    try {
      apply_split_in_place(out.graph, r);
    } catch (const Error& e) {
      throw Error(e.code(), e.detail(), i);
    }
    const VertexId root = out.ancestry.at(r.target);
    out.ancestry[r.descendant_a] = root;
    out.ancestry[r.descendant_b] = root;
  }
  return out;
}

Graph apply_sequence(const SplitSequence& s) { return replay(s).graph; }

std::map<VertexId, VertexId> ancestry(const SplitSequence& s) { return replay(s).ancestry; }

}  // namespace vsplit
