#include "vsplit/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

#include "vsplit/errors.hpp"

namespace vsplit::verify {

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::BaseMismatch: return "BaseMismatch";
    case ViolationKind::UnknownVertex: return "UnknownVertex";
    case ViolationKind::CoverageViolation: return "CoverageViolation";
    case ViolationKind::OverlapViolation: return "OverlapViolation";
    case ViolationKind::DuplicateDescendantId: return "DuplicateDescendantId";
  }
  return "?";
}

namespace {

// The checker deliberately keeps its own adjacency and class tests rather
// than reusing Graph::apply_split or the membership module.
using AdjMap = std::map<VertexId, std::set<VertexId>>;

struct Component {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = SIZE_MAX;
  bool two_colourable = true;
};

std::vector<Component> components_of(const AdjMap& adj) {
  std::vector<Component> out;
  std::map<VertexId, int> side;
  for (const auto& [root, unused] : adj) {
    if (side.count(root)) continue;
    Component c;
    std::vector<VertexId> stack{root};
    side[root] = 0;
    std::size_t degree_sum = 0;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      const auto& ns = adj.at(x);
      ++c.vertices;
      degree_sum += ns.size();
      c.max_degree = std::max(c.max_degree, ns.size());
      c.min_degree = std::min(c.min_degree, ns.size());
      for (const auto& y : ns) {
        auto it = side.find(y);
        if (it == side.end()) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (it->second == side[x]) {
          c.two_colourable = false;
        }
      }
    }
    c.edges = degree_sum / 2;
    out.push_back(c);
  }
  return out;
}

bool in_class(const AdjMap& adj, GraphClass cls) {
  for (const auto& c : components_of(adj)) {
    switch (cls) {
      case GraphClass::Constellation:
        if (c.vertices > 2 && (c.edges + 1 != c.vertices || c.max_degree + 1 != c.vertices)) return false;
        break;
      case GraphClass::CycleGraph:
        if (c.min_degree != 2 || c.max_degree != 2) return false;
        break;
      case GraphClass::LinearForest:
        if (c.max_degree > 2 || c.edges + 1 != c.vertices) return false;
        break;
      case GraphClass::Bipartite:
        if (!c.two_colourable) return false;
        break;
    }
  }
  return true;
}

}  // namespace

CheckReport check_certificate(const Graph& g, const SplitSequence& s, Variant variant, GraphClass c) {
  CheckReport report;
  if (!(s.base == g)) {
    report.violations.push_back({0, ViolationKind::BaseMismatch, "certificate base differs from the input graph"});
    return report;
  }

  AdjMap adj;
  for (const auto& [v, ns] : g.adjacency()) adj[v] = ns;

  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& r = s.steps[i];
    const std::size_t step = i + 1;
    std::vector<Violation> found;
    auto flag = [&](ViolationKind k, std::string msg) { found.push_back({step, k, std::move(msg)}); };

    auto target = adj.find(r.target);
    if (target == adj.end()) {
      flag(ViolationKind::UnknownVertex, "target '" + r.target + "' is not in the current graph");
      report.violations.insert(report.violations.end(), found.begin(), found.end());
      break;
    }
    const std::set<VertexId> nbrs = target->second;

    std::set<VertexId> a, b;
    for (auto [side, out, label] : {std::tuple{&r.side_a, &a, "side_a"}, std::tuple{&r.side_b, &b, "side_b"}}) {
      for (const auto& x : *side) {
        if (!adj.count(x))
          flag(ViolationKind::UnknownVertex, std::string(label) + " names unknown vertex '" + x + "'");
        else if (!nbrs.count(x))
          flag(ViolationKind::CoverageViolation,
               std::string(label) + " names '" + x + "', not a neighbour of '" + r.target + "'");
        if (!out->insert(x).second)
          flag(ViolationKind::CoverageViolation, std::string(label) + " lists '" + x + "' twice");
      }
    }
    for (const auto& x : nbrs)
      if (!a.count(x) && !b.count(x))
        flag(ViolationKind::CoverageViolation, "neighbour '" + x + "' is on neither side");
    if (variant == Variant::Exclusive || r.variant == Variant::Exclusive)
      for (const auto& x : a)
        if (b.count(x)) flag(ViolationKind::OverlapViolation, "'" + x + "' is on both sides");

    if (r.descendant_a.empty() || r.descendant_b.empty() || r.descendant_a == r.descendant_b)
      flag(ViolationKind::DuplicateDescendantId, "descendant ids must be two distinct non-empty names");
    for (const auto* d : {&r.descendant_a, &r.descendant_b})
      if (adj.count(*d)) flag(ViolationKind::DuplicateDescendantId, "descendant '" + *d + "' already exists");

    if (!found.empty()) {
      report.violations.insert(report.violations.end(), found.begin(), found.end());
      break;
    }

    if (a.empty() || b.empty())
      report.warnings.push_back("step " + std::to_string(step) + ": split of '" + r.target +
                                "' leaves a descendant without neighbours");

    for (const auto& x : nbrs) adj[x].erase(r.target);
    adj.erase(r.target);
    adj[r.descendant_a] = a;
    adj[r.descendant_b] = b;
    for (const auto& x : a) adj[x].insert(r.descendant_a);
    for (const auto& x : b) adj[x].insert(r.descendant_b);
    ++report.steps_checked;
  }

  report.final_class_membership = report.violations.empty() && in_class(adj, c);
  report.valid = report.violations.empty() && report.final_class_membership;
  return report;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

using Rows = std::vector<std::uint32_t>;

std::vector<int> refine(const Rows& rows, std::vector<int> colour) {
  const int n = static_cast<int>(rows.size());
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      for (std::uint32_t m = rows[v]; m; m &= m - 1) s.push_back(colour[std::countr_zero(m)]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (const auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    const auto count = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
    if (count(next) == count(colour)) return next;
    colour = std::move(next);
  }
}

bool twins(const Rows& rows, int u, int w) {
  const std::uint32_t bu = 1u << u, bw = 1u << w;
  return (rows[u] & ~bw) == (rows[w] & ~bu);
}

void search(const Rows& rows, std::vector<int> colour, Rows& best, bool& have) {
  colour = refine(rows, std::move(colour));
  const int n = static_cast<int>(rows.size());
  std::vector<int> size(n, 0);
  for (int c : colour) ++size[c];
  int cell = -1;
  for (int c = 0; c < n && cell < 0; ++c)
    if (size[c] > 1) cell = c;

  if (cell < 0) {
    Rows code(n, 0);
    for (int v = 0; v < n; ++v)
      for (std::uint32_t m = rows[v]; m; m &= m - 1) code[colour[v]] |= 1u << colour[std::countr_zero(m)];
    if (!have || code < best) {
      best = std::move(code);
      have = true;
    }
    return;
  }

  std::vector<int> tried;
  for (int v = 0; v < n; ++v) {
    if (colour[v] != cell) continue;
    if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(rows, t, v); })) continue;
    tried.push_back(v);
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) next[x] = 2 * colour[x] + (colour[x] == cell && x != v ? 1 : 0);
    search(rows, std::move(next), best, have);
  }
}

struct RowsHash {
  std::size_t operator()(const Rows& r) const noexcept {
    std::size_t h = r.size();
    for (auto x : r) h = h * 0x9E3779B97F4A7C15ull + x + (h >> 29);
    return h;
  }
};

struct Shape {
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

Shape shape(const Rows& rows) {
  std::size_t twice = 0;
  for (auto r : rows) twice += static_cast<std::size_t>(std::popcount(r));
  return {rows.size(), twice / 2};
}

bool member(const Rows& rows, GraphClass cls) {
  const int n = static_cast<int>(rows.size());
  std::uint32_t seen = 0;
  for (int root = 0; root < n; ++root) {
    if (seen >> root & 1u) continue;
    // Component by repeated neighbourhood expansion; colouring tracked alongside.
    std::uint32_t comp = 1u << root, frontier = comp, even = comp, odd = 0;
    bool parity_ok = true;
    for (int level = 0; frontier; ++level) {
      std::uint32_t next = 0;
      for (std::uint32_t m = frontier; m; m &= m - 1) next |= rows[std::countr_zero(m)];
      std::uint32_t& same = (level % 2 == 0) ? odd : even;
      same |= next;
      frontier = next & ~comp;
      comp |= next;
    }
    if (even & odd) parity_ok = false;
    seen |= comp;

    std::size_t verts = static_cast<std::size_t>(std::popcount(comp)), twice = 0, maxd = 0, mind = SIZE_MAX;
    for (std::uint32_t m = comp; m; m &= m - 1) {
      const auto d = static_cast<std::size_t>(std::popcount(rows[std::countr_zero(m)]));
      twice += d;
      maxd = std::max(maxd, d);
      mind = std::min(mind, d);
    }
    const std::size_t edges = twice / 2;
    switch (cls) {
      case GraphClass::Constellation:
        if (verts > 2 && (edges + 1 != verts || maxd + 1 != verts)) return false;
        break;
      case GraphClass::CycleGraph:
        if (mind != 2 || maxd != 2) return false;
        break;
      case GraphClass::LinearForest:
        if (maxd > 2 || edges + 1 != verts) return false;
        break;
      case GraphClass::Bipartite:
        if (!parity_ok) return false;
        break;
    }
  }
  return true;
}

// Whether a graph of this shape can still reach the class within `remaining`
// further splits. Splits add one vertex and never remove edges.
bool reachable(const Shape& s, GraphClass cls, std::size_t remaining) {
  const std::size_t final_vertices = s.vertices + remaining;
  switch (cls) {
    case GraphClass::Constellation:
    case GraphClass::LinearForest:
      return s.edges == 0 || s.edges + 1 <= final_vertices;
    case GraphClass::CycleGraph:
      return s.edges <= final_vertices;
    case GraphClass::Bipartite:
      return true;
  }
  return true;
}

template <typename Visit>
void for_each_child(const Rows& rows, Variant variant, Visit&& visit) {
  const int n = static_cast<int>(rows.size());
  const std::uint32_t fresh = 1u << n;
  for (int v = 0; v < n; ++v) {
    const std::uint32_t nbrs = rows[v];
    const int d = std::popcount(nbrs);
    if (d < (variant == Variant::Exclusive ? 2 : 1)) continue;
    std::vector<int> list;
    for (std::uint32_t m = nbrs; m; m &= m - 1) list.push_back(std::countr_zero(m));

    auto emit = [&](std::uint32_t a, std::uint32_t b) {
      Rows child = rows;
      child.push_back(b);
      child[v] = a;
      for (int x : list) {
        if (!(a >> x & 1u)) child[x] &= ~(1u << v);
        if (b >> x & 1u) child[x] |= fresh;
      }
      visit(std::move(child));
    };

    if (variant == Variant::Exclusive) {
      // Subsets containing the smallest neighbour give each bipartition once.
      const std::uint32_t low = nbrs & (~nbrs + 1);
      for (std::uint32_t a = (nbrs - 1) & nbrs; ; a = (a - 1) & nbrs) {
        if ((a & low) && a != nbrs) emit(a, nbrs & ~a);
        if (a == 0) break;
      }
    } else {
      std::size_t total = 1;
      for (int i = 0; i < d; ++i) total *= 3;
      for (std::size_t code = 0; code < total; ++code) {
        std::uint32_t a = 0, b = 0;
        std::size_t c = code;
        for (int i = 0; i < d; ++i, c /= 3) {
          const std::uint32_t bit = 1u << list[i];
          if (c % 3 != 1) a |= bit;
          if (c % 3 != 0) b |= bit;
        }
        if (a && b && a <= b) emit(a, b);
      }
    }
  }
}

}  // namespace

std::vector<std::uint32_t> canonical_code(const std::vector<std::uint32_t>& rows) {
  if (rows.size() > 32) throw Error(Errc::InvalidArgument, "canonical form limited to 32 vertices");
  Rows best;
  bool have = false;
  search(rows, std::vector<int>(rows.size(), 0), best, have);
  return best;
}

OracleResult brute_force_min_splits(const Graph& g, GraphClass c, Variant variant, const OracleOptions& options) {
  if (g.order() + options.k_max > 32)
    throw Error(Errc::InvalidArgument, "oracle supports at most 32 vertices after k_max splits");
  const auto names = g.vertices();
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  Rows root(names.size(), 0);
  for (const auto& e : g.edges()) {
    root[index[e.u]] |= 1u << index[e.v];
    root[index[e.v]] |= 1u << index[e.u];
  }

  OracleResult out;
  out.states = 1;
  if (member(root, c)) {
    out.min_splits = 0;
    return out;
  }
  if (!reachable(shape(root), c, options.k_max)) return out;

  std::vector<Rows> frontier{canonical_code(root)};
  for (std::size_t depth = 1; depth <= options.k_max && !frontier.empty(); ++depth) {
    const std::size_t remaining = options.k_max - depth;
    std::unordered_set<Rows, RowsHash> next;
    bool hit = false;
    for (const auto& state : frontier) {
      for_each_child(state, variant, [&](Rows child) {
        if (hit) return;
        if (member(child, c)) {
          hit = true;
          return;
        }
        if (remaining == 0 || !reachable(shape(child), c, remaining)) return;
        if (next.insert(canonical_code(child)).second && out.states + next.size() > options.state_budget)
          throw Error(Errc::StateBudgetExceeded,
                      "oracle exceeded " + std::to_string(options.state_budget) + " states");
      });
      if (hit) {
        out.min_splits = depth;
        out.states += next.size();
        return out;
      }
    }
    out.states += next.size();
    frontier.assign(next.begin(), next.end());
  }
  return out;
}

}  // namespace vsplit::verify
