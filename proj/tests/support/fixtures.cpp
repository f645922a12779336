#include "fixtures.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace fixtures {

namespace {

std::string letter(int i) { return std::string(1, static_cast<char>('a' + i)); }

Graph build(const std::vector<std::pair<std::string, std::string>>& es) { return Graph::from_edges(es); }

}  // namespace

Graph edge() { return build({{"x", "y"}}); }
Graph p3() { return build({{"a", "b"}, {"b", "c"}}); }
Graph triangle() { return build({{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

Graph path(int n) {
  Graph g;
  g.add_vertex(letter(0));
  for (int i = 1; i < n; ++i) {
    g.add_vertex(letter(i));
    g.add_edge(letter(i - 1), letter(i));
  }
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(letter(n - 1), letter(0));
  return g;
}

Graph complete(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(letter(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(letter(i), letter(j));
  return g;
}

Graph k13() { return build({{"c", "x"}, {"c", "y"}, {"c", "z"}}); }
Graph bowtie() { return build({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}, {"e", "c"}}); }

Graph petersen() {
  std::vector<std::pair<std::string, std::string>> es;
  auto o = [](int i) { return "o" + std::to_string(i); };
  auto in = [](int i) { return "i" + std::to_string(i); };
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(o(i), o((i + 1) % 5));
    es.emplace_back(in(i), in((i + 2) % 5));
    es.emplace_back(o(i), in(i));
  }
  return build(es);
}

Graph four_triangles() {
  return build({{"x", "a"}, {"a", "b"}, {"b", "x"}, {"x", "y"}, {"y", "u"}, {"u", "x"},
                {"b", "d"}, {"d", "u"}, {"u", "b"}, {"e", "u"}, {"u", "f"}, {"f", "e"}});
}

Graph from_mask(int n, std::uint32_t mask) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(letter(i));
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1u) g.add_edge(letter(i), letter(j));
  return g;
}

std::vector<Graph> connected_graphs(int n) { return graphs_up_to_isomorphism(n, true); }

std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::map<std::pair<int, int>, int> bit_of;
  for (std::size_t b = 0; b < pairs.size(); ++b) bit_of[pairs[b]] = static_cast<int>(b);

  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    // connectivity by flood fill over the mask
    std::uint32_t reach = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (!(mask >> b & 1u)) continue;
        const auto [i, j] = pairs[b];
        const bool hi = reach >> i & 1u, hj = reach >> j & 1u;
        if (hi != hj) {
          reach |= (1u << i) | (1u << j);
          grew = true;
        }
      }
    }
    if (connected_only && reach != (1u << n) - 1) continue;
    std::uint32_t canon = UINT32_MAX;
    for (const auto& q : perms) {
      std::uint32_t m = 0;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (!(mask >> b & 1u)) continue;
        int i = q[pairs[b].first], j = q[pairs[b].second];
        if (i > j) std::swap(i, j);
        m |= 1u << bit_of[{i, j}];
      }
      canon = std::min(canon, m);
    }
    if (seen.insert(canon).second) out.push_back(from_mask(n, canon));
  }
  return out;
}

namespace {

struct Indexed {
  std::vector<std::string> names;
  std::vector<std::uint64_t> adj;
};

Indexed index_graph(const Graph& g) {
  Indexed ix;
  ix.names = g.vertices();
  std::map<std::string, int> at;
  for (std::size_t i = 0; i < ix.names.size(); ++i) at[ix.names[i]] = static_cast<int>(i);
  ix.adj.assign(ix.names.size(), 0);
  for (const auto& e : g.edges()) {
    ix.adj[at[e.u]] |= std::uint64_t{1} << at[e.v];
    ix.adj[at[e.v]] |= std::uint64_t{1} << at[e.u];
  }
  return ix;
}

// Largest independent set inside `candidates`, by include/exclude branching.
int max_independent(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int taken, int& best) {
  if (candidates == 0) {
    best = std::max(best, taken);
    return best;
  }
  if (taken + std::popcount(candidates) <= best) return best;
  const int v = std::countr_zero(candidates);
  const std::uint64_t rest = candidates & ~(std::uint64_t{1} << v);
  max_independent(adj, rest & ~adj[v], taken + 1, best);
  if (adj[v] & rest) max_independent(adj, rest, taken, best);
  return best;
}

bool bipartite_masked(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
  std::uint64_t coloured = 0, side = 0;
  for (int root = 0; root < static_cast<int>(adj.size()); ++root) {
    if (!(alive >> root & 1u) || (coloured >> root & 1u)) continue;
    std::vector<int> stack{root};
    coloured |= std::uint64_t{1} << root;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      const bool sx = side >> x & 1u;
      for (std::uint64_t m = adj[x] & alive; m; m &= m - 1) {
        const int y = std::countr_zero(m);
        if (coloured >> y & 1u) {
          if (static_cast<bool>(side >> y & 1u) == sx) return false;
        } else {
          coloured |= std::uint64_t{1} << y;
          if (!sx) side |= std::uint64_t{1} << y;
          stack.push_back(y);
        }
      }
    }
  }
  return true;
}

bool some_subset(const std::vector<std::uint64_t>& adj, std::uint64_t all, int start, std::size_t left,
                 std::uint64_t removed) {
  if (left == 0) return bipartite_masked(adj, all & ~removed);
  if (bipartite_masked(adj, all & ~removed)) return true;
  for (int v = start; v < static_cast<int>(adj.size()); ++v)
    if (some_subset(adj, all, v + 1, left - 1, removed | (std::uint64_t{1} << v))) return true;
  return false;
}

}  // namespace

std::size_t min_vertex_cover(const Graph& g) {
  const auto ix = index_graph(g);
  const int n = static_cast<int>(ix.names.size());
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  int best = 0;
  max_independent(ix.adj, all, 0, best);
  return static_cast<std::size_t>(n - best);
}

std::size_t min_oct_by_subsets(const Graph& g, std::size_t cap) {
  const auto ix = index_graph(g);
  const int n = static_cast<int>(ix.names.size());
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t k = 0; k <= cap; ++k)
    if (some_subset(ix.adj, all, 0, k, 0)) return k;
  return cap + 1;
}

bool two_colourable_by_search(const Graph& g) {
  const auto names = g.vertices();
  const std::size_t n = names.size();
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[names[i]] = i;
  for (std::uint64_t colouring = 0; colouring < (std::uint64_t{1} << n); ++colouring) {
    bool ok = true;
    for (const auto& e : g.edges())
      if ((colouring >> at[e.u] & 1u) == (colouring >> at[e.v] & 1u)) ok = false;
    if (ok) return true;
  }
  return false;
}

std::vector<ComponentShape> component_shapes(const Graph& g) {
  std::vector<ComponentShape> out;
  std::set<std::string> seen;
  for (const auto& root : g.vertices()) {
    if (seen.count(root)) continue;
    ComponentShape c;
    std::vector<std::string> stack{root};
    seen.insert(root);
    std::size_t degree_sum = 0;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      ++c.vertices;
      const auto& ns = g.neighbors(x);
      degree_sum += ns.size();
      if (ns.size() % 2) ++c.odd;
      for (const auto& y : ns)
        if (seen.insert(y).second) stack.push_back(y);
    }
    c.edges = degree_sum / 2;
    out.push_back(c);
  }
  return out;
}

Graph drop_isolated(const Graph& g) {
  const auto iso = g.isolated_vertices();
  return g.without(std::set<std::string>(iso.begin(), iso.end()));
}

}  // namespace fixtures
