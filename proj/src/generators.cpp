#include "vsplit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "vsplit/errors.hpp"

namespace vsplit::gen {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::InvalidArgument, "empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

VertexId vertex_name(std::size_t i) { return "v" + std::to_string(i); }

namespace {

Graph empty_on(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(vertex_name(i));
  return g;
}

template <typename T>
void shuffle(std::vector<T>& xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidArgument, "probability must lie in [0, 1]");
}

}  // namespace

Graph complete(std::size_t n) {
  Graph g = empty_on(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(vertex_name(i), vertex_name(j));
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "a cycle needs at least 3 vertices");
  Graph g = empty_on(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(vertex_name(i), vertex_name((i + 1) % n));
  return g;
}

Graph star(std::size_t n) {
  Graph g = empty_on(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(vertex_name(0), vertex_name(i));
  return g;
}

Graph path(std::size_t n) {
  Graph g = empty_on(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(vertex_name(i - 1), vertex_name(i));
  return g;
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  Graph g = empty_on(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(p)) g.add_edge(vertex_name(i), vertex_name(j));
  return g;
}

Graph even_union_of_cycles(std::size_t n, std::size_t cycles, std::uint64_t seed) {
  if (n < 3) throw Error(Errc::InvalidArgument, "need at least 3 vertices");
  if (cycles < 1) throw Error(Errc::InvalidArgument, "need at least one cycle");
  Rng rng(seed);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  auto toggle_cycle = [&](const std::vector<std::size_t>& order) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto a = order[i], b = order[(i + 1) % order.size()];
      if (a > b) std::swap(a, b);
      if (!edges.erase({a, b})) edges.insert({a, b});
    }
  };

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  shuffle(all, rng);
  toggle_cycle(all);
  for (std::size_t c = 1; c < cycles; ++c) {
    // A cycle that cancels every remaining edge is redrawn a few times, then skipped.
    for (int attempt = 0; attempt < 8; ++attempt) {
      shuffle(all, rng);
      const std::size_t len = 3 + rng.below(n - 2);
      const std::vector<std::size_t> order(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(len));
      toggle_cycle(order);
      if (!edges.empty()) break;
      toggle_cycle(order);
    }
  }

  Graph g;
  for (const auto& [a, b] : edges) {
    g.add_vertex(vertex_name(a));
    g.add_vertex(vertex_name(b));
    g.add_edge(vertex_name(a), vertex_name(b));
  }
  return g;
}

Graph bipartite_plus_noise(std::size_t n, double p, std::size_t noise, std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  Graph g = empty_on(n);
  std::vector<int> side(n);
  for (auto& s : side) s = static_cast<int>(rng.below(2));
  std::vector<std::pair<std::size_t, std::size_t>> inside;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (side[i] != side[j]) {
        if (rng.chance(p)) g.add_edge(vertex_name(i), vertex_name(j));
      } else {
        inside.emplace_back(i, j);
      }
    }
  shuffle(inside, rng);
  if (noise > inside.size()) throw Error(Errc::InvalidArgument, "more noise edges than same-side pairs");
  for (std::size_t k = 0; k < noise; ++k) g.add_edge(vertex_name(inside[k].first), vertex_name(inside[k].second));
  return g;
}

}  // namespace vsplit::gen
