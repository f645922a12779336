#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "vsplit/graph.hpp"

namespace vsplit::gen {

// Seeded source whose draws are identical on every platform (the standard
// distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  double unit();                             // uniform in [0, 1)
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Vertices are named "v0" .. "v{n-1}".
VertexId vertex_name(std::size_t i);

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t n);  // K_{1,n-1} centred at v0
Graph path(std::size_t n);
Graph gnp(std::size_t n, double p, std::uint64_t seed);

// Symmetric difference of a Hamiltonian cycle and `cycles - 1` further random
// cycles, with isolated vertices removed. Every degree is even and the
// result always has edges.
Graph even_union_of_cycles(std::size_t n, std::size_t cycles, std::uint64_t seed);

// Random bipartite graph with cross edges kept at probability p, plus `noise`
// edges inside the sides; the odd cycle transversal is at most `noise`.
Graph bipartite_plus_noise(std::size_t n, double p, std::size_t noise, std::uint64_t seed);

}  // namespace vsplit::gen
