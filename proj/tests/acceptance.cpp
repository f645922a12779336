// Acceptance gate: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. All comparisons are exact.

#include <chrono>
#include <algorithm>
#include <cstdio>
#include <map>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "vsplit/bipartite.hpp"
#include "vsplit/constellation.hpp"
#include "vsplit/cycle_graph.hpp"
#include "vsplit/decomposition.hpp"
#include "vsplit/generators.hpp"
#include "vsplit/linear_forest.hpp"
#include "vsplit/membership.hpp"
#include "vsplit/solve.hpp"
#include "vsplit/verify.hpp"

using namespace vsplit;

namespace {

constexpr GraphClass kClasses[] = {GraphClass::Constellation, GraphClass::CycleGraph, GraphClass::LinearForest,
                                   GraphClass::Bipartite};
constexpr Variant kVariants[] = {Variant::Inclusive, Variant::Exclusive};

struct Emitted {
  Graph graph;
  SplitSequence certificate;
  Variant variant;
  GraphClass graph_class;
};

// Every feasible certificate produced below, for the integrity criterion.
std::vector<Emitted> emitted;

SolveResult solve_and_keep(const Graph& g, GraphClass c, Variant v) {
  auto r = solve(g, c, v);
  if (r.feasible) emitted.push_back({g, r.certificate, v, c});
  return r;
}

bool certificate_ok(const Graph& g, const SolveResult& r) {
  return verify::check_certificate(g, r.certificate, r.variant, r.graph_class).valid &&
         r.certificate.steps.size() == *r.min_splits;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

std::string name_of(const Graph& g) {
  std::string s;
  for (const auto& e : g.edges()) s += e.u + e.v + " ";
  return s.empty() ? "(no edges, n=" + std::to_string(g.order()) + ")" : s;
}

void oracle_equivalence(Outcome& o) {
  std::size_t graphs = 0, pairs = 0, agree = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : fixtures::connected_graphs(n)) {
      ++graphs;
      for (auto c : kClasses)
        for (auto v : kVariants) {
          ++pairs;
          const auto r = solve_and_keep(g, c, v);
          const auto want = verify::brute_force_min_splits(g, c, v, {4}).min_splits;
          const bool ok = (r.feasible && *r.min_splits <= 4) ? want == r.min_splits : !want;
          if (ok) ++agree;
          else o.fail(name_of(g) + to_string(c).data() + "/" + to_string(v).data());
        }
    }
  o.detail << graphs << " graphs x 8 class/variant pairs, " << agree << "/" << pairs << " agree with the oracle (k_max 4)";
}

void cycle_exclusive_formula(Outcome& o) {
  std::size_t solved = 0, refused = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 58;
    const Graph g = gen::even_union_of_cycles(n, 1 + seed % 5, seed);
    const auto r = solve_and_keep(g, GraphClass::CycleGraph, Variant::Exclusive);
    if (r.feasible && *r.min_splits == g.size() - g.order() && certificate_ok(g, r)) ++solved;
    else o.fail("seed " + std::to_string(seed));

    Graph odd = g;
    const auto e = g.edges().front();
    odd.remove_edge(e.u, e.v);
    Graph pendant = g;
    pendant.add_vertex("extra");
    pendant.add_edge("extra", e.u);
    if (!solve(odd, GraphClass::CycleGraph, Variant::Exclusive).feasible &&
        !solve(pendant, GraphClass::CycleGraph, Variant::Exclusive).feasible)
      ++refused;
    else
      o.fail("odd-degree variant of seed " + std::to_string(seed) + " was solved");
  }
  o.detail << solved << "/200 even graphs give m-n with valid certificates; " << refused
           << "/200 odd-degree variants (2 each) reported infeasible";
}

void cycle_inclusive_fixed_points(Outcome& o) {
  const std::pair<const char*, std::pair<Graph, std::size_t>> cases[] = {
      {"EDGE", {fixtures::edge(), 2}}, {"P3", {fixtures::p3(), 1}}, {"TRIANGLE", {fixtures::triangle(), 0}},
      {"K4", {fixtures::complete(4), 4}}};
  for (const auto& [name, gk] : cases) {
    const auto& [g, k] = gk;
    const auto r = solve_and_keep(g, GraphClass::CycleGraph, Variant::Inclusive);
    const bool ok = r.feasible && *r.min_splits == k && certificate_ok(g, r);
    o.detail << name << "=" << (r.min_splits ? std::to_string(*r.min_splits) : "none") << (ok ? " " : "(want " + std::to_string(k) + ") ");
    if (!ok) o.fail(name);
  }
}

std::size_t trail_sum(const Graph& g) {
  std::size_t t = 0;
  for (const auto& c : fixtures::component_shapes(g))
    if (c.edges > 0) t += std::max<std::size_t>(c.odd / 2, 1);
  return t;
}

void linear_forest_formula(Outcome& o) {
  const std::pair<const char*, std::pair<Graph, std::size_t>> cases[] = {
      {"TRIANGLE", {fixtures::triangle(), 1}}, {"K1,3", {fixtures::k13(), 1}}, {"K4", {fixtures::complete(4), 4}},
      {"P5", {fixtures::path(5), 0}}};
  for (const auto& [name, gk] : cases) {
    const auto& [g, k] = gk;
    const auto r = solve_and_keep(g, GraphClass::LinearForest, Variant::Exclusive);
    if (*r.min_splits != k || !certificate_ok(g, r)) o.fail(name);
  }
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 59;
    const double p = 0.03 + 0.27 * static_cast<double>(seed % 10) / 9.0;
    const Graph g = fixtures::drop_isolated(gen::gnp(n, p, seed));
    const std::size_t want = g.size() + trail_sum(g) - g.order();
    const auto ex = solve_and_keep(g, GraphClass::LinearForest, Variant::Exclusive);
    const auto in = solve_and_keep(g, GraphClass::LinearForest, Variant::Inclusive);
    const Graph f = apply_sequence(ex.certificate);
    if (*ex.min_splits == want && certificate_ok(g, ex) && certificate_ok(g, in) && *in.min_splits == want &&
        is_linear_forest(f, PathPolicy::Strict) && fixtures::component_shapes(f).size() == trail_sum(g))
      ++ok;
    else
      o.fail("seed " + std::to_string(seed));
  }
  o.detail << "fixed points TRIANGLE=1 K1,3=1 K4=4 P5=0 checked; " << ok
           << "/200 random graphs match m-n+sum max(odd/2,1) with that many paths and equal variants";
}

void constellation_equivalence(Outcome& o) {
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 5 + seed % 26;
    const double p = 0.1 + 0.1 * static_cast<double>(seed % 4);
    const Graph g = fixtures::drop_isolated(gen::gnp(n, p, seed));
    const std::size_t vc = fixtures::min_vertex_cover(g);
    const auto exact = constellation::exact_vertex_cover(g);
    const std::vector<VertexId> order(exact.cover.begin(), exact.cover.end());
    const auto d = constellation::vc_to_star_decomposition(g, order);
    std::size_t weight = 0;
    for (const auto& part : d.parts) weight += part_vertices(part).size();
    const bool a = weight == g.size() + exact.size && exact.size == vc;
    const bool b = constellation::is_vertex_cover(g, constellation::star_decomposition_to_vc(d).cover);
    bool c = true;
    for (auto v : kVariants) {
      const auto r = solve_and_keep(g, GraphClass::Constellation, v);
      c = c && *r.min_splits == g.size() + vc - g.order() && certificate_ok(g, r);
    }
    if (a && b && c) ++ok;
    else o.fail("seed " + std::to_string(seed) + (a ? "" : " (a)") + (b ? "" : " (b)") + (c ? "" : " (c)"));
  }
  const auto tri = verify::brute_force_min_splits(fixtures::triangle(), GraphClass::Constellation, Variant::Exclusive, {4});
  const auto bow = verify::brute_force_min_splits(fixtures::bowtie(), GraphClass::Constellation, Variant::Exclusive, {4});
  const auto tri_s = solve_and_keep(fixtures::triangle(), GraphClass::Constellation, Variant::Exclusive);
  const auto bow_s = solve_and_keep(fixtures::bowtie(), GraphClass::Constellation, Variant::Exclusive);
  const bool d = tri.min_splits == 2u && tri_s.min_splits == 2u && bow.min_splits == 4u && bow_s.min_splits == 4u;
  if (!d) o.fail("(d) TRIANGLE/BOWTIE");
  o.detail << ok << "/100 random graphs satisfy weight = m+|VC|, centres cover, min = m+|VC|-n; TRIANGLE=2 and BOWTIE=4"
           << (d ? " agree with the oracle" : " disagree");
}

void bipartite_equivalence(Outcome& o) {
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 6 + seed % 15;
    const Graph g = gen::bipartite_plus_noise(n, 0.35, seed % 7, seed);
    const std::size_t want = fixtures::min_oct_by_subsets(g, 6);
    bool good = want <= 6;
    for (auto v : kVariants) {
      const auto r = solve_and_keep(g, GraphClass::Bipartite, v);
      good = good && *r.min_splits == want && certificate_ok(g, r);
    }
    // sides of the constructed graph: V_1 + first copies, V_2 + second copies
    const auto oct = bipartite::exact_oct(g);
    const auto s = bipartite::oct_to_splits(g, oct);
    VertexSet left = oct.bipartition.first;
    for (const auto& r : s.steps) left.insert(r.descendant_a);
    VertexSet right = oct.bipartition.second;
    for (const auto& r : s.steps) right.insert(r.descendant_b);
    const Graph f = apply_sequence(s);
    for (const auto& e : f.edges()) good = good && (left.count(e.u) != left.count(e.v));
    good = good && left.size() + right.size() == f.order();
    if (good) ++ok;
    else o.fail("seed " + std::to_string(seed));
  }
  const bool fixed = solve_and_keep(fixtures::cycle(5), GraphClass::Bipartite, Variant::Inclusive).min_splits == 1u &&
                     solve_and_keep(fixtures::complete(4), GraphClass::Bipartite, Variant::Exclusive).min_splits == 2u;
  if (!fixed) o.fail("C5/K4");
  o.detail << ok << "/100 random graphs (OCT <= 6) match subset search in both variants with 2-coloured constructions; C5=1 K4=2"
           << (fixed ? "" : " FAILED");
}

void certificate_integrity(Outcome& o) {
  std::size_t valid = 0;
  std::vector<const Emitted*> with_steps;
  for (const auto& e : emitted) {
    const auto rep = verify::check_certificate(e.graph, e.certificate, e.variant, e.graph_class);
    if (rep.valid && rep.violations.empty()) ++valid;
    else o.fail("an emitted certificate failed the checker");
    if (!e.certificate.steps.empty()) with_steps.push_back(&e);
  }

  gen::Rng rng(2024);
  std::size_t broken = 0;
  for (int i = 0; i < 50; ++i) {
    const Emitted& e = *with_steps[rng.below(with_steps.size())];
    SplitSequence s = e.certificate;
    auto& r = s.steps[rng.below(s.steps.size())];
    // neighbours listed on exactly one side
    std::vector<std::pair<std::vector<VertexId>*, std::size_t>> single;
    for (auto [side, other] : {std::pair{&r.side_a, &r.side_b}, std::pair{&r.side_b, &r.side_a}})
      for (std::size_t k = 0; k < side->size(); ++k)
        if (std::find(other->begin(), other->end(), (*side)[k]) == other->end()) single.emplace_back(side, k);
    auto kind = rng.below(3);
    if (kind == 0 && single.empty()) kind = 1;
    if (kind == 0) {
      const auto [side, k] = single[rng.below(single.size())];
      side->erase(side->begin() + static_cast<std::ptrdiff_t>(k));
    } else if (kind == 1) {
      (rng.below(2) ? r.side_a : r.side_b).push_back("not-a-vertex");
    } else {
      // list one neighbour on both sides and demand an exclusive split
      if (!r.side_a.empty()) r.side_b.push_back(r.side_a.front());
      else r.side_a.push_back(r.side_b.front());
      r.variant = Variant::Exclusive;
    }
    if (s == e.certificate) {
      o.fail("mutation left the certificate unchanged");
      continue;
    }
    if (!verify::check_certificate(e.graph, s, Variant::Exclusive, e.graph_class).valid &&
        !verify::check_certificate(e.graph, s, e.variant, e.graph_class).valid)
      ++broken;
    else
      o.fail("a mutated certificate still validated");
  }
  o.detail << valid << "/" << emitted.size() << " emitted certificates valid with zero violations; " << broken
           << "/50 single-step mutations rejected";
}

std::size_t weight_of(const Decomposition& d) {
  std::size_t w = 0;
  for (const auto& part : d.parts) {
    std::set<VertexId> vs;
    for (const auto& e : part) {
      vs.insert(e.u);
      vs.insert(e.v);
    }
    w += vs.size();
  }
  return w;
}

void desplitting_weight_law(Outcome& o) {
  std::size_t ok = 0, steps = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Decomposition d;
    if (seed % 2 == 0) {
      const Graph g = fixtures::drop_isolated(gen::gnp(6 + seed % 20, 0.3, seed));
      gen::Rng rng(seed);
      std::map<VertexId, EdgePart> by_centre;
      for (const auto& e : g.edges()) by_centre[rng.below(2) ? e.u : e.v].push_back(e);
      d = Decomposition{g, {}, Family::Stars};
      for (auto& [c, p] : by_centre) d.parts.push_back(p);
    } else {
      const Graph g = gen::even_union_of_cycles(6 + seed % 30, 2 + seed % 4, seed);
      d = cycle::to_decomposition(g, cycle::cycle_decomposition(g));
    }
    const std::size_t w = weight_of(d), n = d.host.order();
    bool good = validate_and_weigh(d).total == w;
    Decomposition cur = d;
    std::size_t count = 0;
    while (auto next = desplit_step(cur)) {
      good = good && weight_of(next->decomposition) == w && next->graph.order() == cur.host.order() + 1;
      cur = next->decomposition;
      ++count;
    }
    good = good && count == w - n && decomposition_to_splits(d).steps.size() == w - n;
    steps += count;
    if (good) ++ok;
    else o.fail("seed " + std::to_string(seed));
  }
  o.detail << ok << "/100 decompositions (50 star, 50 cycle) keep weight on every desplit, add one vertex each, and take wgt-n steps ("
           << steps << " steps)";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"1 oracle-equivalence", oracle_equivalence},
      {"2 cycle-exclusive-formula", cycle_exclusive_formula},
      {"3 cycle-inclusive-fixed-points", cycle_inclusive_fixed_points},
      {"4 linear-forest-formula", linear_forest_formula},
      {"5 constellation-equivalence", constellation_equivalence},
      {"6 bipartite-equivalence", bipartite_equivalence},
      {"7 certificate-integrity", certificate_integrity},
      {"8 desplitting-weight-law", desplitting_weight_law},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
