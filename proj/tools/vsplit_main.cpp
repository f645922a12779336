// vsplit: minimum vertex splits to constellations, cycle graphs, linear
// forests and bipartite graphs.
//
// Exit codes: 0 solved / yes / valid, 1 no-instance / over budget / invalid
// certificate / oracle exceeded, 2 input or limit error.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "vsplit/errors.hpp"
#include "vsplit/generators.hpp"
#include "vsplit/io.hpp"
#include "vsplit/solve.hpp"
#include "vsplit/verify.hpp"

namespace fs = std::filesystem;
using namespace vsplit;
using io::json;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Common {
  std::string graph_class;
  std::string variant;
};

void add_class_variant(CLI::App* cmd, Common& c) {
  cmd->add_option("--class", c.graph_class, "Target class")
      ->required()
      ->check(CLI::IsMember({"constellation", "cycle-graph", "linear-forest", "bipartite"}));
  cmd->add_option("--variant", c.variant, "Split variant")->required()->check(CLI::IsMember({"inclusive", "exclusive"}));
}

GraphClass cls(const Common& c) { return *parse_graph_class(c.graph_class); }
Variant var(const Common& c) { return *parse_variant(c.variant); }

struct SolveArgs {
  Common common;
  std::string input;
  std::string inputs;
  std::string out;
  std::optional<std::size_t> budget;
  SolveOptions options;
  unsigned jobs = 0;
};

// Solves one graph; returns the JSON document and the exit status it implies.
std::pair<json, int> solve_one(const Graph& g, const SolveArgs& a) {
  const auto result = solve(g, cls(a.common), var(a.common), a.options);
  json doc = io::to_json(result);
  int status = result.feasible ? kYes : kNo;
  if (a.budget) {
    const bool yes = result.feasible && *result.min_splits <= *a.budget;
    doc["budget"] = *a.budget;
    doc["decision"] = yes;
    status = yes ? kYes : kNo;
  }
  return {doc, status};
}

int run_batch(const SolveArgs& a) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.inputs))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  fs::create_directories(a.out);

  std::atomic<std::size_t> next{0};
  std::atomic<int> worst{kYes};
  std::mutex log;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      const auto& file = files[i];
      json doc;
      int status;
      try {
        std::tie(doc, status) = solve_one(io::read_graph_file(file), a);
      } catch (const Error& e) {
        doc = {{"error", to_string(e.code())}, {"message", e.detail()}};
        status = kError;
        std::lock_guard lock(log);
        std::cerr << file.string() << ": " << e.what() << "\n";
      }
      io::write_file_atomic(fs::path(a.out) / (file.stem().string() + ".json"), doc.dump(2) + "\n");
      for (int w = worst.load(); status > w && !worst.compare_exchange_weak(w, status);) {
      }
    }
  };
  const unsigned n = std::max(1u, a.jobs ? a.jobs : std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return worst;
}

int run_solve(const SolveArgs& a) {
  if (!a.inputs.empty()) return run_batch(a);
  auto [doc, status] = solve_one(io::read_graph_file(a.input), a);
  std::cout << doc.dump(2) << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum vertex splits to a target graph class"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one graph, or every file in a directory");
  add_class_variant(solve_cmd, solve_args.common);
  auto* single = solve_cmd->add_option("input", solve_args.input, "Graph file (JSON or edge list)");
  auto* many = solve_cmd->add_option("--inputs", solve_args.inputs, "Directory of graph files")->check(CLI::ExistingDirectory);
  auto* out_dir = solve_cmd->add_option("--out", solve_args.out, "Output directory for --inputs");
  single->excludes(many);
  many->needs(out_dir);
  solve_cmd->add_option("--budget", solve_args.budget, "Answer the decision problem for this k");
  solve_cmd->add_option("--limit-nodes", solve_args.options.vc_node_limit, "Vertex cover search node limit");
  solve_cmd->add_option("--odd-cap", solve_args.options.odd_cap, "Most odd vertices per component for matching");
  solve_cmd->add_option("--oct-cap", solve_args.options.oct_max_k, "Largest odd cycle transversal searched");
  solve_cmd->add_option("--jobs", solve_args.jobs, "Worker threads for --inputs");

  Common check_common;
  std::string check_graph, check_cert;
  auto* check_cmd = app.add_subcommand("check", "Validate a certificate");
  add_class_variant(check_cmd, check_common);
  check_cmd->add_option("graph", check_graph, "Graph file")->required();
  check_cmd->add_option("certificate", check_cert, "Certificate JSON")->required();

  Common oracle_common;
  std::string oracle_input;
  verify::OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum for small graphs");
  add_class_variant(oracle_cmd, oracle_common);
  oracle_cmd->add_option("input", oracle_input, "Graph file")->required();
  oracle_cmd->add_option("--k-max", oracle_opts.k_max, "Deepest search level");
  oracle_cmd->add_option("--state-budget", oracle_opts.state_budget, "Most canonical states kept");

  std::string kind, format = "json";
  std::size_t n = 0, cycles = 1, noise = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("kind", kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"gnp", "even-union-of-cycles", "bipartite-plus-noise", "complete", "cycle", "star", "path"}));
  gen_cmd->add_option("--n", n, "Number of vertices")->required();
  gen_cmd->add_option("--p", p, "Edge probability");
  gen_cmd->add_option("--cycles", cycles, "Cycles to combine");
  gen_cmd->add_option("--noise", noise, "Same-side edges");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "edgelist", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kError;
  }

  try {
    if (*solve_cmd) {
      if (solve_args.input.empty() && solve_args.inputs.empty()) {
        std::cerr << "solve: give an input file or --inputs\n";
        return kError;
      }
      return run_solve(solve_args);
    }
    if (*check_cmd) {
      const Graph g = io::read_graph_file(check_graph);
      const auto cert = io::certificate_from_json(io::read_json_file(check_cert));
      const auto report = verify::check_certificate(g, cert, var(check_common), cls(check_common));
      std::cout << io::to_json(report).dump(2) << "\n";
      return report.valid ? kYes : kNo;
    }
    if (*oracle_cmd) {
      const Graph g = io::read_graph_file(oracle_input);
      const auto r = verify::brute_force_min_splits(g, cls(oracle_common), var(oracle_common), oracle_opts);
      json doc{{"class", oracle_common.graph_class}, {"variant", oracle_common.variant},
               {"k_max", oracle_opts.k_max}, {"states", r.states}};
      if (r.min_splits)
        doc["min_splits"] = *r.min_splits;
      else
        doc["exceeded"] = true;
      std::cout << doc.dump(2) << "\n";
      return r.min_splits ? kYes : kNo;
    }
    if (*gen_cmd) {
      Graph g;
      if (kind == "gnp") g = gen::gnp(n, p, seed);
      else if (kind == "even-union-of-cycles") g = gen::even_union_of_cycles(n, cycles, seed);
      else if (kind == "bipartite-plus-noise") g = gen::bipartite_plus_noise(n, p, noise, seed);
      else if (kind == "complete") g = gen::complete(n);
      else if (kind == "cycle") g = gen::cycle(n);
      else if (kind == "star") g = gen::star(n);
      else g = gen::path(n);
      if (format == "edgelist") std::cout << io::to_edge_list(g);
      else if (format == "dot") std::cout << io::to_dot(g);
      else std::cout << io::to_json(g).dump(2) << "\n";
      return kYes;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
