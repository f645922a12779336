#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support/fixtures.hpp"
#include "vsplit/io.hpp"

namespace fs = std::filesystem;
using vsplit::io::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(VSPLIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("vsplit_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string graph(const std::string& name, const vsplit::Graph& g) const {
    return write(name, vsplit::io::to_json(g).dump());
  }
  fs::path path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("solve subcommand") {
  TempDir tmp;
  const auto bowtie = tmp.graph("bowtie.json", fixtures::bowtie());

  auto r = run("solve --class cycle-graph --variant exclusive " + bowtie);
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["min_splits"] == 1);
  CHECK(j["feasible"] == true);

  r = run("solve --class cycle-graph --variant exclusive " + tmp.graph("p.json", fixtures::petersen()));
  CHECK(r.status == 1);
  CHECK(json::parse(r.out)["feasible"] == false);

  r = run("solve --class bipartite --variant inclusive " + tmp.write("c4.txt", "a b\nb c\nc d\nd a\n"));
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["min_splits"] == 0);

  r = run("solve --class constellation --variant inclusive --budget 3 " + bowtie);
  CHECK(r.status == 1);
  CHECK(json::parse(r.out)["decision"] == false);
  r = run("solve --class constellation --variant inclusive --budget 4 " + bowtie);
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["decision"] == true);
}

TEST_CASE("solve reports input and limit errors with status 2") {
  TempDir tmp;
  CHECK(run("solve --class bipartite --variant inclusive " + tmp.write("bad.json", "{\"edges\": [[\"a\"")).status == 2);
  CHECK(run("solve --class bipartite --variant inclusive " + (tmp.path() / "missing.json").string()).status == 2);
  CHECK(run("solve --class trees --variant inclusive x").status == 2);
  CHECK(run("solve --class bipartite --variant inclusive --oct-cap 1 " + tmp.graph("k5.json", fixtures::complete(5)))
            .status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("check subcommand") {
  TempDir tmp;
  const auto tri = tmp.graph("t.json", fixtures::triangle());
  const auto solved = json::parse(run("solve --class constellation --variant exclusive " + tri).out);
  const auto cert = tmp.write("cert.json", solved["certificate"].dump());
  auto r = run("check --class constellation --variant exclusive " + tri + " " + cert);
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["valid"] == true);

  // an inclusive certificate with shared neighbours, checked as exclusive
  const auto edge = tmp.graph("e.json", fixtures::edge());
  const auto incl = json::parse(run("solve --class cycle-graph --variant inclusive " + edge).out);
  const auto icert = tmp.write("icert.json", incl["certificate"].dump());
  CHECK(run("check --class cycle-graph --variant inclusive " + edge + " " + icert).status == 0);
  r = run("check --class cycle-graph --variant exclusive " + edge + " " + icert);
  CHECK(r.status == 1);
  CHECK(json::parse(r.out)["violations"][0]["kind"] == "OverlapViolation");

  const auto text = incl["certificate"].dump();
  CHECK(run("check --class cycle-graph --variant inclusive " + edge + " " +
            tmp.write("trunc.json", text.substr(0, text.size() / 2)))
            .status == 2);
}

TEST_CASE("oracle subcommand") {
  TempDir tmp;
  auto r = run("oracle --class constellation --variant exclusive --k-max 3 " + tmp.graph("t.json", fixtures::triangle()));
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["min_splits"] == 2);
  r = run("oracle --class linear-forest --variant inclusive --k-max 2 " + tmp.graph("k13.json", fixtures::k13()));
  CHECK(json::parse(r.out)["min_splits"] == 1);
  r = run("oracle --class cycle-graph --variant exclusive --k-max 0 " + tmp.graph("c6.json", fixtures::cycle(6)));
  CHECK(json::parse(r.out)["min_splits"] == 0);
  r = run("oracle --class cycle-graph --variant exclusive --k-max 2 " + tmp.graph("e.json", fixtures::edge()));
  CHECK(r.status == 1);
  CHECK(json::parse(r.out)["exceeded"] == true);
}

TEST_CASE("gen subcommand") {
  auto r = run("gen cycle --n 6");
  CHECK(r.status == 0);
  const auto c6 = vsplit::io::graph_from_json(json::parse(r.out));
  CHECK(c6.size() == 6);
  CHECK(c6.degree("v3") == 2);

  const auto star = vsplit::io::parse_graph(run("gen star --n 4 --format edgelist").out);
  CHECK(star.degree("v0") == 3);

  const auto a = run("gen even-union-of-cycles --n 10 --cycles 3 --seed 7");
  const auto b = run("gen even-union-of-cycles --n 10 --cycles 3 --seed 7");
  CHECK(a.out == b.out);
  const auto even = vsplit::io::parse_graph(a.out);
  for (const auto& [v, ns] : even.adjacency()) CHECK(ns.size() % 2 == 0);

  CHECK(run("gen gnp --n 12 --p 0.3 --seed 1").out == run("gen gnp --n 12 --p 0.3 --seed 1").out);
  CHECK(run("gen cycle --n 2").status == 2);
  CHECK(run("gen cycle --n 5 --format dot").out.find("graph G") == 0);
}

TEST_CASE("batch solving writes one result per input") {
  TempDir tmp;
  fs::create_directories(tmp.path() / "in");
  std::ofstream(tmp.path() / "in" / "a.json") << vsplit::io::to_json(fixtures::bowtie()).dump();
  std::ofstream(tmp.path() / "in" / "b.txt") << "x y\ny z\nz x\n";
  std::ofstream(tmp.path() / "in" / "c.json") << "{broken";
  const auto out = tmp.path() / "out";
  const auto r = run("solve --class linear-forest --variant exclusive --jobs 2 --inputs " + (tmp.path() / "in").string() +
                     " --out " + out.string());
  CHECK(r.status == 2);
  CHECK(json::parse(vsplit::io::read_file(out / "a.json"))["min_splits"] == 2);
  CHECK(json::parse(vsplit::io::read_file(out / "b.json"))["min_splits"] == 1);
  CHECK(json::parse(vsplit::io::read_file(out / "c.json"))["error"] == "ParseError");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(out)) ++files;
  CHECK(files == 3);
}
