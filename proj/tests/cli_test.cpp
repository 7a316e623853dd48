#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace wcw::test;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = wcw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "wcw_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

TEST_CASE("check") {
  const auto c5 = run({"check", fixture_path("c5.graph")});
  CHECK(c5.code == 0);
  CHECK(c5.out == "well-covered: yes\n");

  const auto p3 = run({"check", fixture_path("p3.graph")});
  CHECK(p3.code == 1);
  CHECK(p3.out == "well-covered: no\ncounterexample: {2} (size 1) vs {1,3} (size 2)\n");

  const auto bad = run({"check", fixture_path("malformed_loop.graph")});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"check", fixture_path("no_such.graph")}).code == 2);
}

TEST_CASE("wcw prints the same basis for every method") {
  CHECK(run({"wcw", fixture_path("k2.graph")}).out == "dim 1 2\n1 1\n");
  CHECK(run({"wcw", fixture_path("c5.graph")}).out == "dim 1 5\n1 1 1 1 1\n");
  const auto p3 = run({"wcw", fixture_path("p3.graph"), "--method", "definitional"});
  CHECK(p3.code == 0);
  CHECK(p3.out == "dim 2 3\n1 0 -1\n0 1 1\n");
  for (const auto& name : graph_fixtures()) {
    const auto reference = run({"wcw", fixture_path(name), "--method", "definitional"});
    CHECK(run({"wcw", fixture_path(name), "--method", "generating"}).out == reference.out);
    CHECK(run({"wcw", fixture_path(name), "--method", "local"}).out == reference.out);
  }
  CHECK(run({"wcw", fixture_path("p3.graph"), "--method", "fast"}).code == 2);
  CHECK(run({"--max-sets", "1", "wcw", fixture_path("c5.graph"), "--method", "definitional"}).code == 2);
}

TEST_CASE("relating and generating") {
  const auto c5 = run({"relating", fixture_path("c5.graph"), "1", "2"});
  CHECK(c5.code == 0);
  CHECK(c5.out == "relating: yes witness={4}\n");
  const auto p4 = run({"relating", fixture_path("p4.graph"), "2", "3"});
  CHECK(p4.code == 1);
  CHECK(p4.out == "relating: no\n");
  CHECK(run({"relating", fixture_path("c5.graph"), "1", "3"}).code == 2);
  CHECK(run({"relating", fixture_path("c5.graph")}).code == 2);

  const auto fig1 = run({"relating", fixture_path("usat6_re.graph"), "--sidecar", fixture_path("usat6_re.sidecar")});
  CHECK(fig1.code == 0);
  CHECK(fig1.out.starts_with("relating: yes witness="));
  CHECK(fig1.out.find("labels={u1,") != std::string::npos);

  const auto c4 = run({"generating", fixture_path("c4.graph"), "--bx", "1,3", "--by", "2,4"});
  CHECK(c4.code == 0);
  CHECK(c4.out == "generating: yes witness={}\n");
  CHECK(run({"generating", fixture_path("c5.graph"), "--bx", "1", "--by", "3"}).code == 2);
  CHECK(run({"generating", fixture_path("c5.graph"), "--bx", "1", "--by", "x"}).code == 2);
  const auto fig2 = run({"generating", fixture_path("dsat6_gs.graph"), "--sidecar", fixture_path("dsat6_gs.sidecar")});
  CHECK(fig2.code == 0);
  CHECK(run({"generating", fixture_path("p3.graph"), "--bx", "1", "--by", "2"}).code == 1);
}

TEST_CASE("reduce writes instances and reports its checks") {
  const std::string prefix = scratch("ex1");
  const auto sat = run({"reduce", "sat2usat", fixture_path("sat5.cnf"), prefix});
  CHECK(sat.code == 0);
  CHECK(sat.out.find("usat valid: yes") != std::string::npos);
  CHECK(read_text(prefix + ".cnf") == read_fixture("sat5_usat.cnf"));

  const auto re = run({"reduce", "usat2re", fixture_path("usat6.cnf"), scratch("ex2")});
  CHECK(re.code == 0);
  CHECK(re.out.find("bipartite: yes") != std::string::npos);
  CHECK(std::filesystem::exists(scratch("ex2") + ".sidecar"));

  const auto dsat = run({"reduce", "3sat2dsat", fixture_path("threesat5.cnf"), scratch("ex3")});
  CHECK(dsat.code == 0);
  CHECK(dsat.out.find("fresh variables: 4") != std::string::npos);

  const auto gs = run({"reduce", "dsat2gs", fixture_path("dsat6.cnf"), scratch("ex4")});
  CHECK(gs.code == 0);
  CHECK(gs.out.find("C3: no\nC4: no\nC5: no\n") != std::string::npos);

  CHECK(run({"reduce", "dsat2gs", fixture_path("threesat5.cnf"), scratch("bad")}).code == 2);
  CHECK(run({"reduce", "usat2re", fixture_path("sat5.cnf"), scratch("bad")}).code == 2);
  CHECK(run({"reduce", "3sat2dsat", fixture_path("sat5.cnf"), scratch("bad")}).code == 2);
  CHECK(run({"reduce", "magic", fixture_path("sat5.cnf"), scratch("bad")}).code == 2);
}

TEST_CASE("solve") {
  const auto sat = run({"solve", fixture_path("sat5.cnf")});
  CHECK(sat.code == 0);
  CHECK(sat.out == "satisfiable: yes\nmodel: -1 -2 -3 -4 5\n");
  const auto unsat = run({"solve", fixture_path("unsat.cnf")});
  CHECK(unsat.code == 1);
  CHECK(unsat.out == "satisfiable: no\n");
  CHECK(run({"--var-cap", "3", "solve", fixture_path("sat5.cnf")}).code == 2);
}

TEST_CASE("props") {
  const auto c5 = run({"props", fixture_path("c5.graph")});
  CHECK(c5.code == 0);
  CHECK(c5.out ==
        "vertices: 5\nedges: 5\nmaxdeg: 2\nbipartite: no\nC3: no\nC4: no\nC5: yes\nC6: no\nC7: no\n"
        "K1,3-free: yes\nK1,4-free: yes\n");
  const auto star = run({"props", fixture_path("k14.graph")});
  CHECK(star.out.find("K1,4-free: no") != std::string::npos);
  const auto fig2 = run({"props", fixture_path("dsat6_gs.graph")});
  CHECK(fig2.out.find("C3: no\nC4: no\nC5: no\n") != std::string::npos);
  CHECK(run({"props", fixture_path("malformed_header.graph")}).code == 2);
}

TEST_CASE("global options") {
  const auto tab = run({"--format", "tabular", "check", fixture_path("c5.graph")});
  CHECK(tab.out == "well-covered\tyes\n");
  CHECK(run({"--format", "xml", "check", fixture_path("c5.graph")}).code == 2);
  CHECK(run({"--max-sets", "0", "check", fixture_path("c5.graph")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("relating") != std::string::npos);
  CHECK(run({"--seed", "5", "check", fixture_path("c5.graph")}).out == "well-covered: yes\n");
}
