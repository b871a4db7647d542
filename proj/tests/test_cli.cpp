#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
std::filesystem::path g_dir;

int run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string path(const std::string& name) { return (g_dir / name).string(); }

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(run("gen bogus-kind") == 1);
  CHECK(run("nonexistent-subcommand") == 1);
  CHECK(run("experiment bogus-suite") == 1);
  CHECK(run("crossings --mode exact") == 1);  // missing required --in
}

TEST_CASE("gen is byte deterministic") {
  REQUIRE(run("gen random --n 32 --seed 7 --out " + path("a.json")) == 0);
  REQUIRE(run("gen random --n 32 --seed 7 --out " + path("b.json")) == 0);
  CHECK(slurp(path("a.json")) == slurp(path("b.json")));
  REQUIRE(run("gen random --n 32 --seed 8 --out " + path("c.json")) == 0);
  CHECK(slurp(path("a.json")) != slurp(path("c.json")));
}

TEST_CASE("gen extremal-grid shape") {
  REQUIRE(run("gen extremal-grid --k 2 --out " + path("eg.json")) == 0);
  std::string text = slurp(path("eg.json"));
  CHECK(text.find("\"lines\"") != std::string::npos);
  REQUIRE(run("incidences --in " + path("eg.json") + " --out " +
              path("eg.csv")) == 0);
  std::string csv = slurp(path("eg.csv"));
  CHECK(csv.find("m,16") != std::string::npos);
  CHECK(csv.find("n,8") != std::string::npos);
  CHECK(csv.find("incidences_lines,16") != std::string::npos);
}

TEST_CASE("pipeline partition, tree, crossings") {
  REQUIRE(run("gen random --n 20 --lines 0 --seed 3 --out " + path("p.json")) ==
          0);
  REQUIRE(run("partition --in " + path("p.json") + " --r 4 --seed 1 --out " +
              path("part.txt")) == 0);
  CHECK(slurp(path("part.txt")).find("factor") != std::string::npos);

  REQUIRE(run("tree --in " + path("p.json") + " --seed 5 --out " +
              path("tree.json") + " --log " + path("tree.csv") + " --svg " +
              path("tree.svg")) == 0);
  CHECK(slurp(path("tree.csv")).find("level,n,") == 0);
  CHECK(slurp(path("tree.svg")).find("<svg") != std::string::npos);

  REQUIRE(run("crossings --in " + path("tree.json") + " --mode exact --out " +
              path("cross.json")) == 0);
  std::string rep = slurp(path("cross.json"));
  CHECK(rep.find("max_crossings") != std::string::npos);
  CHECK(rep.find("\"mode\": \"exact\"") != std::string::npos);

  // rerun the whole chain; outputs must match byte for byte
  REQUIRE(run("tree --in " + path("p.json") + " --seed 5 --out " +
              path("tree2.json")) == 0);
  CHECK(slurp(path("tree.json")) == slurp(path("tree2.json")));
  REQUIRE(run("crossings --in " + path("tree.json") + " --mode exact --out " +
              path("cross2.json")) == 0);
  CHECK(slurp(path("cross.json")) == slurp(path("cross2.json")));
}

TEST_CASE("audits emit CSV and exit 0 on pass") {
  REQUIRE(run("gen extremal-grid --k 2 --out " + path("ag.json")) == 0);
  REQUIRE(run("audit st --in " + path("ag.json") + " --out " +
              path("ast.csv")) == 0);
  std::string csv = slurp(path("ast.csv"));
  CHECK(csv.find("check_name,observed,bound,pass") == 0);
  CHECK(csv.find("false") == std::string::npos);

  REQUIRE(run("gen circle --g 3 --out " + path("circ.json")) == 0);
  CHECK(run("audit curves --in " + path("circ.json") + " --out " +
            path("ac.csv")) == 0);

  REQUIRE(run("gen random --n 24 --lines 0 --seed 2 --out " + path("rp.json")) ==
          0);
  CHECK(run("audit partition --in " + path("rp.json") +
            " --r 4 --lines 12 --seed 3 --out " + path("ap.csv")) == 0);
}

TEST_CASE("experiment rows are deterministic and tagged") {
  REQUIRE(run("experiment st --sizes 16,24 --seeds 2 --seed 11 --out " +
              path("e1.csv")) == 0);
  REQUIRE(run("experiment st --sizes 16,24 --seeds 2 --seed 11 --out " +
              path("e2.csv")) == 0);
  std::string e1 = slurp(path("e1.csv"));
  CHECK(e1 == slurp(path("e2.csv")));
  CHECK(e1.find("schema,") == 0);
  CHECK(e1.find("polypart-experiment-v1") != std::string::npos);
  CHECK(e1.find("~") != std::string::npos);  // ratio cells are approximate
  CHECK(e1.find("runtime_ms") == std::string::npos);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <binary>\n");
    return 1;
  }
  g_binary = argv[1];
  g_dir = std::filesystem::temp_directory_path() / "polypart_cli_test";
  std::filesystem::create_directories(g_dir);
  doctest::Context ctx;
  int rc = ctx.run();
  std::filesystem::remove_all(g_dir);
  return rc;
}
