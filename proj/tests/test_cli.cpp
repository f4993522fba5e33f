#include <doctest/doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <cmath>
#include <sstream>
#include <vector>
#include <string>

#include "ihara/families.hpp"
#include "ihara/graph.hpp"
#include "ihara/graph_io.hpp"

using namespace ihara;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("IHARA_CLI_BIN");
  return p == nullptr ? std::string() : std::string(p);
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "ihara-cli-XXXXXX").string();
    path = fs::path(mkdtemp(tmpl.data()));
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args, const std::string& stdout_file) {
  const std::string cmd = cli_path() + " " + args + " > " + stdout_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current)) {
    if (!current.empty() && current.back() == '\r') current.pop_back();
    if (current == line) return true;
  }
  return false;
}

#define REQUIRE_CLI()                                   \
  if (cli_path().empty()) {                             \
    MESSAGE("IHARA_CLI_BIN not set; skipping CLI run"); \
    return;                                             \
  }

}  // namespace

TEST_CASE("family generation feeds verification") {
  REQUIRE_CLI();
  TempDir dir;
  const std::string graph = dir.file("k4.json");
  const std::string out = dir.file("out.txt");
  CHECK(run("family --kind complete --params 4 --output " + graph, out) == 0);
  CHECK(slurp(out).find("4 vertices") != std::string::npos);

  CHECK(run("verify --graph " + graph + " --order 8", out) == 0);
  const std::string table = slurp(out);
  CHECK(table.find("[pass]") != std::string::npos);
  CHECK(table.find("[fail]") == std::string::npos);
  CHECK(table.find("all checks passed") != std::string::npos);
}

TEST_CASE("count output") {
  REQUIRE_CLI();
  TempDir dir;
  const std::string graph = dir.file("k4.json");
  const std::string out = dir.file("out.txt");
  REQUIRE(run("family --kind complete --params 4 --output " + graph, out) == 0);

  // Too short for any closed geodesic: every count is zero.
  CHECK(run("count --graph " + graph +
                " --max-length 2 --what closed-geodesics --format csv",
            out) == 0);
  const std::string csv = slurp(out);
  CHECK(has_line(csv, "length,closed_geodesics"));
  CHECK(has_line(csv, "2,0"));

  CHECK(run("count --graph " + graph + " --max-length 4 --format json", out) == 0);
  const std::string json = slurp(out);
  CHECK(json.find("\"closed_geodesics\"") != std::string::npos);
  CHECK(json.find("\"geodesic_loops\"") != std::string::npos);
}

TEST_CASE("series output") {
  REQUIRE_CLI();
  TempDir dir;
  const std::string graph = dir.file("c6.json");
  const std::string out = dir.file("out.txt");
  REQUIRE(run("family --kind cycle --params 6 --output " + graph, out) == 0);

  CHECK(run("series --graph " + graph +
                " --order 6 --method counts --format csv",
            out) == 0);
  const std::string csv = slurp(out);
  CHECK(has_line(csv, "index,counts"));
  CHECK(has_line(csv, "6,1/3"));

  // All methods agree; exit reflects all_pass.
  CHECK(run("series --graph " + graph + " --order 6 --format json", out) == 0);
  CHECK(slurp(out).find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("verification failure exits 1") {
  REQUIRE_CLI();
  TempDir dir;
  const Graph tree = make_family({"tree_ball", {3, 3}});
  auto edges = tree.edges();
  edges.back().second = edges.back().first;  // orphan the last leaf
  write_graph_file(Graph("corrupt", tree.vertex_count(), edges), dir.file("bad.json"));

  const std::string out = dir.file("out.txt");
  CHECK(run("verify --graph " + dir.file("bad.json") + " --order 6", out) == 1);
  CHECK(slurp(out).find("[fail]") != std::string::npos);
}

TEST_CASE("configuration errors exit 2") {
  REQUIRE_CLI();
  TempDir dir;
  const std::string out = dir.file("out.txt");
  CHECK(run("count --graph " + dir.file("missing.json"), out) == 2);
  CHECK(run("count --bogus-flag", out) == 2);
  CHECK(run("family --kind moebius", out) == 2);

  const std::string graph = dir.file("c6.json");
  REQUIRE(run("family --kind cycle --params 6 --output " + graph, out) == 0);
  CHECK(run("series --graph " + graph + " --method bogus", out) == 2);

  // Work cap refusals are configuration errors, env var included.
  const std::string petersen = dir.file("p.json");
  REQUIRE(run("family --kind petersen --output " + petersen, out) == 0);
  CHECK(run("count --graph " + petersen + " --max-length 8 --oracle-work-cap 10",
            out) == 2);
  CHECK(slurp(out).find("refused") != std::string::npos);
  const std::string env_cmd = "IHARA_ORACLE_WORK_CAP=10 " + cli_path() +
                              " count --graph " + petersen + " --max-length 8 > " +
                              out + " 2>&1";
  const int status = std::system(env_cmd.c_str());
  CHECK((WIFEXITED(status) ? WEXITSTATUS(status) : -1) == 2);
}

TEST_CASE("spectrum output") {
  REQUIRE_CLI();
  TempDir dir;
  const std::string graph = dir.file("k4.json");
  const std::string out = dir.file("out.txt");
  REQUIRE(run("family --kind complete --params 4 --output " + graph, out) == 0);
  CHECK(run("spectrum --graph " + graph + " --vertex 1 --format csv", out) == 0);
  const std::string csv = slurp(out);
  CHECK(has_line(csv, "eigenvalue,local_multiplicity"));

  // Rows are "<eigenvalue>,<weight>"; the weights must be 1/4 and 3/4.
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  std::vector<double> weights;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    weights.push_back(std::stod(line.substr(comma + 1)));
  }
  REQUIRE(weights.size() == 2);
  CHECK(std::abs(weights[0] - 0.25) < 1e-9);
  CHECK(std::abs(weights[1] - 0.75) < 1e-9);
}
