#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run tomcheck(const std::string& args) {
  const auto dir = fs::temp_directory_path() / "tom_cli_test";
  fs::create_directories(dir);
  const auto out = dir / "stdout.txt";
  const std::string cmd = std::string("'") + TOMCHECK_BIN + "' --no-cache " + args + " > '" +
                          out.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace

TEST_CASE("compute prints the table") {
  const auto r = tomcheck("compute --order 2 --id 1");
  CHECK(r.code == 0);
  CHECK(r.out == "tom 2 1 2\norders 1 2\nrow 0:2 1:1\nrow 1:1\n");
}

TEST_CASE("verify exit codes") {
  CHECK(tomcheck("verify --order 8").code == 0);

  const auto dir = fs::temp_directory_path() / "tom_cli_test";
  fs::create_directories(dir);
  const auto catalog = dir / "dup.txt";
  std::ofstream(catalog) << "group 2 1\ngen 1 0\nend\ngroup 2 2\ngen 1 0\nend\n";
  const auto r = tomcheck("--catalog '" + catalog.string() + "' verify --order 2");
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("input and usage errors") {
  CHECK(tomcheck("compute --order 8 --id 99").code == 2);
  CHECK(tomcheck("compute --order 8").code == 2);
  CHECK(tomcheck("").code == 2);
  CHECK(tomcheck("frobnicate").code == 2);
  CHECK(tomcheck("compare 1 2 --axis diagonal").code == 2);
  CHECK(tomcheck("--catalog /nonexistent verify").code == 2);
}

TEST_CASE("invariants and scan") {
  const auto inv = tomcheck("invariants --order 6 --id 1");
  CHECK(inv.code == 0);
  CHECK(inv.out.find("entries\t[0:7 1:5 2:2 3:1 6:1]") != std::string::npos);
  const auto scan = tomcheck("scan --order 8");
  CHECK(scan.code == 0);
  CHECK(scan.out.find("0 pairs") != std::string::npos);
}
