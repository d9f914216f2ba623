#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(EPIKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_profiles(const std::string& name, const std::string& body) {
  std::string path = std::string("/tmp/epikit_test_") + name + ".json";
  std::ofstream out(path);
  out << body;
  return path;
}

} // namespace

TEST_CASE("delta on the G2 wall point, with the paper's Kac digits") {
  RunResult r = run_cli("delta --type G2 --kac 1,0,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"delta\": \"1/4\"") != std::string::npos);
  CHECK(r.out.find("\"Delta\"") != std::string::npos);
  // Byte-identical across runs.
  CHECK(run_cli("delta --type G2 --kac 1,0,1").out == r.out);
  // --walls 2 names the same facet.
  CHECK(run_cli("delta --type G2 --walls 2").out == r.out);
}

TEST_CASE("abelianize output shape and determinism") {
  RunResult r = run_cli("abelianize --type G2 --p 2 --q 2 --kac 1,1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"dim\": 4") != std::string::npos);
  CHECK(r.out.find("\"tuple\"") != std::string::npos);
  CHECK(run_cli("abelianize --type G2 --p 2 --q 2 --kac 1,1,1").out == r.out);

  RunResult b5 = run_cli("abelianize --type B5 --p 2 --q 2 --kac 1,1,1,1,1,1");
  CHECK(b5.exit_code == 0);
  CHECK(b5.out.find("\"dim\": 7") != std::string::npos);
}

TEST_CASE("kac round trip through the CLI") {
  RunResult r = run_cli("kac --type G2 --kac 3,0,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"1/6\"") != std::string::npos);
  CHECK(r.out.find("\"m\": 6") != std::string::npos);
}

TEST_CASE("depth of the B5 example via profiles file") {
  std::string lower;
  auto aff = [](const std::string& g, int lvl) {
    return std::string("{\"gradient\": ") + g + ", \"level\": " + std::to_string(lvl) + "}";
  };
  lower += aff("[-1,-2,-2,-2,-2]", 1);
  for (const char* g : {"[1,0,0,0,0]", "[0,1,0,0,0]", "[0,0,1,0,0]", "[0,0,0,1,0]",
                        "[0,0,0,0,1]", "[0,0,0,1,1]", "[0,0,0,1,2]"})
    lower += std::string(", ") + aff(g, 0);
  std::string path =
      write_profiles("b5", std::string("[{\"lower\": [") + lower + "]}]");
  RunResult r = run_cli("depth --type B5 --p 2 --q 2 --kac 1,1,1,1,1,1 --profiles " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"depth\": \"1/8\"") != std::string::npos);
  CHECK(r.out.find("\"witness\"") != std::string::npos);

  RunResult s = run_cli("stable --type B5 --kac 1,1,1,1,1,1 --profiles " + path);
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("\"stable\": true") != std::string::npos);

  RunResult i = run_cli("intertwine --type G2 --kac 1,1,1 --lattice simply-connected "
                        "--profiles " +
                        write_profiles("g2", std::string("[{\"lower\": [") +
                                                 aff("[-3,-2]", 1) + ", " + aff("[0,1]", 0) +
                                                 ", " + aff("[1,1]", 0) + ", " +
                                                 aff("[2,1]", 0) + "]}]"));
  CHECK(i.exit_code == 0);
  CHECK(i.out.find("\"word\": []") != std::string::npos);
}

TEST_CASE("error reporting and exit codes") {
  // Unsupported tabulated case: exit 2.
  RunResult u = run_cli("abelianize --type G2 --p 2 --q 4 --kac 1,1,1");
  CHECK(u.exit_code == 2);
  CHECK(u.out.find("\"unsupported\"") != std::string::npos);
  // Bad input: exit 1 with a machine-readable error document.
  RunResult e = run_cli("delta --type H7 --kac 1,1");
  CHECK(e.exit_code == 1);
  CHECK(e.out.find("\"error\"") != std::string::npos);
  RunResult k = run_cli("delta --type G2 --kac 1,1");
  CHECK(k.exit_code == 1);
  RunResult m = run_cli("delta --type G2");
  CHECK(m.exit_code == 1);
  RunResult np = run_cli("depth --type G2 --kac 1,1,1 --profiles /nonexistent.json");
  CHECK(np.exit_code == 1);
}

TEST_CASE("text format renders") {
  RunResult r = run_cli("abelianize --type G2 --p 2 --q 2 --kac 1,1,1 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("dim V(x) = 4") != std::string::npos);
  RunResult roots = run_cli("roots --type G2 --format text");
  CHECK(roots.exit_code == 0);
  CHECK(roots.out.find("12 roots") != std::string::npos);
}
