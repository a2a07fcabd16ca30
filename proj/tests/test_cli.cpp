// Runs the installed binary as a subprocess; ILAB_CLI_PATH comes from CMake.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static fs::path dir = [] {
    auto p = fs::temp_directory_path() / ("ilab_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

Result run(const std::string& args) {
  std::string cmd = "cd '" + scratch().string() + "' && '" ILAB_CLI_PATH "' " + args + " 2>&1";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write(const std::string& name, const std::string& text) { std::ofstream(scratch() / name) << text; }

std::string read(const std::string& name) {
  std::ifstream in(scratch() / name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("check on the s = 7 family files") {
  auto gen = run("gen-planar --s 7 -o g.txt -c c.txt");
  CHECK(gen.code == 0);
  auto r = run("check g.txt c.txt");
  CHECK(r.code == 0);
  CHECK(r.out == "interval, 19 colours\n");
}

TEST_CASE("solve on the triangle") {
  write("triangle.txt", "3 3\n0 1\n1 2\n0 2\n");
  auto r = run("solve triangle.txt --mode colourable");
  CHECK(r.code == 1);
  CHECK(r.out == "not interval colourable\n");
  auto t = run("solve triangle.txt --mode theta -o parts.txt");
  CHECK(t.code == 0);
  CHECK(t.out == "theta = 2\n");
  CHECK(read("parts.txt").rfind("3 3 2\n", 0) == 0);
}

TEST_CASE("solve writes a colouring that check accepts") {
  write("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  auto r = run("solve k4.txt --mode tmax -o k4c.txt");
  CHECK(r.code == 0);
  CHECK(r.out == "t = 4\n");
  auto c = run("check k4.txt k4c.txt");
  CHECK(c.code == 0);
  CHECK(c.out == "interval, 4 colours\n");
}

TEST_CASE("objective output") {
  auto r = run("objective --delta 0.25 --step 0.01");
  CHECK(r.code == 0);
  CHECK(r.out.find("boundary x=0 excluded") != std::string::npos);
  auto j = run("--json objective --delta 0.25 --step 0.01");
  CHECK(json::parse(j.out).at("local_maxima").size() >= 1);
}

TEST_CASE("usage errors name the flag") {
  write("triangle.txt", "3 3\n0 1\n1 2\n0 2\n");
  auto r = run("solve triangle.txt --bogus");
  CHECK(r.code == 2);
  CHECK(r.out.find("--bogus") != std::string::npos);
  auto d = run("objective --delta abc");
  CHECK(d.code == 2);
  CHECK(d.out.find("--delta") != std::string::npos);
  auto m = run("solve triangle.txt --mode sideways");
  CHECK(m.code == 2);
  CHECK(m.out.find("--mode") != std::string::npos);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("bad input exits with 2") {
  write("bad.txt", "3 1\n0 0\n");
  auto r = run("solve bad.txt");
  CHECK(r.code == 2);
  CHECK(r.out.find("line 2") != std::string::npos);
  CHECK(run("check missing.txt missing.txt").code == 2);
}

TEST_CASE("budget exhaustion exits with 3") {
  write("k7.txt", "7 21\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n1 2\n1 3\n1 4\n1 5\n1 6\n2 3\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n4 5\n"
                  "4 6\n5 6\n");
  auto r = run("solve k7.txt --node-limit 5");
  CHECK(r.code == 3);
}

TEST_CASE("gen-lower and probe") {
  auto g = run("--seed 0 gen-lower --r 2 --n 1000 --delta 0.1 --epsilon 0.01 -o L.json --partition P.txt --parts 1");
  CHECK(g.code == 0);
  auto p = run("probe L.json P.txt");
  CHECK(p.code == 0);
  CHECK(p.out.rfind("witness:", 0) == 0);
  auto pre = run("gen-lower --r 2 --n 1000 -o preset.json");
  CHECK(pre.code == 0);
  CHECK(json::parse(read("preset.json")).at("params").at("delta").get<double>() == doctest::Approx(0.0005));
}

TEST_CASE("split and bound") {
  run("gen-planar --s 3 --remove 1 -o g3.txt -c c3.txt");
  auto s = run("split g3.txt c3.txt");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("split at colour 3", 0) == 0);
  auto b = run("bound g3.txt --k 3");
  CHECK(b.code == 0);
  write("k5.txt", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  CHECK(run("bound k5.txt --k 3").code == 1);
}

TEST_CASE("manifests reproduce outputs byte for byte") {
  write("gnp.txt", "6 9\n0 1\n0 2\n0 3\n1 2\n1 4\n2 5\n3 4\n3 5\n4 5\n");
  CHECK(run("--seed 4 --manifest m1.json decompose gnp.txt -o p1.txt --report r1.json").code == 0);
  CHECK(run("--seed 4 --manifest m2.json decompose gnp.txt -o p2.txt --report r2.json").code == 0);
  CHECK(read("p1.txt") == read("p2.txt"));
  CHECK(read("r1.json") == read("r2.json"));
  auto m1 = json::parse(read("m1.json")), m2 = json::parse(read("m2.json"));
  CHECK(m1.at("inputs") == m2.at("inputs"));
  CHECK(m1.at("outputs")[0].at("fnv1a64") == m2.at("outputs")[0].at("fnv1a64"));
  CHECK(m1.at("seed") == 4);
  CHECK(m1.at("subcommand") == "decompose");

  CHECK(run("--seed 9 gen-lower --r 2 --n 500 --delta 0.1 --epsilon 0.01 -o a.json").code == 0);
  CHECK(run("--seed 9 gen-lower --r 2 --n 500 --delta 0.1 --epsilon 0.01 -o b.json").code == 0);
  CHECK(read("a.json") == read("b.json"));
}

TEST_CASE("outputs re-parse") {
  CHECK(run("gen-planar --s 4 --odd -o g4.json -c c4.json").code == 0);
  CHECK(run("check g4.json c4.json").code == 0);
  CHECK(run("solve g4.json --mode colourable -o s4.json").code == 0);
  CHECK(run("check g4.json s4.json").code == 0);
  CHECK(run("decompose g4.json -o d4.json").code == 0);
  auto d = json::parse(read("d4.json"));
  CHECK(d.contains("part_count"));
}

TEST_CASE("thread cap comes from the environment") {
  write("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(run("decompose k4.txt --report t1.json").code == 0);
  auto r = run("--seed 0 decompose k4.txt --report t2.json");
  CHECK(r.code == 0);
  CHECK(read("t1.json") == read("t2.json"));
  auto bad = run("decompose k4.txt; ILAB_THREADS=zero '" ILAB_CLI_PATH "' decompose k4.txt");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("ILAB_THREADS") != std::string::npos);
}
