#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using osc::cli::main_entry;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify a file") {
  Run r = run({"classify", std::string(OSC_DATA_DIR) + "/l2plus_r2.lat"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("L2+(r=2)\n", 0) == 0);
  CHECK(r.out.find("s_L = 0") != std::string::npos);
}

TEST_CASE("spectrum of the order-2 lattice with r = 3") {
  Run r = run({"spectrum", "--spec", "r=3;lambda=pi", "--part", "h1", "--mmax", "2", "--nmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("F(c=3, d=0) x2\n") != std::string::npos);
  CHECK(r.out.find("F(c=3, d=1/(2·lambda)) x1\n") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const char* cmd : {"spectrum", "wave"}) {
    Run a = run({cmd, std::string(OSC_DATA_DIR) + "/l3plus_r3_shifted.lat", "--format", "records"});
    Run b = run({cmd, std::string(OSC_DATA_DIR) + "/l3plus_r3_shifted.lat", "--format", "records"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("standardize reports the chain") {
  Run r = run({"standardize", std::string(OSC_DATA_DIR) + "/l3plus_r3_shifted.lat"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("L3+(r=3", 0) == 0);
  CHECK(r.out.find("scale a = 2") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "--spec", "r=2;lambda="}).code == 2);
  CHECK(run({"classify", "--spec", "r=2"}).code == 2);
  CHECK(run({"classify", "/nonexistent/file.lat"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify", "--spec", "r=2;lambda=2/5 pi"}).code == 3);
  CHECK(run({"spectrum", "--spec", "r=2;lambda=pi", "--nmax", "0"}).code == 2);
  CHECK(run({"verify", "gauss"}).code == 0);
}

TEST_CASE("accumulation demo") {
  Run r = run({"demo-accumulation", "--count", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# distinct=20") != std::string::npos);
}

TEST_CASE("timing only on request and only on stderr") {
  Run a = run({"classify", "--spec", "r=1;lambda=pi/2"});
  CHECK(a.err.empty());
  Run b = run({"classify", "--spec", "r=1;lambda=pi/2", "--timing"});
  CHECK(b.out == a.out);
  CHECK(b.err.find("elapsed") != std::string::npos);
}
