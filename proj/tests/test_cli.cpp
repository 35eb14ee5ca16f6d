#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "signedpat/cli.hpp"

using namespace signedpat;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "signedpat");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--patterns", "1 2, 2 1", "--n", "2"}).out == "6\n");
  for (const char* m : {"naive", "backtrack", "mask"}) {
    const Outcome o = run({"count", "--patterns", "1 -2, -1 2", "--n", "3", "--method", m});
    CHECK(o.code == 0);
    CHECK(o.out == "22\n");
  }
  CHECK(run({"count", "--patterns", "1 2", "--n", "3", "--format", "json"}).out ==
        "{\"n\":3,\"patterns\":\"1 2\",\"method\":\"backtrack\",\"value\":\"34\"}\n");
}

TEST_CASE("sequence") {
  CHECK(run({"sequence", "--patterns", "1 2", "--n-max", "4", "--format", "csv"}).out == "1,2,7,34,209\n");
  CHECK(run({"sequence", "--patterns", "1 2", "--n-max", "2"}).out == "0 1\n1 2\n2 7\n");
}

TEST_CASE("orbits") {
  const Outcome o = run({"orbits", "--size", "4"});
  CHECK(o.code == 0);
  CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 16);
  const Outcome all = run({"orbits"});
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 58);
}

TEST_CASE("verify") {
  const Outcome clean = run({"verify", "--n-max", "6"});
  CHECK(clean.code == 0);
  CHECK(clean.out.find("FAIL") == std::string::npos);
  CHECK(clean.out.find("PASS T_6 EQ10 n=0..6") != std::string::npos);

  const Outcome mutated = run({"verify", "--n-max", "6", "--mutate", "EQ11"});
  CHECK(mutated.code == 1);
  CHECK(mutated.out.find("FAIL T_7 EQ11") != std::string::npos);
}

TEST_CASE("census output is deterministic") {
  const Outcome a = run({"census", "--n-max", "5", "--format", "json"});
  const Outcome b = run({"census", "--n-max", "5", "--format", "json", "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("timing_seconds") == std::string::npos);
  CHECK(run({"census", "--n-max", "5", "--format", "json", "--timing"}).out.find("timing_seconds") !=
        std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "signedpat_cli_census.csv";
  CHECK(run({"census", "--n-max", "4", "--format", "csv", "--out", path.string()}).out.empty());
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"count", "--n", "2"}).code == 2);
  CHECK(run({"count", "--patterns", "1 3", "--n", "2"}).code == 2);
  CHECK(run({"count", "--patterns", "1 2", "--n", "10"}).code == 2);
  CHECK(run({"count", "--patterns", "1 2, 2 1, -1 2, 1 -2, -1 -2, 2 -1, -2 1, -2 -1", "--n", "10", "--cap", "10"}).out == "0\n");
  CHECK(run({"count", "--patterns", "1 2", "--n", "2", "--method", "fast"}).code == 2);
  CHECK(run({"verify", "--n-max", "3", "--mutate", "EQ99"}).code == 2);
  CHECK(run({"orbits", "--size", "9"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("duplicate patterns warn") {
  const Outcome o = run({"count", "--patterns", "1 2, 1 2", "--n", "3"});
  CHECK(o.out == "34\n");
  CHECK(o.err.find("warning") != std::string::npos);
}
