#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rankdel/cli.hpp"
#include "support.hpp"

using namespace rankdel;
using rankdel::test::data_path;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
  return std::string("/tmp/rankdel_test_") + name;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("resolve prints per-voter paths") {
  const auto run =
      cli({"resolve", "--instance", data_path("fig1.txt"), "--rule", "bfd"});
  CHECK(run.code == 0);
  CHECK(run.out.find("a: a -> b -> c -> i [seq: (1,1,3)]") != std::string::npos);

  const auto minsum =
      cli({"resolve", "--instance", data_path("fig1.txt"), "--rule", "minsum"});
  CHECK(minsum.out.find("a: a -> b -> c -> d -> j") != std::string::npos);

  const auto json = cli({"resolve", "--instance", data_path("fig1.txt"), "--rule",
                         "bfd", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"sequence\"") != std::string::npos);
}

TEST_CASE("resolve exit codes") {
  const auto missing = cli({"resolve", "--instance", "/no/such/file", "--rule", "bfd"});
  CHECK(missing.code == 2);
  CHECK_FALSE(missing.err.empty());

  const auto bad_rule =
      cli({"resolve", "--instance", data_path("fig1.txt"), "--rule", "plurality"});
  CHECK(bad_rule.code == 4);

  const auto bad_flag = cli({"resolve", "--nope"});
  CHECK(bad_flag.code == 4);
}

TEST_CASE("metrics emits one csv row per rule") {
  const auto run = cli({"metrics", "--instance", data_path("fig1.txt"), "--rule",
                        "all"});
  CHECK(run.code == 0);
  std::istringstream lines(run.out);
  std::string line;
  int rows = 0;
  bool saw_header = false;
  while (std::getline(lines, line)) {
    if (line.rfind("instance,", 0) == 0) {
      saw_header = true;
      continue;
    }
    if (!line.empty()) ++rows;
  }
  CHECK(saw_header);
  CHECK(rows == 6);

  // dfd rows leave the confluent-only columns empty
  const auto dfd = cli({"metrics", "--instance", data_path("fig1.txt"), "--rule",
                        "dfd"});
  CHECK(dfd.out.find(",,") != std::string::npos);
}

TEST_CASE("metrics over a generated batch aggregates") {
  const auto run = cli({"metrics", "--gen", "friendship", "--n", "40", "--pc", "0.3",
                        "--delta", "3", "--alpha", "1", "--count", "5", "--seed",
                        "3", "--rule", "bfd"});
  CHECK(run.code == 0);
  CHECK(run.out.find("mean,bfd,") != std::string::npos);

  CHECK(cli({"metrics", "--rule", "bfd"}).code == 4);  // no instance, no generator
}

TEST_CASE("generators accept a base edge list") {
  const std::string base_path = temp_file("base.txt");
  {
    std::ofstream base(base_path);
    base << "# trust scores\n";
    for (int u = 0; u < 12; ++u)
      for (int v = 0; v < 12; ++v)
        if (u != v) base << u << ' ' << v << ' ' << ((u + v) % 5) - 1 << ".5\n";
  }
  const auto gen = cli({"generate", "weight", "--base", base_path, "--pc", "0.25",
                        "--seed", "2"});
  CHECK(gen.code == 0);
  CHECK(gen.out.find("voters: 12") != std::string::npos);

  const auto prom = cli({"metrics", "--gen", "prominence-base", "--base", base_path,
                         "--pc", "0.25", "--seed", "1", "--rule", "bfd"});
  CHECK(prom.code == 0);
  std::remove(base_path.c_str());

  const auto missing = cli({"generate", "prominence-base", "--n", "10"});
  CHECK(missing.code == 4);
}

TEST_CASE("generate writes a deterministic instance and reports participation") {
  const std::string path = temp_file("gen.txt");
  const auto run = cli({"generate", "friendship", "--n", "100", "--delta", "4",
                        "--pc", "0.2", "--alpha", "2", "--seed", "7", "--out", path});
  CHECK(run.code == 0);
  CHECK(run.out.find("participation rate:") != std::string::npos);

  std::ifstream f(path);
  std::stringstream first;
  first << f.rdbuf();

  const auto again = cli({"generate", "friendship", "--n", "100", "--delta", "4",
                          "--pc", "0.2", "--alpha", "2", "--seed", "7", "--out",
                          path});
  CHECK(again.code == 0);
  std::ifstream f2(path);
  std::stringstream second;
  second << f2.rdbuf();
  CHECK(first.str() == second.str());
  std::remove(path.c_str());

  const auto to_stdout =
      cli({"generate", "weight", "--n", "30", "--delta", "3", "--pc", "0.1",
           "--seed", "1"});
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.out.find("casting:") != std::string::npos);
  CHECK(to_stdout.err.find("participation rate:") != std::string::npos);
}

TEST_CASE("generate rejects bad configs with exit 4") {
  CHECK(cli({"generate", "friendship", "--n", "10", "--pc", "1.5"}).code == 4);
  CHECK(cli({"generate", "sociogram", "--n", "10"}).code == 4);
}

TEST_CASE("axioms exit code tracks violations") {
  const auto pass = cli({"axioms", "--rule", "bfd", "--axiom", "guru", "--trials",
                         "120", "--seed", "5"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("\"violations\": []") != std::string::npos);

  const auto fail = cli({"axioms", "--rule", "bfd", "--axiom", "copy", "--trials",
                         "150", "--seed", "5"});
  CHECK(fail.code == 1);

  const auto dfd_copy = cli({"axioms", "--rule", "dfd", "--axiom", "copy",
                             "--trials", "150", "--seed", "5"});
  CHECK(dfd_copy.code == 0);

  CHECK(cli({"axioms", "--rule", "bfd", "--axiom", "monotonicity"}).code == 4);
}

TEST_CASE("unpop command") {
  const auto run = cli({"unpop", "--instance", data_path("fig1.txt"), "--rule",
                        "borda"});
  CHECK(run.code == 0);
  CHECK(run.out.find("mu:") != std::string::npos);
  CHECK(run.out.find("popular:") != std::string::npos);

  const auto dfd = cli({"unpop", "--instance", data_path("fig1.txt"), "--rule",
                        "dfd"});
  CHECK(dfd.code == 3);
}

TEST_CASE("experiment runs from a json config") {
  const std::string cfg_path = temp_file("exp.json");
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({
      "generator": {"method": "friendship", "n": 40, "pc": 0.25,
                     "delta": 3, "alpha": 2, "seed": 17},
      "instances": 6,
      "rules": ["bfd", "borda"],
      "truncation_caps": [0, 1, 2]
    })";
  }
  const auto run = cli({"experiment", "--config", cfg_path});
  std::remove(cfg_path.c_str());
  CHECK(run.code == 0);
  CHECK(run.out.find("mean,bfd,") != std::string::npos);
  CHECK(run.out.find("mean,borda,") != std::string::npos);
  CHECK(run.out.find("# popular borda:") != std::string::npos);
  CHECK(run.out.find("# isolated d=1:") != std::string::npos);

  CHECK(cli({"experiment", "--config", "/no/such.json"}).code == 4);
}

TEST_CASE("borda priority override changes the tie-break") {
  const auto def = cli({"resolve", "--instance", data_path("copy_ring.txt"),
                        "--rule", "borda"});
  CHECK(def.code == 0);
  CHECK(def.out.find("u: u -> s") != std::string::npos);

  // listing u first hands it the rank-1 edge instead
  const auto flipped = cli({"resolve", "--instance", data_path("copy_ring.txt"),
                            "--rule", "borda", "--priority", "u"});
  CHECK(flipped.code == 0);
  CHECK(flipped.out.find("u: u -> v -> t") != std::string::npos);

  const auto bad = cli({"resolve", "--instance", data_path("copy_ring.txt"),
                        "--rule", "borda", "--priority", "nobody"});
  CHECK(bad.code == 4);
  const auto wrong_rule = cli({"resolve", "--instance", data_path("copy_ring.txt"),
                               "--rule", "bfd", "--priority", "u"});
  CHECK(wrong_rule.code == 4);
}

TEST_CASE("wsum rules parse through the cli") {
  const auto run = cli({"resolve", "--instance", data_path("fig1.txt"), "--rule",
                        "wsum:1=1,2=3,3=7"});
  CHECK(run.code == 0);
  const auto bad = cli({"resolve", "--instance", data_path("fig1.txt"), "--rule",
                        "wsum:2=1"});
  CHECK(bad.code == 4);
}

TEST_SUITE_END();
