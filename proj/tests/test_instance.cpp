#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "rankdel/instance.hpp"
#include "rankdel/io.hpp"
#include "rankdel/rng.hpp"
#include "support.hpp"

using namespace rankdel;
using rankdel::test::fig1;
using rankdel::test::path_names;
using rankdel::test::vid;

TEST_SUITE_BEGIN("instance");

TEST_CASE("fig1 loads with the expected shape") {
  const Instance inst = fig1();
  CHECK(inst.n == 11);
  CHECK(inst.edge_count() == 14);
  CHECK(inst.casting[vid(inst, "i")]);
  CHECK(inst.casting[vid(inst, "j")]);
  CHECK(inst.casting[vid(inst, "k")]);
  // f ranks e, g, h, k in that order
  const VoterId f = vid(inst, "f");
  REQUIRE(inst.out_degree(f) == 4);
  CHECK(inst.name(inst.targets[f][0]) == "e");
  CHECK(inst.name(inst.targets[f][3]) == "k");
  CHECK(inst.edge_ranks[f] == std::vector<Rank>{1, 2, 3, 4});
}

TEST_CASE("classify partitions fig1") {
  const Instance inst = fig1();
  const auto cls = classify(inst);
  for (const char* name : {"a", "b", "c", "d", "e", "f"})
    CHECK(cls[vid(inst, name)] == VoterClass::Delegating);
  for (const char* name : {"g", "h"})
    CHECK(cls[vid(inst, name)] == VoterClass::Isolated);
  for (const char* name : {"i", "j", "k"})
    CHECK(cls[vid(inst, name)] == VoterClass::Casting);
}

TEST_CASE("classify without edges") {
  const Instance inst = make_instance(4, {{}, {}, {}, {}}, {true, false, false, false});
  const auto cls = classify(inst);
  CHECK(cls[0] == VoterClass::Casting);
  CHECK(cls[1] == VoterClass::Isolated);
  CHECK(cls[2] == VoterClass::Isolated);
  CHECK(cls[3] == VoterClass::Isolated);
}

TEST_CASE("single direct edge delegates") {
  const Instance inst = make_instance(2, {{1}, {}}, {false, true});
  CHECK(classify(inst)[0] == VoterClass::Delegating);
}

TEST_CASE("classify is stable under relabeling") {
  const Instance inst = fig1();
  // Relabel by reversing ids; classes must follow the permutation.
  std::vector<VoterId> perm(inst.n);
  for (VoterId v = 0; v < inst.n; ++v) perm[v] = inst.n - 1 - v;
  std::vector<std::vector<VoterId>> targets(inst.n);
  std::vector<bool> casting(inst.n);
  for (VoterId v = 0; v < inst.n; ++v) {
    casting[perm[v]] = inst.casting[v];
    for (VoterId w : inst.targets[v]) targets[perm[v]].push_back(perm[w]);
  }
  const Instance relabeled = make_instance(inst.n, targets, casting);
  const auto cls = classify(inst);
  const auto cls2 = classify(relabeled);
  for (VoterId v = 0; v < inst.n; ++v) CHECK(cls[v] == cls2[perm[v]]);
}

TEST_CASE("reduce drops isolated voters and keeps ranks") {
  const Instance inst = fig1();
  const Reduction red = reduce(inst);
  CHECK(red.instance.n == 9);
  CHECK(red.from_original[vid(inst, "g")] == -1);
  CHECK(red.from_original[vid(inst, "h")] == -1);

  const VoterId f = red.from_original[vid(inst, "f")];
  REQUIRE(red.instance.out_degree(f) == 2);
  CHECK(red.instance.name(red.instance.targets[f][0]) == "e");
  CHECK(red.instance.name(red.instance.targets[f][1]) == "k");
  // the point of reduction: f -> k keeps its original rank 4
  CHECK(red.instance.edge_ranks[f] == std::vector<Rank>{1, 4});

  // reducing again changes nothing
  const Reduction red2 = reduce(red.instance);
  CHECK(red2.instance.n == red.instance.n);
  CHECK(red2.instance.targets == red.instance.targets);
  CHECK(red2.instance.edge_ranks == red.instance.edge_ranks);

  const auto cls = classify(red.instance);
  CHECK(std::none_of(cls.begin(), cls.end(),
                     [](VoterClass c) { return c == VoterClass::Isolated; }));
}

TEST_CASE("reduce of an instance with all non-casting isolated") {
  const Instance inst = make_instance(3, {{}, {2}, {1}}, {true, false, false});
  const Reduction red = reduce(inst);
  CHECK(red.instance.n == 1);
  CHECK(red.instance.casting[0]);
}

TEST_CASE("paths_from enumerates fig1 exactly") {
  const Instance inst = fig1();
  const auto paths = paths_from(inst, vid(inst, "d"));
  std::set<std::string> got;
  for (const auto& p : paths) got.insert(path_names(inst, p));
  CHECK(got == std::set<std::string>{"d,j", "d,e,b,c,i", "d,e,f,k"});

  CHECK(paths_from(inst, vid(inst, "g")).empty());

  const Instance tiny = make_instance(2, {{1}, {}}, {false, true});
  const auto tp = paths_from(tiny, 0);
  REQUIRE(tp.size() == 1);
  CHECK(tp[0].length() == 1);
}

TEST_CASE("paths_from respects the budget") {
  // Layered graph with many paths: 2^10 simple paths to the caster.
  const int layers = 10;
  std::vector<std::vector<VoterId>> targets(2 * layers + 2);
  std::vector<bool> casting(2 * layers + 2, false);
  casting[2 * layers + 1] = true;
  // node 0 is the start; nodes 2i+1, 2i+2 form layer i
  for (int i = 0; i < layers; ++i) {
    const int a = 2 * i + 1, b = 2 * i + 2;
    const int na = 2 * (i + 1) + 1, nb = 2 * (i + 1) + 2;
    for (int from : {a, b}) {
      if (i + 1 < layers)
        targets[from] = {na, nb};
      else
        targets[from] = {2 * layers + 1};
    }
  }
  targets[0] = {1, 2};
  const Instance inst = make_instance(2 * layers + 2, targets, casting);
  CHECK(paths_from(inst, 0).size() == 1024);
  CHECK_THROWS_AS(paths_from(inst, 0, 100), BudgetExceeded);
}

TEST_CASE("delegating voters have paths, isolated voters none") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    std::vector<std::vector<VoterId>> targets(n);
    std::vector<bool> casting(n, false);
    casting[0] = true;
    for (int v = 1; v < n; ++v) {
      const int deg = static_cast<int>(rng.below(3));
      std::set<VoterId> t;
      while (static_cast<int>(t.size()) < deg) {
        const auto w = static_cast<VoterId>(rng.below(n));
        if (w != v) t.insert(w);
      }
      targets[v].assign(t.begin(), t.end());
    }
    const Instance inst = make_instance(n, targets, casting);
    const auto cls = classify(inst);
    for (VoterId v = 0; v < n; ++v) {
      if (cls[v] == VoterClass::Casting) continue;
      const bool has_path = !paths_from(inst, v).empty();
      CHECK(has_path == (cls[v] == VoterClass::Delegating));
    }
  }
}

TEST_CASE("sequence_of maps ranks in order") {
  const Instance inst = fig1();
  const auto paths = paths_from(inst, vid(inst, "a"));
  for (const auto& p : paths) {
    const Sequence s = sequence_of(p);
    CHECK(s.size() == p.length());
    if (path_names(inst, p) == "a,b,c,d,e,f,k")
      CHECK(s == Sequence{1, 1, 1, 1, 2, 4});
    if (path_names(inst, p) == "a,b,c,i") CHECK(s == Sequence{1, 1, 3});
  }
  CHECK(sequence_of(Path{}).empty());
}

TEST_CASE("instance validation rejects bad inputs") {
  CHECK_THROWS_AS(make_instance(2, {{0}, {}}, {false, true}), InvalidInstance);
  CHECK_THROWS_AS(make_instance(3, {{1, 1}, {}, {}}, {false, true, true}),
                  InvalidInstance);
  CHECK_THROWS_AS(make_instance(2, {{1}, {0}}, {false, true}), InvalidInstance);
  CHECK_THROWS_AS(make_instance(2, {{5}, {}}, {false, true}), InvalidInstance);
  // more per-voter rows than voters
  CHECK_THROWS_AS(make_instance(2, {{1}, {}, {0}}, {false, true}), InvalidInstance);
}

TEST_CASE("text format round-trips") {
  const Instance inst = fig1();
  const Instance back = parse_instance_text(to_text(inst));
  CHECK(back.n == inst.n);
  CHECK(back.targets == inst.targets);
  CHECK(back.casting == inst.casting);
  CHECK(back.names == inst.names);
}

TEST_CASE("id-based format and abstainers") {
  const Instance inst = parse_instance_text("voters: 4\ncasting: 3\n0: 1 3\n1:\n");
  CHECK(inst.n == 4);
  CHECK_FALSE(inst.has_names());
  CHECK(inst.out_degree(0) == 2);
  CHECK(inst.out_degree(1) == 0);  // declared abstainer
  CHECK(inst.out_degree(2) == 0);  // never mentioned
  const Instance back = parse_instance_text(to_text(inst));
  CHECK(back.targets == inst.targets);
}

TEST_CASE("json mirror parses the same instance") {
  const std::string json = R"({
    "casting": ["i", "j", "k"],
    "delegations": {
      "a": ["b"], "b": ["c"], "c": ["d", "b", "i"], "d": ["e", "j"],
      "e": ["b", "f"], "f": ["e", "g", "h", "k"], "g": ["h"], "h": []
    }
  })";
  const Instance inst = parse_instance_json(json);
  CHECK(inst.n == 11);
  const auto cls = classify(inst);
  CHECK(cls[vid(inst, "g")] == VoterClass::Isolated);
}

TEST_CASE("edge lists parse with optional weights and comments") {
  std::istringstream in("# base graph\n0 1\n1 2 0.75\n\n2 0 -3\n");
  const EdgeList el = parse_edge_list(in);
  CHECK(el.n == 3);
  REQUIRE(el.edges.size() == 3);
  CHECK(el.edges[0].weight == 1.0);
  CHECK(el.edges[1].weight == 0.75);
  CHECK(el.edges[2].weight == -3.0);

  std::istringstream bad("0 1 2 3\n");
  CHECK_THROWS_AS(parse_edge_list(bad), ParseError);
  std::istringstream negative("-1 0\n");
  CHECK_THROWS_AS(parse_edge_list(negative), ParseError);
  CHECK_THROWS_AS(load_edge_list("/no/such/edges.txt"), ParseError);
}

TEST_CASE("load_instance dispatches on the file extension") {
  const std::string path = "/tmp/rankdel_ext_test.json";
  {
    std::ofstream f(path);
    f << R"({"casting": ["c"], "delegations": {"v": ["c"]}})";
  }
  const Instance inst = load_instance(path);
  std::remove(path.c_str());
  CHECK(inst.n == 2);
  CHECK(inst.casting[vid(inst, "c")]);
  CHECK(classify(inst)[vid(inst, "v")] == VoterClass::Delegating);
}

TEST_CASE("parse errors carry diagnostics") {
  CHECK_THROWS_AS(parse_instance_text("a: b\n"), ParseError);        // no casting line
  CHECK_THROWS_AS(parse_instance_text("casting: c\nc: d\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_text("casting: c\nv: v\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_text("voters: 2\ncasting: 1\n0: 7\n"), ParseError);
  CHECK_THROWS_AS(load_instance("/definitely/not/here.txt"), ParseError);
}

TEST_SUITE_END();
