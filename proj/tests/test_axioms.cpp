#include <algorithm>

#include "doctest.h"
#include "rankdel/axioms.hpp"
#include "support.hpp"

using namespace rankdel;
using rankdel::test::fig1;
using rankdel::test::load_fixture;
using rankdel::test::vid;

namespace {

std::vector<RuleSpec> confluent_rules() {
  std::vector<RuleSpec> out;
  for (const auto& r : all_rules())
    if (r.confluent()) out.push_back(r);
  out.push_back(parse_rule("wsum:1=1,2=3,3=7"));  // a weighted-sum representative
  return out;
}

/// Tries to turn a guru-participation weight violation into a starred one:
/// pad with isolated casting voters until the original election ties exactly
/// at the dropping caster, who votes against everyone else. Returns true if
/// some dropping caster yields a strict starred violation.
bool star_violation_from_weights(const RuleSpec& rule, const Instance& inst,
                                 VoterId v) {
  const Resolution res = resolve_rule(inst, rule);
  const WeightVector before = weights(inst, res);
  const Instance removed = remove_out_edges(inst, v);
  const WeightVector after = weights(removed, resolve_rule(removed, rule));
  const VoterId guru = res.path(v).terminal();

  const auto cls = classify(inst);
  long long non_isolated = 0;
  for (auto c : cls) non_isolated += c != VoterClass::Isolated;

  for (const auto& [dropping, wu] : before) {
    if (dropping == guru) continue;
    const auto it = after.find(dropping);
    if (it != after.end() && wu <= it->second) continue;

    // absolute weight z = w * (|C| + |D|); pad with y dummies so that
    // 2z(dropping) = |C| + |D| + y
    const long long z = boost::multiprecision::numerator(wu * Rational(non_isolated))
                            .convert_to<long long>();
    const long long y =
        non_isolated >= 2 * z ? non_isolated - 2 * z : 2 * z - non_isolated;
    Instance padded = inst;
    for (long long i = 0; i < y; ++i) padded = add_isolated_casting_voter(padded);
    std::vector<int> ballots(padded.n, 0);
    for (VoterId c = 0; c < padded.n; ++c)
      if (padded.casting[c]) ballots[c] = 1;
    ballots[dropping] = 0;
    if (non_isolated >= 2 * z)  // dummies side with the dropping caster
      for (VoterId c = inst.n; c < padded.n; ++c) ballots[c] = 0;
    if (check_guru_participation_star(rule, padded, v, ballots).has_value())
      return true;
  }
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("axioms");

TEST_CASE("weights on fig1") {
  const Instance inst = fig1();
  const VoterId i = vid(inst, "i"), j = vid(inst, "j"), k = vid(inst, "k");

  const WeightVector diff = weights(inst, resolve_confluent(inst, SeqOrder::diffusion()));
  CHECK(diff.at(j) == Rational(7, 9));
  CHECK(diff.at(i) == Rational(1, 9));
  CHECK(diff.at(k) == Rational(1, 9));

  const WeightVector bfd = weights(inst, resolve_confluent(inst, SeqOrder::bfd()));
  CHECK(bfd.at(i) == Rational(4, 9));
  CHECK(bfd.at(j) == Rational(2, 9));
  CHECK(bfd.at(k) == Rational(3, 9));

  Rational total = 0;
  for (const auto& [c, w] : bfd) total += w;
  CHECK(total == 1);
}

TEST_CASE("weights without delegators split evenly") {
  const Instance inst = make_instance(3, {{}, {}, {}}, {true, true, true});
  const Resolution empty{"bfd", std::vector<std::optional<Path>>(3)};
  const WeightVector w = weights(inst, empty);
  for (const auto& [c, wc] : w) CHECK(wc == Rational(1, 3));
}

TEST_CASE("guru-participation holds for confluent rules on random instances") {
  SplitMix64 rng(7771);
  for (const auto& rule : confluent_rules()) {
    int done = 0;
    while (done < 150) {
      const Instance inst = sample_instance(rng);
      const Resolution res = resolve_rule(inst, rule);
      const auto dels = res.delegators();
      if (dels.empty()) continue;
      ++done;
      const VoterId v = dels[rng.below(dels.size())];
      CHECK_FALSE(check_guru_participation(rule, inst, v).has_value());
    }
  }
}

TEST_CASE("dfd violates guru-participation on the archived fixture") {
  const Instance inst = load_fixture("dfd_guru_violation.txt");
  const auto witness = check_guru_participation(parse_rule("dfd"), inst, 2);
  REQUIRE(witness.has_value());
  CHECK(witness->voter == "2");

  // randomized falsification finds violations for dfd too
  const AxiomReport report =
      run_axiom_trials(parse_rule("dfd"), Axiom::GuruParticipation, 400, 2);
  CHECK_FALSE(report.passed());
}

TEST_CASE("guru-participation implies the starred variant case by case") {
  SplitMix64 rng(31);
  const auto rules = all_rules();
  int done = 0;
  while (done < 300) {
    const Instance inst = sample_instance(rng);
    const RuleSpec& rule = rules[rng.below(rules.size())];
    const Resolution res = resolve_rule(inst, rule);
    const auto dels = res.delegators();
    if (dels.empty()) continue;
    const VoterId v = dels[rng.below(dels.size())];
    if (check_guru_participation(rule, inst, v).has_value()) continue;
    ++done;
    std::vector<int> ballots(inst.n, 0);
    for (VoterId c = 0; c < inst.n; ++c)
      if (inst.casting[c]) ballots[c] = static_cast<int>(rng.below(2));
    CHECK_FALSE(check_guru_participation_star(rule, inst, v, ballots).has_value());
  }
}

TEST_CASE("a dfd weight violation extends to a starred violation") {
  const Instance inst = load_fixture("dfd_gurustar_violation.txt");
  const RuleSpec dfd = parse_rule("dfd");
  REQUIRE(check_guru_participation(dfd, inst, 0).has_value());
  CHECK(star_violation_from_weights(dfd, inst, 0));
}

TEST_CASE("confluent sequence rules fail copy-robustness on the ring fixture") {
  const Instance ring = load_fixture("copy_ring.txt");
  const VoterId u = vid(ring, "u"), s = vid(ring, "s");

  // borda stays exempt: it is confluent but not a sequence rule, and it
  // keeps the joint weight intact here
  for (const auto& rule : confluent_rules()) {
    if (!rule.is_sequence_rule()) continue;
    CAPTURE(rule.name());
    const Resolution res = resolve_rule(ring, rule);
    REQUIRE(res.path(u).length() == 1);
    CHECK(res.path(u).terminal() == s);
    const auto witness = check_copy_robustness(rule, ring, u);
    CHECK(witness.has_value());
  }
  CHECK_FALSE(check_copy_robustness(parse_rule("borda"), ring, u).has_value());

  // the exact weights of the bfd violation
  const Resolution bfd = resolve_rule(ring, parse_rule("bfd"));
  CHECK(weights(ring, bfd).at(s) == Rational(2, 4));
  const Instance promoted = promote_to_casting(ring, u);
  const WeightVector after =
      weights(promoted, resolve_rule(promoted, parse_rule("bfd")));
  CHECK(after.at(s) == Rational(1, 4));
  CHECK(after.at(u) == Rational(2, 4));
}

TEST_CASE("dfd and borda satisfy copy-robustness on random eligible pairs") {
  for (const char* name : {"dfd", "borda"}) {
    const RuleSpec rule = parse_rule(name);
    SplitMix64 rng(name[0]);
    int done = 0;
    while (done < 200) {
      const Instance inst = sample_instance(rng);
      const Resolution res = resolve_rule(inst, rule);
      const auto dels = res.delegators();
      if (dels.empty()) continue;
      const VoterId v = dels[rng.below(dels.size())];
      if (res.path(v).length() != 1) continue;
      ++done;
      CAPTURE(name);
      CHECK_FALSE(check_copy_robustness(rule, inst, v).has_value());
    }
  }
}

TEST_CASE("copy-robustness precondition") {
  const Instance inst = fig1();
  CHECK_THROWS_AS(check_copy_robustness(parse_rule("bfd"), inst, vid(inst, "a")),
                  PreconditionUnmet);
}

TEST_CASE("iic passes for every rule") {
  const Instance inst = fig1();
  for (const auto& rule : all_rules())
    CHECK_FALSE(check_iic(rule, inst).has_value());

  SplitMix64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance sampled = sample_instance(rng);
    for (const auto& rule : all_rules())
      CHECK_FALSE(check_iic(rule, sampled).has_value());
  }

  const Instance no_dels = make_instance(2, {{}, {}}, {true, true});
  CHECK_FALSE(check_iic(parse_rule("bfd"), no_dels).has_value());
}

TEST_CASE("axiom trial harness reports and serializes") {
  const AxiomReport ok =
      run_axiom_trials(parse_rule("bfd"), Axiom::GuruParticipation, 50, 9);
  CHECK(ok.passed());
  CHECK(ok.trials == 50);

  const AxiomReport bad =
      run_axiom_trials(parse_rule("bfd"), Axiom::CopyRobustness, 100, 9);
  CHECK_FALSE(bad.passed());
  const std::string json = bad.to_json();
  CHECK(json.find("\"axiom\"") != std::string::npos);
  CHECK(json.find("\"violations\"") != std::string::npos);

  // archived violations replay from their serialized instance text
  const Instance replay = parse_instance_text(bad.violations.front().instance_text);
  CHECK(replay.n >= 4);
}

TEST_CASE("sampled instances respect the documented shape") {
  SplitMix64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = sample_instance(rng);
    CHECK(inst.n >= 4);
    CHECK(inst.n <= 12);
    bool any_casting = false;
    for (VoterId v = 0; v < inst.n; ++v) {
      any_casting = any_casting || inst.casting[v];
      if (!inst.casting[v]) {
        CHECK(inst.out_degree(v) >= 1);
        CHECK(inst.out_degree(v) <= 3);
      }
    }
    CHECK(any_casting);
  }
}

TEST_SUITE_END();
