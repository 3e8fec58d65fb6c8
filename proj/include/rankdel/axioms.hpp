#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankdel/instance.hpp"
#include "rankdel/rational.hpp"
#include "rankdel/resolver.hpp"
#include "rankdel/rng.hpp"
#include "rankdel/rules.hpp"

namespace rankdel {

/// Relative voting weight per casting voter: (delegations received + 1)
/// divided by the number of non-isolated voters. Exact rationals; the weights
/// sum to 1 once every delegating voter is resolved.
using WeightVector = std::map<VoterId, Rational>;

WeightVector weights(const Instance& inst, const Resolution& res);

/// Instance surgery used by the axiom definitions.
Instance remove_out_edges(const Instance& inst, VoterId v);
Instance promote_to_casting(const Instance& inst, VoterId v);
Instance add_isolated_casting_voter(const Instance& inst);

enum class MajorityOutcome { Zero, Tie, One };

/// Weighted majority on a binary issue; ballots[c] in {0,1} for casting
/// voters. A total weight of exactly one half is a tie.
MajorityOutcome majority_outcome(const Instance& inst, const Resolution& res,
                                 const std::vector<int>& ballots);

struct AxiomWitness {
  std::string instance_text;  // v1 format
  std::string voter;
  std::string detail;
};

/// Removing v's outgoing edges must not raise any non-guru casting weight.
/// Returns the first violating casting voter, or nothing on pass.
std::optional<AxiomWitness> check_guru_participation(const RuleSpec& rule,
                                                     const Instance& inst, VoterId v);

/// The two-stage variant: v's guru must weakly prefer the election outcome
/// with v participating over the one where v abstains.
std::optional<AxiomWitness> check_guru_participation_star(
    const RuleSpec& rule, const Instance& inst, VoterId v,
    const std::vector<int>& ballots);

/// A length-one delegator turning caster must leave the joint weight of
/// itself and its former guru unchanged. Throws PreconditionUnmet when v's
/// path is longer than one edge.
std::optional<AxiomWitness> check_copy_robustness(const RuleSpec& rule,
                                                  const Instance& inst, VoterId v);

/// Adding a casting voter nobody points to must not change any chosen path.
std::optional<AxiomWitness> check_iic(const RuleSpec& rule, const Instance& inst);

enum class Axiom { GuruParticipation, GuruParticipationStar, CopyRobustness, Iic };

std::string to_string(Axiom axiom);
Axiom parse_axiom(const std::string& name);

/// Random instances for axiom falsification: n uniform in 4..12, out-degree
/// uniform in 1..3, casting probability 0.3 (at least one casting voter).
struct AxiomSampleParams {
  int n_min = 4;
  int n_max = 12;
  int max_out_degree = 3;
  double casting_fraction = 0.3;
};

Instance sample_instance(SplitMix64& rng, const AxiomSampleParams& params = {});

struct AxiomReport {
  std::string axiom;
  std::string rule;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomWitness> violations;

  bool passed() const { return violations.empty(); }
  std::string to_json() const;
};

/// Runs `trials` randomized checks (for copy-robustness: eligible trials,
/// i.e. sampled voters whose path has length one). Violations do not stop
/// the run; they accumulate in the report.
AxiomReport run_axiom_trials(const RuleSpec& rule, Axiom axiom, int trials,
                             std::uint64_t seed,
                             const AxiomSampleParams& params = {});

}  // namespace rankdel
