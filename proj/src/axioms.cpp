#include "rankdel/axioms.hpp"

#include <algorithm>

#include "json.hpp"
#include "rankdel/io.hpp"

namespace rankdel {

WeightVector weights(const Instance& inst, const Resolution& res) {
  const auto cls = classify(inst);
  long long casting_count = 0, delegating_count = 0;
  for (VoterId v = 0; v < inst.n; ++v) {
    if (cls[v] == VoterClass::Casting) ++casting_count;
    if (cls[v] == VoterClass::Delegating) {
      ++delegating_count;
      if (static_cast<std::size_t>(v) >= res.paths.size() || !res.paths[v])
        throw InvalidInstance("resolution does not cover delegating voter " +
                              inst.name(v));
    }
  }
  if (casting_count == 0)
    throw InvalidInstance("weights need at least one casting voter");

  const Rational denom(casting_count + delegating_count);
  WeightVector w;
  for (VoterId v = 0; v < inst.n; ++v)
    if (cls[v] == VoterClass::Casting) w[v] = Rational(1) / denom;
  for (VoterId v = 0; v < inst.n; ++v)
    if (cls[v] == VoterClass::Delegating)
      w[res.paths[v]->terminal()] += Rational(1) / denom;
  return w;
}

Instance remove_out_edges(const Instance& inst, VoterId v) {
  Instance out = inst;
  out.targets[v].clear();
  out.edge_ranks[v].clear();
  return out;
}

Instance promote_to_casting(const Instance& inst, VoterId v) {
  Instance out = remove_out_edges(inst, v);
  out.casting[v] = true;
  return out;
}

Instance add_isolated_casting_voter(const Instance& inst) {
  Instance out = inst;
  out.n += 1;
  out.targets.emplace_back();
  out.edge_ranks.emplace_back();
  out.casting.push_back(true);
  if (out.has_names()) {
    std::string name = "fresh";
    while (std::find(out.names.begin(), out.names.end(), name) != out.names.end())
      name += "'";
    out.names.push_back(name);
  }
  return out;
}

MajorityOutcome majority_outcome(const Instance& inst, const Resolution& res,
                                 const std::vector<int>& ballots) {
  if (ballots.size() != static_cast<std::size_t>(inst.n))
    throw ConfigError("ballots must cover every voter id");
  const WeightVector w = weights(inst, res);
  Rational ones = 0;
  for (const auto& [c, wc] : w) {
    if (ballots[c] != 0 && ballots[c] != 1)
      throw ConfigError("ballots must be 0 or 1 for every casting voter");
    if (ballots[c] == 1) ones += wc;
  }
  const Rational half(1, 2);
  if (ones > half) return MajorityOutcome::One;
  if (ones < half) return MajorityOutcome::Zero;
  return MajorityOutcome::Tie;
}

namespace {

VoterId guru_of(const Resolution& res, VoterId v) { return res.paths[v]->terminal(); }

Rational weight_or_zero(const WeightVector& w, VoterId v) {
  auto it = w.find(v);
  return it == w.end() ? Rational(0) : it->second;
}

int outcome_value(MajorityOutcome o, int ballot) {
  const int v = o == MajorityOutcome::Zero ? 0 : (o == MajorityOutcome::Tie ? 1 : 2);
  return ballot == 1 ? v : 2 - v;
}

std::string describe(MajorityOutcome o) {
  switch (o) {
    case MajorityOutcome::Zero: return "0";
    case MajorityOutcome::Tie: return "tie";
    case MajorityOutcome::One: return "1";
  }
  return "?";
}

}  // namespace

std::optional<AxiomWitness> check_guru_participation(const RuleSpec& rule,
                                                     const Instance& inst, VoterId v) {
  const Resolution before = resolve_rule(inst, rule);
  if (static_cast<std::size_t>(v) >= before.paths.size() || !before.paths[v])
    throw PreconditionUnmet("guru-participation needs a delegating voter");
  const VoterId guru = guru_of(before, v);

  const Instance removed = remove_out_edges(inst, v);
  const WeightVector w_before = weights(inst, before);
  const WeightVector w_after = weights(removed, resolve_rule(removed, rule));

  for (const auto& [u, wu] : w_before) {
    if (u == guru) continue;
    if (wu > weight_or_zero(w_after, u)) {
      AxiomWitness wit;
      wit.instance_text = to_text(inst);
      wit.voter = inst.name(v);
      wit.detail = "casting voter " + inst.name(u) + " drops from " + wu.str() +
                   " to " + weight_or_zero(w_after, u).str() +
                   " when " + inst.name(v) + " abstains";
      return wit;
    }
  }
  return std::nullopt;
}

std::optional<AxiomWitness> check_guru_participation_star(
    const RuleSpec& rule, const Instance& inst, VoterId v,
    const std::vector<int>& ballots) {
  const Resolution before = resolve_rule(inst, rule);
  if (static_cast<std::size_t>(v) >= before.paths.size() || !before.paths[v])
    throw PreconditionUnmet("guru-participation* needs a delegating voter");
  const VoterId guru = guru_of(before, v);

  const Instance removed = remove_out_edges(inst, v);
  const MajorityOutcome o = majority_outcome(inst, before, ballots);
  const MajorityOutcome o2 =
      majority_outcome(removed, resolve_rule(removed, rule), ballots);

  if (outcome_value(o, ballots[guru]) < outcome_value(o2, ballots[guru])) {
    AxiomWitness wit;
    wit.instance_text = to_text(inst);
    wit.voter = inst.name(v);
    wit.detail = "guru " + inst.name(guru) + " prefers outcome " + describe(o2) +
                 " (after " + inst.name(v) + " abstains) over " + describe(o);
    return wit;
  }
  return std::nullopt;
}

std::optional<AxiomWitness> check_copy_robustness(const RuleSpec& rule,
                                                  const Instance& inst, VoterId v) {
  const Resolution before = resolve_rule(inst, rule);
  if (static_cast<std::size_t>(v) >= before.paths.size() || !before.paths[v])
    throw PreconditionUnmet("copy-robustness needs a delegating voter");
  if (before.paths[v]->length() != 1)
    throw PreconditionUnmet("copy-robustness needs a path of length one");
  const VoterId guru = guru_of(before, v);

  const Instance promoted = promote_to_casting(inst, v);
  const WeightVector w_before = weights(inst, before);
  const WeightVector w_after = weights(promoted, resolve_rule(promoted, rule));

  const Rational lhs = weight_or_zero(w_before, guru);
  const Rational rhs = weight_or_zero(w_after, guru) + weight_or_zero(w_after, v);
  if (lhs != rhs) {
    AxiomWitness wit;
    wit.instance_text = to_text(inst);
    wit.voter = inst.name(v);
    wit.detail = "joint weight of " + inst.name(guru) + " and " + inst.name(v) +
                 " moves from " + lhs.str() + " to " + rhs.str();
    return wit;
  }
  return std::nullopt;
}

std::optional<AxiomWitness> check_iic(const RuleSpec& rule, const Instance& inst) {
  const Resolution before = resolve_rule(inst, rule);
  const Instance grown = add_isolated_casting_voter(inst);
  const Resolution after = resolve_rule(grown, rule);
  for (VoterId v = 0; v < inst.n; ++v) {
    const bool had = static_cast<bool>(before.paths[v]);
    if (had != static_cast<bool>(after.paths[v]) ||
        (had && !(*before.paths[v] == *after.paths[v]))) {
      AxiomWitness wit;
      wit.instance_text = to_text(inst);
      wit.voter = inst.name(v);
      wit.detail = "path of " + inst.name(v) + " changes when an isolated casting "
                   "voter joins";
      return wit;
    }
  }
  return std::nullopt;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::GuruParticipation: return "guru";
    case Axiom::GuruParticipationStar: return "gurustar";
    case Axiom::CopyRobustness: return "copy";
    case Axiom::Iic: return "iic";
  }
  return "?";
}

Axiom parse_axiom(const std::string& name) {
  if (name == "guru") return Axiom::GuruParticipation;
  if (name == "gurustar") return Axiom::GuruParticipationStar;
  if (name == "copy") return Axiom::CopyRobustness;
  if (name == "iic") return Axiom::Iic;
  throw ConfigError("unknown axiom '" + name + "'");
}

Instance sample_instance(SplitMix64& rng, const AxiomSampleParams& params) {
  const int n = params.n_min +
                static_cast<int>(rng.below(params.n_max - params.n_min + 1));
  std::vector<bool> casting(n, false);
  bool any = false;
  for (int v = 0; v < n; ++v) {
    casting[v] = rng.uniform01() < params.casting_fraction;
    any = any || casting[v];
  }
  if (!any) casting[rng.below(n)] = true;

  std::vector<std::vector<VoterId>> targets(n);
  std::vector<VoterId> pool;
  for (int v = 0; v < n; ++v) {
    if (casting[v]) continue;
    const int want = std::min(n - 1, 1 + static_cast<int>(rng.below(
                                             params.max_out_degree)));
    pool.clear();
    for (int w = 0; w < n; ++w)
      if (w != v) pool.push_back(w);
    for (int k = 0; k < want; ++k) {
      const auto j = k + rng.below(pool.size() - k);
      std::swap(pool[k], pool[j]);
      targets[v].push_back(pool[k]);
    }
  }
  return make_instance(n, std::move(targets), std::move(casting));
}

std::string AxiomReport::to_json() const {
  nlohmann::json j;
  j["axiom"] = axiom;
  j["rule"] = rule;
  j["trials"] = trials;
  j["seed"] = seed;
  j["violations"] = nlohmann::json::array();
  for (const auto& w : violations)
    j["violations"].push_back(
        {{"instance", w.instance_text}, {"voter", w.voter}, {"detail", w.detail}});
  return j.dump(2);
}

AxiomReport run_axiom_trials(const RuleSpec& rule, Axiom axiom, int trials,
                             std::uint64_t seed, const AxiomSampleParams& params) {
  AxiomReport report;
  report.axiom = to_string(axiom);
  report.rule = rule.name();
  report.seed = seed;

  const long long max_attempts = 200LL * trials + 1000;
  long long attempt = 0;
  while (report.trials < trials && attempt < max_attempts) {
    SplitMix64 rng = substream(seed, /*purpose=*/7, static_cast<std::uint64_t>(attempt));
    ++attempt;
    const Instance inst = sample_instance(rng, params);

    if (axiom == Axiom::Iic) {
      ++report.trials;
      if (auto w = check_iic(rule, inst)) report.violations.push_back(*w);
      continue;
    }

    const Resolution res = resolve_rule(inst, rule);
    const auto delegating = res.delegators();
    if (delegating.empty()) continue;
    const VoterId v = delegating[rng.below(delegating.size())];

    switch (axiom) {
      case Axiom::GuruParticipation: {
        ++report.trials;
        if (auto w = check_guru_participation(rule, inst, v))
          report.violations.push_back(*w);
        break;
      }
      case Axiom::GuruParticipationStar: {
        std::vector<int> ballots(inst.n, 0);
        for (VoterId c = 0; c < inst.n; ++c)
          if (inst.casting[c]) ballots[c] = static_cast<int>(rng.below(2));
        ++report.trials;
        if (auto w = check_guru_participation_star(rule, inst, v, ballots))
          report.violations.push_back(*w);
        break;
      }
      case Axiom::CopyRobustness: {
        if (res.paths[v]->length() != 1) continue;  // only eligible pairs count
        ++report.trials;
        if (auto w = check_copy_robustness(rule, inst, v))
          report.violations.push_back(*w);
        break;
      }
      case Axiom::Iic:
        break;
    }
  }
  return report;
}

}  // namespace rankdel
