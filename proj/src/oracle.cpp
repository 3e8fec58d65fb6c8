#include "rankdel/oracle.hpp"

#include <algorithm>

namespace rankdel {

Sequence oracle_best_sequence(const Instance& inst, VoterId v, const SeqOrder& order,
                              const OracleBudget& budget) {
  const auto paths = paths_from(inst, v, budget.max_paths);
  if (paths.empty())
    throw InvalidInstance("oracle_best_sequence on an isolated voter");
  std::vector<Sequence> seqs;
  seqs.reserve(paths.size());
  for (const auto& p : paths) seqs.push_back(sequence_of(p));

  std::size_t best = 0;
  for (std::size_t i = 1; i < seqs.size(); ++i)
    if (order.cmp(seqs[i], seqs[best]) == Comparison::Better) best = i;
  // Distinct paths from one voter always induce distinct, pairwise comparable
  // sequences, so the maximum must dominate strictly.
  for (std::size_t i = 0; i < seqs.size(); ++i)
    if (i != best && order.cmp(seqs[best], seqs[i]) != Comparison::Better)
      throw NonUniqueMax("order has no strict maximum on the sequence set of " +
                         inst.name(v));
  return seqs[best];
}

namespace {

/// Walks the partial choice map from w; returns true if it loops back to v.
bool closes_cycle(const std::vector<int>& next, VoterId v, VoterId w) {
  VoterId cur = w;
  while (cur >= 0 && next[cur] >= 0) {
    cur = next[cur];
    if (cur == v) return true;
  }
  return cur == v;
}

void enumerate_rec(const Instance& inst, const std::vector<VoterId>& delegating,
                   std::size_t pos, std::vector<int>& next,
                   std::vector<Branching>& out, const OracleBudget& budget,
                   bool reverse) {
  if (pos == delegating.size()) {
    if (out.size() >= budget.max_branchings)
      throw BudgetExceeded("branching enumeration exceeded " +
                           std::to_string(budget.max_branchings));
    Branching b;
    b.choice.resize(inst.n);
    for (VoterId v : delegating) {
      // next[v] stores the chosen per-voter edge index.
      b.choice[v] = inst.edge(v, next[inst.n + v]);
    }
    out.push_back(std::move(b));
    return;
  }
  const VoterId v = delegating[pos];
  const int deg = inst.out_degree(v);
  for (int step = 0; step < deg; ++step) {
    const int i = reverse ? deg - 1 - step : step;
    const VoterId w = inst.targets[v][i];
    if (!inst.casting[w] && closes_cycle(next, v, w)) continue;
    next[v] = inst.casting[w] ? -2 : w;  // -2: ends at a casting voter
    next[inst.n + v] = i;
    enumerate_rec(inst, delegating, pos + 1, next, out, budget, reverse);
    next[v] = -1;
    next[inst.n + v] = -1;
  }
}

}  // namespace

std::vector<Branching> enumerate_branchings(const Instance& reduced,
                                            const OracleBudget& budget,
                                            bool reverse_choice_order) {
  const auto cls = classify(reduced);
  std::vector<VoterId> delegating;
  for (VoterId v = 0; v < reduced.n; ++v) {
    if (cls[v] == VoterClass::Isolated)
      throw InvalidInstance("enumerate_branchings requires a reduced instance");
    if (cls[v] == VoterClass::Delegating) delegating.push_back(v);
  }
  // next[v] tracks partial successor choices for cycle pruning; the slots
  // after inst.n remember the per-voter edge index.
  std::vector<int> next(2 * reduced.n, -1);
  std::vector<Branching> out;
  enumerate_rec(reduced, delegating, 0, next, out, budget, reverse_choice_order);
  return out;
}

long long oracle_unpopularity(const Instance& reduced, const Branching& b,
                              const OracleBudget& budget) {
  long long best = 0;  // the branching itself yields margin 0
  for (const auto& rival : enumerate_branchings(reduced, budget))
    best = std::max(best, majority_margin(reduced, rival, b));
  return best;
}

}  // namespace rankdel
