#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rankdel/instance.hpp"
#include "rankdel/rational.hpp"
#include "rankdel/resolver.hpp"

namespace rankdel {

/// A C-branching of a reduced instance: an acyclic edge set giving every
/// delegating voter outdegree exactly one.
struct Branching {
  std::vector<std::optional<RankedEdge>> choice;  // per voter id

  long long rank_sum() const {
    long long s = 0;
    for (const auto& e : choice)
      if (e) s += e->rank;
    return s;
  }

  friend bool operator==(const Branching&, const Branching&) = default;
};

/// Tie-breaking bijection: voters listed from highest to lowest priority.
using PriorityOrder = std::vector<VoterId>;

PriorityOrder identity_priority(int n);

/// Own-edge ranks in priority order (0 for voters without an edge); the
/// priority order prefers the lexicographically smaller vector.
std::vector<Rank> priority_rank_vector(const Instance& reduced, const Branching& b,
                                       const PriorityOrder& pi);

void validate_branching(const Instance& reduced, const Branching& b);

/// Cost-minimal C-branching via Edmonds-style cycle contraction; costs may be
/// negative. Among cost-minimal branchings, returns the maximum under the
/// priority order (iterative fixing, one constrained solve per probe).
Branching min_cost_branching(const Instance& reduced,
                             const std::function<Rational(const RankedEdge&)>& cost,
                             const PriorityOrder* pi = nullptr);

/// Rank-sum-minimal branching with priority-order tie-breaking.
Branching borda_branching(const Instance& reduced, const PriorityOrder& pi);
Branching borda_branching(const Instance& reduced);

/// Voters preferring b over b2 minus voters preferring b2 over b, comparing
/// own-edge ranks; equal edges abstain.
long long majority_margin(const Instance& reduced, const Branching& b,
                          const Branching& b2);

struct UnpopularityResult {
  long long margin = 0;
  Branching best_response;  // a branching attaining the margin
};

/// The worst adversarial majority margin against b, computed by a single
/// max-weight branching with edge weights in {-1, 0, +1}: for a fixed b each
/// voter's pairwise verdict depends only on its own edge, so the adversary
/// maximization decomposes edge by edge.
UnpopularityResult unpopularity_margin(const Instance& reduced, const Branching& b);

bool is_popular(const Instance& reduced, const Branching& b);

/// First edges of a confluent resolution, re-indexed to the reduced instance.
Branching branching_of(const Resolution& res, const Reduction& red);

/// Expands a branching back into per-voter paths on the original instance.
Resolution resolution_from_branching(const Instance& original, const Reduction& red,
                                     const Branching& b, const std::string& rule);

}  // namespace rankdel
