#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankdel/instance.hpp"
#include "rankdel/seq_order.hpp"

namespace rankdel {

/// Output of a delegation rule: one simple path to a casting voter per
/// delegating voter. For confluent rules the first edges of the paths form a
/// C-branching of the reduced instance.
struct Resolution {
  std::string rule;
  std::vector<std::optional<Path>> paths;  // indexed by voter id

  std::vector<VoterId> delegators() const {
    std::vector<VoterId> out;
    for (VoterId v = 0; v < static_cast<VoterId>(paths.size()); ++v)
      if (paths[v]) out.push_back(v);
    return out;
  }

  const Path& path(VoterId v) const { return *paths[v]; }
};

/// Settle-based engine for confluent orders. Starting from the casting voters
/// labeled with the empty sequence, repeatedly settles the delegating voter
/// whose candidate sequence (edge rank prepended to the target's label) is
/// best under the order; cross-voter ties go to the smallest voter id, then
/// the smallest target id. Rejects the plain lexicographic order, whose
/// greedy settling would not realize the per-voter optimum.
Resolution resolve_confluent(const Instance& inst, const SeqOrder& order);

/// Depth-first delegation: per voter, greedily follow the minimum-rank edge
/// whose head still reaches a casting voter with all visited vertices
/// removed. Realizes the lexicographic maximum of the voter's sequences.
Resolution resolve_dfd(const Instance& inst);

/// The diffusion process, literally: repeatedly take the minimum rank over
/// all edges entering the assigned set and settle every tail of such an edge
/// in one batch.
Resolution resolve_diffusion_process(const Instance& inst);

/// True iff the union of all chosen paths gives every delegating voter
/// outdegree exactly one.
bool is_confluent_output(const Resolution& res);

/// Removes every edge of rank > d; voter classification changes implicitly
/// (d = 0 keeps no delegations at all).
Instance truncate_outdegree(const Instance& inst, int d);

}  // namespace rankdel
