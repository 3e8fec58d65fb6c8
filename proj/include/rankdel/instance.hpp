#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rankdel/errors.hpp"

namespace rankdel {

using VoterId = int;
using Rank = int;

struct RankedEdge {
  VoterId source = -1;
  VoterId target = -1;
  Rank rank = 0;

  friend bool operator==(const RankedEdge&, const RankedEdge&) = default;
};

enum class VoterClass { Casting, Delegating, Isolated };

/// A ranked delegation instance: a directed graph in which every non-casting
/// voter lists potential delegates in strict preference order. Voters are
/// dense ids 0..n-1; an optional name table carries display labels.
///
/// In a freshly built instance the ranks of voter v are exactly 1..outdeg(v).
/// Instances produced by reduce() keep the original (possibly gappy) ranks:
/// dropping an isolated fourth choice must not promote the fifth choice.
struct Instance {
  int n = 0;
  std::vector<std::vector<VoterId>> targets;   // per voter, ascending rank
  std::vector<std::vector<Rank>> edge_ranks;   // parallel to targets
  std::vector<bool> casting;
  std::vector<std::string> names;              // empty: ids are the names

  int out_degree(VoterId v) const { return static_cast<int>(targets[v].size()); }

  RankedEdge edge(VoterId v, int i) const {
    return RankedEdge{v, targets[v][i], edge_ranks[v][i]};
  }

  bool has_names() const { return !names.empty(); }

  std::string name(VoterId v) const {
    return has_names() ? names[v] : std::to_string(v);
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& t : targets) m += t.size();
    return m;
  }
};

/// Builds an instance from per-voter target lists; list position i gets rank
/// i+1. Validates all instance invariants including rank contiguity.
Instance make_instance(int n, std::vector<std::vector<VoterId>> targets,
                       std::vector<bool> casting,
                       std::vector<std::string> names = {});

/// Invariant check. `contiguous_ranks` is required for original instances and
/// waived for reduced ones.
void validate_instance(const Instance& inst, bool contiguous_ranks);

/// Partition of the voters: casting voters as declared, delegating voters
/// with a path to some casting voter, isolated voters without one.
std::vector<VoterClass> classify(const Instance& inst);

/// The instance restricted to casting and delegating voters. Edge ranks are
/// preserved verbatim, so rank gaps appear where isolated targets vanished.
struct Reduction {
  Instance instance;
  std::vector<VoterId> to_original;    // reduced id -> original id
  std::vector<VoterId> from_original;  // original id -> reduced id, -1 if dropped
};

Reduction reduce(const Instance& inst);

using Sequence = std::vector<Rank>;

struct Path {
  std::vector<RankedEdge> edges;

  bool empty() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }
  VoterId source() const { return edges.front().source; }
  VoterId terminal() const { return edges.back().target; }

  friend bool operator==(const Path&, const Path&) = default;
};

Sequence sequence_of(const Path& path);

std::string to_string(const Sequence& s);             // "(1,1,3)"
std::string to_string(const Instance&, const Path&);  // "a -> b -> c"

/// All simple paths from v that end in a casting voter. Exhaustive; intended
/// for the oracle and small instances. Throws BudgetExceeded once more than
/// `max_paths` paths have been produced rather than truncating silently.
std::vector<Path> paths_from(const Instance& inst, VoterId v,
                             std::size_t max_paths = 1000000);

}  // namespace rankdel
