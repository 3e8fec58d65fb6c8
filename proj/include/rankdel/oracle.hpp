#pragma once

#include <cstddef>
#include <vector>

#include "rankdel/branching.hpp"
#include "rankdel/instance.hpp"
#include "rankdel/seq_order.hpp"

namespace rankdel {

/// Brute-force ground truth for small instances. Deliberately naive: the
/// production algorithms are tested against these enumerations.
struct OracleBudget {
  std::size_t max_paths = 100000;
  std::size_t max_branchings = 100000;
};

/// The order-maximal sequence over the exhaustively enumerated path set of v.
/// Throws NonUniqueMax if the maximum is not strictly better than every other
/// sequence, which would expose a broken order.
Sequence oracle_best_sequence(const Instance& inst, VoterId v, const SeqOrder& order,
                              const OracleBudget& budget = {});

/// All C-branchings of a reduced instance, generated by per-voter edge choice
/// with early cycle pruning. `reverse_choice_order` flips the per-voter
/// iteration order; both directions must produce the same set.
std::vector<Branching> enumerate_branchings(const Instance& reduced,
                                            const OracleBudget& budget = {},
                                            bool reverse_choice_order = false);

/// max over all enumerated branchings b2 of majority_margin(b2, b).
long long oracle_unpopularity(const Instance& reduced, const Branching& b,
                              const OracleBudget& budget = {});

}  // namespace rankdel
