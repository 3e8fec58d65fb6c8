#pragma once

#include <string>
#include <vector>

#include "rankdel/branching.hpp"
#include "rankdel/resolver.hpp"
#include "rankdel/seq_order.hpp"

namespace rankdel {

/// A named delegation rule as selected on the command line: the five sequence
/// rules (dfd, bfd, minsum, leximax, diffusion, wsum:<table>) plus the
/// branching rule borda.
struct RuleSpec {
  enum class Kind { Dfd, Bfd, MinSum, WeightedSum, Leximax, Diffusion, Borda };

  Kind kind = Kind::Bfd;
  WeightTable weight_table;          // WeightedSum only
  std::vector<VoterId> priority;     // Borda only; empty means identity

  std::string name() const;
  bool confluent() const { return kind != Kind::Dfd; }
  bool is_sequence_rule() const { return kind != Kind::Borda; }
  SeqOrder order() const;  // sequence rules only
};

/// Parses "bfd", "dfd", "minsum", "leximax", "diffusion", "borda" or
/// "wsum:1=1,2=3,3=7" (case-insensitive). Weight values accept integers and
/// a/b fractions.
RuleSpec parse_rule(const std::string& text);

/// The six rules of the experimental section, in spectrum order.
std::vector<RuleSpec> all_rules();

Resolution resolve_rule(const Instance& inst, const RuleSpec& rule);

}  // namespace rankdel
