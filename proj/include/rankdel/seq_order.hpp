#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rankdel/instance.hpp"
#include "rankdel/rational.hpp"

namespace rankdel {

enum class Comparison { Better, Worse, Incomparable };

inline Comparison flip(Comparison c) {
  if (c == Comparison::Better) return Comparison::Worse;
  if (c == Comparison::Worse) return Comparison::Better;
  return Comparison::Incomparable;
}

/// Two distinct non-empty sequences are comparable iff neither is a prefix of
/// the other; equal or empty inputs are never comparable.
bool comparable(const Sequence& s, const Sequence& t);

/// Ranks sorted in non-increasing order (the sigma map of the leximax order).
Sequence sort_desc(const Sequence& s);

/// Increasing weight function for the weighted-sum family. Supplied as a
/// table for ranks 1..K and extended affinely beyond it with the table's last
/// increment. Values must be strictly increasing with w(1) > 0; a weight of
/// zero on rank 1 would let a sequence absorb free rank-1 prefixes and break
/// confluence.
struct WeightTable {
  std::vector<Rational> values;  // values[i] = w(i + 1)
  Rational tail_slope = 1;

  static WeightTable identity();
  static WeightTable from_values(std::vector<Rational> values);

  Rational at(Rank r) const;
  Rational sum(const Sequence& s) const;
  std::string spec() const;  // "1=1,2=3,3=7" round-trip form
};

/// An order relation over rank sequences. All kinds except Diff are strict
/// total orders on the set of all sequences; Diff is defined only on
/// comparable pairs and reports Incomparable elsewhere.
class SeqOrder {
 public:
  enum class Kind { Lex, Bfd, MinSum, WeightedSum, Leximax, Diff };

  static SeqOrder lex() { return SeqOrder(Kind::Lex); }
  static SeqOrder bfd() { return SeqOrder(Kind::Bfd); }
  static SeqOrder min_sum() { return SeqOrder(Kind::MinSum); }
  static SeqOrder leximax() { return SeqOrder(Kind::Leximax); }
  static SeqOrder diffusion() { return SeqOrder(Kind::Diff); }
  static SeqOrder weighted_sum(WeightTable w);

  Kind kind() const { return kind_; }
  const WeightTable& weights() const { return weights_; }
  std::string name() const;

  /// True for every kind whose order satisfies the prefix-extension and
  /// suffix-dominance properties that characterize confluent sequence rules;
  /// only the plain lexicographic order (DFD) fails them.
  bool confluent() const { return kind_ != Kind::Lex; }

  /// Better means s is preferred over t. Equal sequences are Incomparable
  /// under every kind; Diff is additionally Incomparable on prefix pairs.
  Comparison cmp(const Sequence& s, const Sequence& t) const;

  /// Total extension used by the resolver's settle loop: prefix pairs are
  /// decided in favor of the shorter sequence. For every total order kind
  /// this coincides with cmp; for Diff it applies the convention that the
  /// empty remainder (maximum rank 0) wins after stripping the joint prefix.
  Comparison cmp_total(const Sequence& s, const Sequence& t) const;

 private:
  explicit SeqOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  WeightTable weights_;
};

/// Sampling parameters for the randomized order checks: lengths geometric
/// with mean 4, ranks uniform in 1..6.
struct OrderSampleConfig {
  std::uint64_t seed = 1;
  int trials = 10000;
};

struct OrderCheckReport {
  std::string order;
  std::string property;
  int trials = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Samples comparable pairs and checks the two properties characterizing
/// confluent sequence rules: (i) prefix-extension invariance and (ii) suffix
/// dominance. Stops at the first counterexample.
OrderCheckReport check_confluence_properties(const SeqOrder& order,
                                             const OrderSampleConfig& cfg);

enum class OrderAxiom { WeaklyLex, StronglyLex, RankAware, Truncation };

std::string to_string(OrderAxiom axiom);

OrderCheckReport check_order_axiom(const SeqOrder& order, OrderAxiom axiom,
                                   const OrderSampleConfig& cfg);

}  // namespace rankdel
