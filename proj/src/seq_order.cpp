#include "rankdel/seq_order.hpp"

#include <algorithm>

#include "rankdel/rng.hpp"

namespace rankdel {

namespace {

bool is_prefix(const Sequence& s, const Sequence& t) {
  return s.size() < t.size() && std::equal(s.begin(), s.end(), t.begin());
}

/// Strict lexicographic order; on prefix pairs the shorter sequence wins.
bool lex_better(const Sequence& s, const Sequence& t) {
  const std::size_t k = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < k; ++i)
    if (s[i] != t[i]) return s[i] < t[i];
  return s.size() < t.size();
}

long long rank_sum(const Sequence& s) {
  long long sum = 0;
  for (Rank r : s) sum += r;
  return sum;
}

Comparison from_bool(bool better) {
  return better ? Comparison::Better : Comparison::Worse;
}

/// The diffusion order on sequences without a joint prefix and with distinct
/// first entries: smaller maximum wins, then fewer occurrences of the
/// maximum, then the prefixes before the first maximum decide recursively
/// (an empty prefix beats a non-empty one).
bool diff_better_stripped(const Sequence& s, const Sequence& t) {
  const Rank ms = s.empty() ? 0 : *std::max_element(s.begin(), s.end());
  const Rank mt = t.empty() ? 0 : *std::max_element(t.begin(), t.end());
  if (ms != mt) return ms < mt;
  const auto cs = std::count(s.begin(), s.end(), ms);
  const auto ct = std::count(t.begin(), t.end(), mt);
  if (cs != ct) return cs < ct;
  Sequence bs(s.begin(), std::find(s.begin(), s.end(), ms));
  Sequence bt(t.begin(), std::find(t.begin(), t.end(), mt));
  if (bs.empty() || bt.empty()) return bs.empty();
  return diff_better_stripped(bs, bt);
}

std::size_t joint_prefix_len(const Sequence& s, const Sequence& t) {
  std::size_t i = 0;
  while (i < s.size() && i < t.size() && s[i] == t[i]) ++i;
  return i;
}

}  // namespace

bool comparable(const Sequence& s, const Sequence& t) {
  if (s.empty() || t.empty() || s == t) return false;
  return !is_prefix(s, t) && !is_prefix(t, s);
}

Sequence sort_desc(const Sequence& s) {
  Sequence out = s;
  std::sort(out.begin(), out.end(), std::greater<Rank>());
  return out;
}

WeightTable WeightTable::identity() {
  WeightTable w;
  w.values = {1};
  w.tail_slope = 1;
  return w;
}

WeightTable WeightTable::from_values(std::vector<Rational> values) {
  if (values.empty()) throw ConfigError("weight table must not be empty");
  if (values.front() <= 0)
    throw ConfigError("weight table needs w(1) > 0");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1])
      throw ConfigError("weight table must be strictly increasing");
  WeightTable w;
  w.tail_slope = values.size() >= 2 ? values.back() - values[values.size() - 2]
                                    : Rational(1);
  w.values = std::move(values);
  return w;
}

Rational WeightTable::at(Rank r) const {
  if (r < 1) throw ConfigError("weight function is defined on ranks >= 1");
  const auto k = static_cast<std::size_t>(r);
  if (k <= values.size()) return values[k - 1];
  return values.back() + tail_slope * Rational(static_cast<long>(k - values.size()));
}

Rational WeightTable::sum(const Sequence& s) const {
  Rational total = 0;
  for (Rank r : s) total += at(r);
  return total;
}

std::string WeightTable::spec() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(i + 1) + "=" + values[i].str();
  }
  return out;
}

SeqOrder SeqOrder::weighted_sum(WeightTable w) {
  SeqOrder o(Kind::WeightedSum);
  if (w.values.empty()) throw ConfigError("weight table must not be empty");
  o.weights_ = std::move(w);
  return o;
}

std::string SeqOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "dfd";
    case Kind::Bfd: return "bfd";
    case Kind::MinSum: return "minsum";
    case Kind::WeightedSum: return "wsum:" + weights_.spec();
    case Kind::Leximax: return "leximax";
    case Kind::Diff: return "diffusion";
  }
  return "?";
}

Comparison SeqOrder::cmp(const Sequence& s, const Sequence& t) const {
  if (s == t) return Comparison::Incomparable;
  switch (kind_) {
    case Kind::Lex:
      return from_bool(lex_better(s, t));
    case Kind::Bfd:
      if (s.size() != t.size()) return from_bool(s.size() < t.size());
      return from_bool(lex_better(s, t));
    case Kind::MinSum: {
      const long long ss = rank_sum(s), st = rank_sum(t);
      if (ss != st) return from_bool(ss < st);
      return from_bool(lex_better(s, t));
    }
    case Kind::WeightedSum: {
      const Rational ws = weights_.sum(s), wt = weights_.sum(t);
      if (ws != wt) return from_bool(ws < wt);
      return from_bool(lex_better(s, t));
    }
    case Kind::Leximax: {
      const Sequence ds = sort_desc(s), dt = sort_desc(t);
      if (ds != dt) return from_bool(lex_better(ds, dt));
      return from_bool(lex_better(s, t));
    }
    case Kind::Diff: {
      if (!comparable(s, t)) return Comparison::Incomparable;
      const std::size_t k = joint_prefix_len(s, t);
      return from_bool(diff_better_stripped({s.begin() + k, s.end()},
                                            {t.begin() + k, t.end()}));
    }
  }
  return Comparison::Incomparable;
}

Comparison SeqOrder::cmp_total(const Sequence& s, const Sequence& t) const {
  if (s == t) return Comparison::Incomparable;
  if (is_prefix(s, t)) return Comparison::Better;
  if (is_prefix(t, s)) return Comparison::Worse;
  return cmp(s, t);
}

namespace {

Sequence sample_sequence(SplitMix64& rng) {
  // Length geometric with mean 4, ranks uniform in 1..6; small ranks keep
  // ties and collisions frequent.
  std::size_t len = 1;
  while (rng.below(4) != 0) ++len;
  Sequence s(len);
  for (auto& r : s) r = static_cast<Rank>(1 + rng.below(6));
  return s;
}

std::pair<Sequence, Sequence> sample_comparable_pair(SplitMix64& rng) {
  for (;;) {
    Sequence s = sample_sequence(rng), t = sample_sequence(rng);
    if (comparable(s, t)) return {std::move(s), std::move(t)};
  }
}

std::string pair_str(const Sequence& s, const Sequence& t) {
  return to_string(s) + " vs " + to_string(t);
}

}  // namespace

OrderCheckReport check_confluence_properties(const SeqOrder& order,
                                             const OrderSampleConfig& cfg) {
  OrderCheckReport report{order.name(), "confluence-properties", 0, std::nullopt};
  SplitMix64 rng(cfg.seed);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    ++report.trials;
    auto [s, t] = sample_comparable_pair(rng);
    // (i) prepending a joint rank never flips the comparison
    const Rank x = static_cast<Rank>(1 + rng.below(6));
    Sequence xs = s, xt = t;
    xs.insert(xs.begin(), x);
    xt.insert(xt.begin(), x);
    if (order.cmp(s, t) != order.cmp(xs, xt)) {
      report.counterexample = "(i) " + pair_str(s, t) + " with x=" + std::to_string(x);
      return report;
    }
    // (ii) a sequence beats itself with anything prepended
    Sequence suffixed = sample_sequence(rng);
    suffixed.insert(suffixed.end(), s.begin(), s.end());
    if (comparable(s, suffixed) && order.cmp(s, suffixed) != Comparison::Better) {
      report.counterexample = "(ii) " + pair_str(s, suffixed);
      return report;
    }
  }
  return report;
}

std::string to_string(OrderAxiom axiom) {
  switch (axiom) {
    case OrderAxiom::WeaklyLex: return "weakly-lexicographic";
    case OrderAxiom::StronglyLex: return "strongly-lexicographic";
    case OrderAxiom::RankAware: return "rank-aware";
    case OrderAxiom::Truncation: return "truncation";
  }
  return "?";
}

OrderCheckReport check_order_axiom(const SeqOrder& order, OrderAxiom axiom,
                                   const OrderSampleConfig& cfg) {
  OrderCheckReport report{order.name(), to_string(axiom), 0, std::nullopt};
  SplitMix64 rng(cfg.seed);
  const SeqOrder lex = SeqOrder::lex();
  for (int trial = 0; trial < cfg.trials; ++trial) {
    ++report.trials;
    switch (axiom) {
      case OrderAxiom::WeaklyLex: {
        // Same length, differing only in the last rank.
        Sequence s = sample_sequence(rng);
        Sequence t = s;
        while (t.back() == s.back()) t.back() = static_cast<Rank>(1 + rng.below(6));
        if (order.cmp(s, t) != lex.cmp(s, t)) {
          report.counterexample = pair_str(s, t);
          return report;
        }
        break;
      }
      case OrderAxiom::StronglyLex: {
        Sequence s = sample_sequence(rng);
        Sequence t(s.size());
        for (auto& r : t) r = static_cast<Rank>(1 + rng.below(6));
        if (!comparable(s, t)) break;
        if (order.cmp(s, t) != lex.cmp(s, t)) {
          report.counterexample = pair_str(s, t);
          return report;
        }
        break;
      }
      case OrderAxiom::RankAware: {
        auto [s, t] = sample_comparable_pair(rng);
        const Rank ms = *std::max_element(s.begin(), s.end());
        const Rank mt = *std::max_element(t.begin(), t.end());
        if (ms == mt) break;
        if (ms > mt) std::swap(s, t);
        if (order.cmp(s, t) != Comparison::Better) {
          report.counterexample = pair_str(s, t);
          return report;
        }
        break;
      }
      case OrderAxiom::Truncation: {
        auto [s, t] = sample_comparable_pair(rng);
        if (s[0] == t[0]) break;  // needs an empty joint prefix
        Sequence u = sample_sequence(rng), v = sample_sequence(rng);
        Rank x = std::max(*std::max_element(u.begin(), u.end()),
                          *std::max_element(v.begin(), v.end()));
        x = static_cast<Rank>(x + 1 + rng.below(3));
        Sequence su = s, tv = t;
        su.push_back(x);
        su.insert(su.end(), u.begin(), u.end());
        tv.push_back(x);
        tv.insert(tv.end(), v.begin(), v.end());
        const Comparison whole = order.cmp(su, tv);
        if (whole == Comparison::Incomparable) break;
        if (whole == Comparison::Better && order.cmp(s, t) != Comparison::Better) {
          report.counterexample = pair_str(su, tv) + " truncates to " + pair_str(s, t);
          return report;
        }
        if (whole == Comparison::Worse && order.cmp(t, s) != Comparison::Better) {
          report.counterexample = pair_str(tv, su) + " truncates to " + pair_str(t, s);
          return report;
        }
        break;
      }
    }
  }
  return report;
}

}  // namespace rankdel
