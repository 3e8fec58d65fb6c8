#include "rankdel/rules.hpp"

#include <algorithm>
#include <cctype>

namespace rankdel {

std::string RuleSpec::name() const {
  switch (kind) {
    case Kind::Dfd: return "dfd";
    case Kind::Bfd: return "bfd";
    case Kind::MinSum: return "minsum";
    case Kind::WeightedSum: return "wsum:" + weight_table.spec();
    case Kind::Leximax: return "leximax";
    case Kind::Diffusion: return "diffusion";
    case Kind::Borda: return "borda";
  }
  return "?";
}

SeqOrder RuleSpec::order() const {
  switch (kind) {
    case Kind::Dfd: return SeqOrder::lex();
    case Kind::Bfd: return SeqOrder::bfd();
    case Kind::MinSum: return SeqOrder::min_sum();
    case Kind::WeightedSum: return SeqOrder::weighted_sum(weight_table);
    case Kind::Leximax: return SeqOrder::leximax();
    case Kind::Diffusion: return SeqOrder::diffusion();
    case Kind::Borda: break;
  }
  throw ConfigError("borda is not a sequence rule");
}

namespace {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(text));
    return Rational(boost::multiprecision::cpp_int(text.substr(0, slash)),
                    boost::multiprecision::cpp_int(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ConfigError("bad rational '" + text + "'");
  }
}

WeightTable parse_weight_table(const std::string& spec) {
  std::vector<Rational> values;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string entry = spec.substr(pos, comma - pos);
    auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw ConfigError("weight entry '" + entry + "' is not rank=value");
    int rank = 0;
    try {
      rank = std::stoi(entry.substr(0, eq));
    } catch (const std::exception&) {
      throw ConfigError("bad rank in weight entry '" + entry + "'");
    }
    if (rank != static_cast<int>(values.size()) + 1)
      throw ConfigError("weight table ranks must be contiguous from 1");
    values.push_back(parse_rational(entry.substr(eq + 1)));
    pos = comma + 1;
  }
  return WeightTable::from_values(std::move(values));
}

}  // namespace

RuleSpec parse_rule(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  RuleSpec r;
  if (lower == "dfd") {
    r.kind = RuleSpec::Kind::Dfd;
  } else if (lower == "bfd") {
    r.kind = RuleSpec::Kind::Bfd;
  } else if (lower == "minsum") {
    r.kind = RuleSpec::Kind::MinSum;
  } else if (lower == "leximax") {
    r.kind = RuleSpec::Kind::Leximax;
  } else if (lower == "diffusion") {
    r.kind = RuleSpec::Kind::Diffusion;
  } else if (lower == "borda") {
    r.kind = RuleSpec::Kind::Borda;
  } else if (lower.rfind("wsum:", 0) == 0) {
    r.kind = RuleSpec::Kind::WeightedSum;
    r.weight_table = parse_weight_table(lower.substr(5));
  } else {
    throw ConfigError("unknown rule '" + text + "'");
  }
  return r;
}

std::vector<RuleSpec> all_rules() {
  std::vector<RuleSpec> rules;
  for (const char* name : {"bfd", "minsum", "leximax", "diffusion", "borda", "dfd"})
    rules.push_back(parse_rule(name));
  return rules;
}

Resolution resolve_rule(const Instance& inst, const RuleSpec& rule) {
  if (rule.kind == RuleSpec::Kind::Dfd) return resolve_dfd(inst);
  if (rule.kind == RuleSpec::Kind::Borda) {
    const Reduction red = reduce(inst);
    // rule.priority lists original voter ids; isolated voters drop out.
    PriorityOrder pi;
    if (rule.priority.empty()) {
      pi = identity_priority(red.instance.n);
    } else {
      for (VoterId v : rule.priority)
        if (v >= 0 && v < inst.n && red.from_original[v] >= 0)
          pi.push_back(red.from_original[v]);
      if (static_cast<int>(pi.size()) != red.instance.n)
        throw ConfigError("priority order must cover every non-isolated voter");
    }
    return resolution_from_branching(inst, red, borda_branching(red.instance, pi),
                                     rule.name());
  }
  return resolve_confluent(inst, rule.order());
}

}  // namespace rankdel
