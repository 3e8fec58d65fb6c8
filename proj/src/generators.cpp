#include "rankdel/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rankdel/rng.hpp"

namespace rankdel {

namespace {

// RNG stream purposes; axioms.cpp uses 7 and experiment.cpp uses 8.
constexpr std::uint64_t kBase = 1;
constexpr std::uint64_t kCast = 2;
constexpr std::uint64_t kOrder = 3;
constexpr std::uint64_t kProminence = 4;
constexpr std::uint64_t kSpatial = 5;
constexpr std::uint64_t kTie = 6;

std::vector<bool> draw_casting(const GenConfig& cfg) {
  SplitMix64 rng = substream(cfg.seed, kCast);
  std::vector<bool> casting(cfg.n);
  for (int v = 0; v < cfg.n; ++v) casting[v] = rng.uniform01() < cfg.p_c;
  return casting;
}

/// Sequential weighted sampling without replacement; the draw order is the
/// rank order.
std::vector<int> weighted_order(SplitMix64& rng, std::vector<int> items,
                                std::vector<double> weight) {
  std::vector<int> out;
  out.reserve(items.size());
  while (!items.empty()) {
    double total = 0;
    for (double w : weight) total += w;
    std::size_t pick = items.size() - 1;
    if (total > 0) {
      const double u = rng.uniform01() * total;
      double acc = 0;
      for (std::size_t i = 0; i < items.size(); ++i) {
        acc += weight[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<std::size_t>(rng.below(items.size()));
    }
    out.push_back(items[pick]);
    items.erase(items.begin() + pick);
    weight.erase(weight.begin() + pick);
  }
  return out;
}

}  // namespace

GenMethod parse_gen_method(const std::string& name) {
  if (name == "friendship") return GenMethod::Friendship;
  if (name == "prominence") return GenMethod::ProminenceSynthetic;
  if (name == "prominence-base") return GenMethod::ProminenceFromBase;
  if (name == "weight") return GenMethod::WeightBased;
  throw ConfigError("unknown generator method '" + name + "'");
}

std::string to_string(GenMethod method) {
  switch (method) {
    case GenMethod::Friendship: return "friendship";
    case GenMethod::ProminenceSynthetic: return "prominence";
    case GenMethod::ProminenceFromBase: return "prominence-base";
    case GenMethod::WeightBased: return "weight";
  }
  return "?";
}

void validate_config(const GenConfig& cfg) {
  if (cfg.n <= 0) throw ConfigError("generator needs n > 0");
  if (cfg.p_c < 0 || cfg.p_c > 1) throw ConfigError("casting probability outside [0,1]");
  if (cfg.avg_degree <= 0) throw ConfigError("average degree must be positive");
  if (cfg.alpha < 0 || cfg.beta < 0) throw ConfigError("exponents must be non-negative");
}

Instance gen_friendship(const GenConfig& cfg) {
  validate_config(cfg);
  const int n = cfg.n;
  const double p = n > 1 ? std::min(1.0, cfg.avg_degree / (n - 1)) : 0.0;

  SplitMix64 base_rng = substream(cfg.seed, kBase);
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (base_rng.uniform01() < p) {
        nbrs[v].push_back(w);
        nbrs[w].push_back(v);
      }

  auto casting = draw_casting(cfg);
  std::vector<std::vector<VoterId>> targets(n);
  std::vector<bool> in_nv(n, false);
  for (int v = 0; v < n; ++v) {
    if (casting[v] || nbrs[v].empty()) continue;
    for (int w : nbrs[v]) in_nv[w] = true;
    std::vector<double> weight;
    weight.reserve(nbrs[v].size());
    for (int w : nbrs[v]) {
      int common = 0;
      for (int x : nbrs[w]) common += in_nv[x];
      weight.push_back(std::pow(1.0 + common, cfg.alpha));
    }
    for (int w : nbrs[v]) in_nv[w] = false;
    SplitMix64 rng = substream(cfg.seed, kOrder, static_cast<std::uint64_t>(v));
    targets[v] = weighted_order(rng, nbrs[v], std::move(weight));
  }
  return make_instance(n, std::move(targets), std::move(casting));
}

namespace {

Instance gen_prominence_synthetic(const GenConfig& cfg) {
  const int n = cfg.n;
  auto casting = draw_casting(cfg);
  std::vector<int> non_casting;
  for (int v = 0; v < n; ++v)
    if (!casting[v]) non_casting.push_back(v);

  const long long m_target =
      std::llround(cfg.avg_degree * static_cast<double>(non_casting.size()));
  std::vector<std::vector<VoterId>> targets(n);
  std::vector<std::set<int>> have(n);
  std::vector<long long> indeg(n, 0);

  SplitMix64 rng = substream(cfg.seed, kProminence);
  long long added = 0;
  while (added < m_target && !non_casting.empty()) {
    const int v = non_casting[rng.below(non_casting.size())];
    if (static_cast<int>(targets[v].size()) >= n - 1) {
      // saturated; drop it from the pool so the loop cannot spin forever
      non_casting.erase(std::find(non_casting.begin(), non_casting.end(), v));
      continue;
    }
    double total = 0;
    std::vector<double> weight(n, 0.0);
    for (int x = 0; x < n; ++x) {
      if (x == v || have[v].count(x)) continue;
      weight[x] = std::pow(1.0 + static_cast<double>(indeg[x]), cfg.beta);
      total += weight[x];
    }
    const double u = rng.uniform01() * total;
    double acc = 0;
    int chosen = -1;
    for (int x = 0; x < n; ++x) {
      if (weight[x] == 0.0) continue;
      acc += weight[x];
      chosen = x;
      if (u < acc) break;
    }
    targets[v].push_back(chosen);
    have[v].insert(chosen);
    ++indeg[chosen];
    ++added;
  }
  return make_instance(n, std::move(targets), std::move(casting));
}

Instance gen_prominence_base(const GenConfig& cfg, const EdgeList& base) {
  GenConfig local = cfg;
  local.n = std::max(cfg.n, base.n);  // the base graph decides the voter count
  validate_config(local);
  const int n = local.n;
  std::vector<long long> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const auto& e : base.edges) {
    ++indeg[e.v];
    out[e.u].push_back(e.v);
  }
  auto casting = draw_casting(local);
  std::vector<std::vector<VoterId>> targets(n);
  for (int v = 0; v < n; ++v) {
    if (casting[v] || out[v].empty()) continue;
    // drop duplicate base edges, keep first occurrence order
    std::vector<int> uniq;
    std::set<int> seen;
    for (int x : out[v])
      if (x != v && seen.insert(x).second) uniq.push_back(x);
    std::vector<double> weight;
    weight.reserve(uniq.size());
    for (int x : uniq)
      weight.push_back(std::pow(1.0 + static_cast<double>(indeg[x]), cfg.beta));
    SplitMix64 rng = substream(cfg.seed, kOrder, static_cast<std::uint64_t>(v));
    targets[v] = weighted_order(rng, std::move(uniq), std::move(weight));
  }
  return make_instance(n, std::move(targets), std::move(casting));
}

Instance gen_weight_synthetic(const GenConfig& cfg) {
  const int delta = static_cast<int>(std::llround(cfg.avg_degree));
  if (cfg.n - 1 < delta)
    throw InsufficientNeighbors("need at least avg_degree other voters");

  SplitMix64 point_rng = substream(cfg.seed, kSpatial);
  std::vector<std::pair<double, double>> pt(cfg.n);
  for (auto& [x, y] : pt) {
    if (cfg.spatial == Spatial::Uniform2D) {
      x = point_rng.uniform01();
      y = point_rng.uniform01();
    } else {
      x = point_rng.gaussian();
      y = point_rng.gaussian();
    }
  }

  auto casting = draw_casting(cfg);
  std::vector<std::vector<VoterId>> targets(cfg.n);
  for (int v = 0; v < cfg.n; ++v) {
    if (casting[v]) continue;
    SplitMix64 rng = substream(cfg.seed, kTie, static_cast<std::uint64_t>(v));
    std::vector<std::tuple<double, std::uint64_t, int>> order;
    order.reserve(cfg.n - 1);
    for (int w = 0; w < cfg.n; ++w) {
      if (w == v) continue;
      const double dx = pt[v].first - pt[w].first;
      const double dy = pt[v].second - pt[w].second;
      order.emplace_back(dx * dx + dy * dy, rng.next(), w);
    }
    std::sort(order.begin(), order.end());
    for (int k = 0; k < delta; ++k) targets[v].push_back(std::get<2>(order[k]));
  }
  return make_instance(cfg.n, std::move(targets), std::move(casting));
}

Instance gen_weight_base(const GenConfig& cfg, const EdgeList& base) {
  GenConfig local = cfg;
  local.n = std::max(cfg.n, base.n);
  validate_config(local);
  const int n = local.n;
  std::vector<std::vector<std::pair<double, int>>> out(n);
  for (const auto& e : base.edges)
    if (e.weight > 0 && e.u != e.v) out[e.u].emplace_back(e.weight, e.v);
  auto casting = draw_casting(local);
  std::vector<std::vector<VoterId>> targets(n);
  for (int v = 0; v < n; ++v) {
    if (casting[v] || out[v].empty()) continue;
    SplitMix64 rng = substream(cfg.seed, kTie, static_cast<std::uint64_t>(v));
    std::vector<std::tuple<double, std::uint64_t, int>> order;
    std::set<int> seen;
    for (auto [w, x] : out[v])
      if (seen.insert(x).second) order.emplace_back(-w, rng.next(), x);
    std::sort(order.begin(), order.end());
    for (const auto& t : order) targets[v].push_back(std::get<2>(t));
  }
  return make_instance(n, std::move(targets), std::move(casting));
}

}  // namespace

Instance gen_prominence(const GenConfig& cfg, const EdgeList* base) {
  if (!base) {
    validate_config(cfg);
    return gen_prominence_synthetic(cfg);
  }
  return gen_prominence_base(cfg, *base);
}

Instance gen_weight_based(const GenConfig& cfg, const EdgeList* base) {
  if (!base) {
    validate_config(cfg);
    return gen_weight_synthetic(cfg);
  }
  return gen_weight_base(cfg, *base);
}

Instance generate(const GenConfig& cfg, const EdgeList* base) {
  switch (cfg.method) {
    case GenMethod::Friendship: return gen_friendship(cfg);
    case GenMethod::ProminenceSynthetic: return gen_prominence(cfg, nullptr);
    case GenMethod::ProminenceFromBase:
      if (!base) throw ConfigError("prominence-base needs a base edge list");
      return gen_prominence(cfg, base);
    case GenMethod::WeightBased: return gen_weight_based(cfg, base);
  }
  throw ConfigError("bad generator method");
}

Rational participation_rate(const Instance& inst) {
  if (inst.n == 0) throw InvalidInstance("participation rate of an empty instance");
  const auto cls = classify(inst);
  long long isolated = 0;
  for (auto c : cls) isolated += c == VoterClass::Isolated;
  return Rational(1) - Rational(isolated, inst.n);
}

}  // namespace rankdel
