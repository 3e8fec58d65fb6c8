#include "rankdel/resolver.hpp"

#include <algorithm>
#include <set>

namespace rankdel {

namespace {

Path compose(const RankedEdge& first, const Path& rest) {
  Path p;
  p.edges.reserve(rest.edges.size() + 1);
  p.edges.push_back(first);
  p.edges.insert(p.edges.end(), rest.edges.begin(), rest.edges.end());
  return p;
}

}  // namespace

Resolution resolve_confluent(const Instance& inst, const SeqOrder& order) {
  if (!order.confluent())
    throw NotConfluentOrder("the lexicographic order does not settle greedily; "
                            "use resolve_dfd");
  const auto cls = classify(inst);

  Resolution res;
  res.rule = order.name();
  res.paths.resize(inst.n);

  std::vector<bool> settled(inst.n, false);
  std::vector<Sequence> label(inst.n);
  int open = 0;
  for (VoterId v = 0; v < inst.n; ++v) {
    if (cls[v] == VoterClass::Casting) settled[v] = true;
    if (cls[v] == VoterClass::Delegating) ++open;
  }

  std::vector<std::vector<std::pair<VoterId, int>>> in_edges(inst.n);  // (tail, idx)
  for (VoterId v = 0; v < inst.n; ++v)
    if (cls[v] == VoterClass::Delegating)
      for (std::size_t i = 0; i < inst.targets[v].size(); ++i)
        in_edges[inst.targets[v][i]].emplace_back(v, static_cast<int>(i));

  // Best candidate per unsettled voter. Candidates only improve over time:
  // settled voters stay settled and keep their label.
  struct Candidate {
    Sequence seq;
    int edge_idx = -1;
  };
  std::vector<Candidate> best(inst.n);

  auto offer = [&](VoterId v, int edge_idx) {
    const VoterId w = inst.targets[v][edge_idx];
    Sequence cand;
    cand.reserve(label[w].size() + 1);
    cand.push_back(inst.edge_ranks[v][edge_idx]);
    cand.insert(cand.end(), label[w].begin(), label[w].end());
    if (best[v].edge_idx < 0 ||
        order.cmp_total(cand, best[v].seq) == Comparison::Better) {
      best[v].seq = std::move(cand);
      best[v].edge_idx = edge_idx;
    }
  };

  auto settle = [&](VoterId w) {
    for (auto [v, idx] : in_edges[w])
      if (!settled[v]) offer(v, idx);
  };

  for (VoterId c = 0; c < inst.n; ++c)
    if (inst.casting[c]) settle(c);

  while (open > 0) {
    VoterId pick = -1;
    for (VoterId v = 0; v < inst.n; ++v) {
      if (settled[v] || best[v].edge_idx < 0) continue;
      if (pick < 0) {
        pick = v;
        continue;
      }
      // Ranks within one voter are distinct, so equal candidate sequences can
      // only occur across voters; the scan order already prefers the smaller
      // voter id and, within a voter, the smaller-rank (hence smaller target
      // position) edge.
      if (order.cmp_total(best[v].seq, best[pick].seq) == Comparison::Better)
        pick = v;
    }
    if (pick < 0)
      throw InvalidInstance("settle loop stalled with unsettled delegating voters");

    const int idx = best[pick].edge_idx;
    const VoterId w = inst.targets[pick][idx];
    res.paths[pick] =
        inst.casting[w] ? Path{{inst.edge(pick, idx)}}
                        : compose(inst.edge(pick, idx), *res.paths[w]);
    label[pick] = std::move(best[pick].seq);
    settled[pick] = true;
    --open;
    settle(pick);
  }
  return res;
}

namespace {

/// Reachability of the casting set from w in the graph with `blocked`
/// vertices removed.
bool reaches_casting(const Instance& inst, VoterId w, const std::vector<bool>& blocked) {
  if (blocked[w]) return false;
  if (inst.casting[w]) return true;
  std::vector<bool> seen(inst.n, false);
  std::vector<VoterId> stack{w};
  seen[w] = true;
  while (!stack.empty()) {
    VoterId u = stack.back();
    stack.pop_back();
    for (VoterId x : inst.targets[u]) {
      if (blocked[x] || seen[x]) continue;
      if (inst.casting[x]) return true;
      seen[x] = true;
      stack.push_back(x);
    }
  }
  return false;
}

}  // namespace

Resolution resolve_dfd(const Instance& inst) {
  const auto cls = classify(inst);
  Resolution res;
  res.rule = "dfd";
  res.paths.resize(inst.n);

  for (VoterId v = 0; v < inst.n; ++v) {
    if (cls[v] != VoterClass::Delegating) continue;
    std::vector<bool> visited(inst.n, false);
    visited[v] = true;
    Path path;
    VoterId cur = v;
    while (!inst.casting[cur]) {
      bool advanced = false;
      for (std::size_t i = 0; i < inst.targets[cur].size(); ++i) {
        const VoterId w = inst.targets[cur][i];
        if (visited[w]) continue;
        if (!reaches_casting(inst, w, visited)) continue;
        path.edges.push_back(inst.edge(cur, static_cast<int>(i)));
        visited[w] = true;
        cur = w;
        advanced = true;
        break;
      }
      if (!advanced)
        throw InvalidInstance("dfd walk stuck; classification is inconsistent");
    }
    res.paths[v] = std::move(path);
  }
  return res;
}

Resolution resolve_diffusion_process(const Instance& inst) {
  const auto cls = classify(inst);
  Resolution res;
  res.rule = "diffusion";
  res.paths.resize(inst.n);

  std::vector<bool> assigned(inst.n, false);
  int open = 0;
  for (VoterId v = 0; v < inst.n; ++v) {
    if (cls[v] == VoterClass::Casting) assigned[v] = true;
    if (cls[v] == VoterClass::Delegating) ++open;
  }

  while (open > 0) {
    // Step 1: the minimum rank over the boundary into the assigned set.
    Rank min_rank = 0;
    for (VoterId v = 0; v < inst.n; ++v) {
      if (assigned[v] || cls[v] == VoterClass::Isolated) continue;
      for (std::size_t i = 0; i < inst.targets[v].size(); ++i)
        if (assigned[inst.targets[v][i]]) {
          const Rank r = inst.edge_ranks[v][i];
          if (min_rank == 0 || r < min_rank) min_rank = r;
        }
    }
    if (min_rank == 0)
      throw InvalidInstance("diffusion stalled with unassigned delegating voters");

    // Steps 2 and 3: settle every tail of a minimum-rank boundary edge.
    // Ranks are distinct per voter, so each tail has exactly one such edge.
    std::vector<std::pair<VoterId, int>> batch;
    for (VoterId v = 0; v < inst.n; ++v) {
      if (assigned[v] || cls[v] == VoterClass::Isolated) continue;
      for (std::size_t i = 0; i < inst.targets[v].size(); ++i)
        if (assigned[inst.targets[v][i]] && inst.edge_ranks[v][i] == min_rank)
          batch.emplace_back(v, static_cast<int>(i));
    }
    for (auto [v, i] : batch) {
      const VoterId w = inst.targets[v][i];
      res.paths[v] = inst.casting[w] ? Path{{inst.edge(v, i)}}
                                     : compose(inst.edge(v, i), *res.paths[w]);
      assigned[v] = true;
      --open;
    }
  }
  return res;
}

bool is_confluent_output(const Resolution& res) {
  std::vector<std::set<VoterId>> out_of(res.paths.size());
  for (const auto& p : res.paths) {
    if (!p) continue;
    for (const auto& e : p->edges) out_of[e.source].insert(e.target);
  }
  // Each delegating voter owns a path, so it appears as a source at least
  // once; confluence demands exactly one distinct outgoing edge.
  for (std::size_t v = 0; v < res.paths.size(); ++v)
    if (res.paths[v] && out_of[v].size() != 1) return false;
  return true;
}

Instance truncate_outdegree(const Instance& inst, int d) {
  if (d < 0) throw ConfigError("outdegree cap must be non-negative");
  Instance out = inst;
  for (VoterId v = 0; v < inst.n; ++v) {
    auto& tg = out.targets[v];
    auto& rk = out.edge_ranks[v];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < tg.size(); ++i)
      if (rk[i] <= d) {
        tg[keep] = tg[i];
        rk[keep] = rk[i];
        ++keep;
      }
    tg.resize(keep);
    rk.resize(keep);
  }
  return out;
}

}  // namespace rankdel
