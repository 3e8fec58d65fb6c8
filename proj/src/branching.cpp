#include "rankdel/branching.hpp"

#include <algorithm>
#include <numeric>

namespace rankdel {

namespace {

struct FlatEdge {
  VoterId tail;
  VoterId head;  // already mapped: casting voters collapse into the root
  Rank rank;
  int per_voter_idx;
};

struct FlatGraph {
  int num_nodes = 0;  // voters plus the super-root
  int root = 0;
  std::vector<FlatEdge> edges;
  std::vector<bool> delegating;
};

FlatGraph flatten(const Instance& inst) {
  FlatGraph g;
  g.num_nodes = inst.n + 1;
  g.root = inst.n;
  g.delegating.assign(inst.n, false);
  const auto cls = classify(inst);
  for (VoterId v = 0; v < inst.n; ++v) {
    if (cls[v] == VoterClass::Isolated)
      throw InvalidInstance("branching requires a reduced instance (no isolated voters)");
    if (cls[v] != VoterClass::Delegating) continue;
    g.delegating[v] = true;
    for (std::size_t i = 0; i < inst.targets[v].size(); ++i) {
      const VoterId w = inst.targets[v][i];
      g.edges.push_back(FlatEdge{v, inst.casting[w] ? g.root : w,
                                 inst.edge_ranks[v][i], static_cast<int>(i)});
    }
  }
  return g;
}

template <class Cost>
struct SolverEdge {
  int tail;
  int head;
  Cost cost;
  int flat;  // index into FlatGraph::edges
};

/// One level of cycle contraction. Returns the chosen edge indices (into
/// `edges`), exactly one outgoing per live non-root node, or nullopt if some
/// node cannot reach the root. Contracted-away nodes keep their ids but are
/// marked dead in `alive`.
template <class Cost>
std::optional<std::vector<int>> contract_solve(int num_nodes, int root,
                                               std::vector<bool> alive,
                                               const std::vector<SolverEdge<Cost>>& edges) {
  std::vector<int> best(num_nodes, -1);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const auto& e = edges[i];
    if (e.tail == root || e.tail == e.head) continue;
    if (best[e.tail] < 0 || e.cost < edges[best[e.tail]].cost) best[e.tail] = i;
  }
  for (int v = 0; v < num_nodes; ++v)
    if (alive[v] && v != root && best[v] < 0) return std::nullopt;

  // Cycle detection in the functional graph of best choices.
  std::vector<int> state(num_nodes, 0);  // 0 fresh, 1 on stack, 2 done
  state[root] = 2;
  std::vector<int> cycle;
  for (int start = 0; start < num_nodes && cycle.empty(); ++start) {
    if (state[start] != 0 || !alive[start]) continue;
    std::vector<int> walk;
    int v = start;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = edges[best[v]].head;
    }
    if (state[v] == 1) {
      auto it = std::find(walk.begin(), walk.end(), v);
      cycle.assign(it, walk.end());
    }
    for (int u : walk) state[u] = 2;
  }

  if (cycle.empty()) {
    std::vector<int> chosen;
    for (int v = 0; v < num_nodes; ++v)
      if (alive[v] && v != root) chosen.push_back(best[v]);
    return chosen;
  }

  // Contract the cycle into a fresh node. Edges leaving a cycle node u are
  // re-priced by the saving of dropping u's cycle edge.
  std::vector<bool> in_cycle(num_nodes, false);
  for (int u : cycle) in_cycle[u] = true;
  const int c = num_nodes;
  std::vector<SolverEdge<Cost>> sub;
  std::vector<int> back;  // sub edge index -> index into `edges`
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const auto& e = edges[i];
    const int tail = in_cycle[e.tail] ? c : e.tail;
    const int head = in_cycle[e.head] ? c : e.head;
    if (tail == head) continue;
    Cost cost = e.cost;
    if (in_cycle[e.tail]) cost = cost - edges[best[e.tail]].cost;
    sub.push_back(SolverEdge<Cost>{tail, head, cost, e.flat});
    back.push_back(i);
  }

  for (int u : cycle) alive[u] = false;
  alive.push_back(true);
  auto inner = contract_solve<Cost>(num_nodes + 1, root, std::move(alive), sub);
  if (!inner) return std::nullopt;

  std::vector<int> chosen;
  int exit_node = -1;
  for (int si : *inner) {
    const int i = back[si];
    chosen.push_back(i);
    if (in_cycle[edges[i].tail]) exit_node = edges[i].tail;
  }
  for (int u : cycle)
    if (u != exit_node) chosen.push_back(best[u]);
  return chosen;
}

template <class Cost>
struct RawSolution {
  Cost cost{};
  std::vector<int> flat_choice;  // per voter, index into FlatGraph::edges, -1 unused
};

/// Solves with an optional per-voter restriction to a single flat edge.
template <class Cost>
std::optional<RawSolution<Cost>> solve_raw(const FlatGraph& g,
                                           const std::vector<Cost>& cost,
                                           const std::vector<int>& restrict_to) {
  std::vector<SolverEdge<Cost>> edges;
  edges.reserve(g.edges.size());
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const auto& e = g.edges[i];
    if (restrict_to[e.tail] >= 0 && restrict_to[e.tail] != i) continue;
    edges.push_back(SolverEdge<Cost>{e.tail, e.head, cost[i], i});
  }
  std::vector<bool> alive(g.num_nodes, false);
  alive[g.root] = true;
  for (VoterId v = 0; v < static_cast<VoterId>(g.delegating.size()); ++v)
    if (g.delegating[v]) alive[v] = true;
  auto chosen = contract_solve<Cost>(g.num_nodes, g.root, std::move(alive), edges);
  if (!chosen) return std::nullopt;
  RawSolution<Cost> sol;
  sol.flat_choice.assign(g.num_nodes - 1, -1);
  for (int si : *chosen) {
    const int i = edges[si].flat;
    sol.cost = sol.cost + cost[i];
    sol.flat_choice[g.edges[i].tail] = i;
  }
  return sol;
}

template <class Cost>
Branching refine_min_cost(const Instance& inst, const FlatGraph& g,
                          const std::vector<Cost>& cost, const PriorityOrder& pi) {
  std::vector<int> restrict_to(g.num_nodes, -1);
  auto base = solve_raw(g, cost, restrict_to);
  if (!base) throw Infeasible("some delegating voter cannot reach a casting voter");
  const Cost optimum = base->cost;

  // Per-voter flat edge indices in rank order.
  std::vector<std::vector<int>> edges_of(inst.n);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    edges_of[g.edges[i].tail].push_back(i);

  for (VoterId v : pi) {
    if (!g.delegating[v]) continue;
    bool fixed = false;
    for (int i : edges_of[v]) {
      restrict_to[v] = i;
      auto probe = solve_raw(g, cost, restrict_to);
      if (probe && probe->cost == optimum) {
        fixed = true;
        break;
      }
    }
    if (!fixed)
      throw Infeasible("priority fixing found no optimum-preserving edge");
  }

  Branching b;
  b.choice.resize(inst.n);
  for (VoterId v = 0; v < inst.n; ++v)
    if (g.delegating[v]) {
      const auto& fe = g.edges[restrict_to[v]];
      b.choice[v] = inst.edge(v, fe.per_voter_idx);
    }
  return b;
}

Branching branching_from_flat(const Instance& inst, const FlatGraph& g,
                              const std::vector<int>& flat_choice) {
  Branching b;
  b.choice.resize(inst.n);
  for (VoterId v = 0; v < inst.n; ++v)
    if (flat_choice[v] >= 0)
      b.choice[v] = inst.edge(v, g.edges[flat_choice[v]].per_voter_idx);
  return b;
}

}  // namespace

PriorityOrder identity_priority(int n) {
  PriorityOrder pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  return pi;
}

std::vector<Rank> priority_rank_vector(const Instance&, const Branching& b,
                                       const PriorityOrder& pi) {
  std::vector<Rank> out;
  out.reserve(pi.size());
  for (VoterId v : pi) out.push_back(b.choice[v] ? b.choice[v]->rank : 0);
  return out;
}

void validate_branching(const Instance& reduced, const Branching& b) {
  if (static_cast<int>(b.choice.size()) != reduced.n)
    throw InvalidInstance("branching does not match the instance");
  const auto cls = classify(reduced);
  for (VoterId v = 0; v < reduced.n; ++v) {
    if (cls[v] == VoterClass::Delegating) {
      if (!b.choice[v])
        throw InvalidInstance("delegating voter without an edge in branching");
      bool found = false;
      for (std::size_t i = 0; i < reduced.targets[v].size() && !found; ++i)
        found = reduced.edge(v, static_cast<int>(i)) == *b.choice[v];
      if (!found) throw InvalidInstance("branching uses an edge not in the instance");
    } else if (b.choice[v]) {
      throw InvalidInstance("non-delegating voter carries an edge in branching");
    }
  }
  // Acyclicity: following choices must terminate in a casting voter.
  for (VoterId v = 0; v < reduced.n; ++v) {
    int steps = 0;
    VoterId cur = v;
    while (b.choice[cur]) {
      cur = b.choice[cur]->target;
      if (++steps > reduced.n) throw InvalidInstance("branching contains a cycle");
    }
  }
}

Branching min_cost_branching(const Instance& reduced,
                             const std::function<Rational(const RankedEdge&)>& cost,
                             const PriorityOrder* pi) {
  const FlatGraph g = flatten(reduced);
  std::vector<Rational> costs(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    costs[i] = cost(reduced.edge(e.tail, e.per_voter_idx));
  }
  const PriorityOrder identity = identity_priority(reduced.n);
  return refine_min_cost<Rational>(reduced, g, costs, pi ? *pi : identity);
}

Branching borda_branching(const Instance& reduced, const PriorityOrder& pi) {
  const FlatGraph g = flatten(reduced);
  std::vector<long long> costs(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) costs[i] = g.edges[i].rank;
  return refine_min_cost<long long>(reduced, g, costs, pi);
}

Branching borda_branching(const Instance& reduced) {
  return borda_branching(reduced, identity_priority(reduced.n));
}

long long majority_margin(const Instance& reduced, const Branching& b,
                          const Branching& b2) {
  validate_branching(reduced, b);
  validate_branching(reduced, b2);
  long long margin = 0;
  for (VoterId v = 0; v < reduced.n; ++v) {
    if (!b.choice[v]) continue;
    const Rank rb = b.choice[v]->rank, rb2 = b2.choice[v]->rank;
    if (rb < rb2) ++margin;
    if (rb > rb2) --margin;
  }
  return margin;
}

UnpopularityResult unpopularity_margin(const Instance& reduced, const Branching& b) {
  validate_branching(reduced, b);
  const FlatGraph g = flatten(reduced);
  // Maximize the adversary's margin: +1 for an edge the voter prefers over
  // its edge in b, -1 for a worse one. Negate for the min-cost solver.
  std::vector<long long> costs(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    const Rank mine = b.choice[e.tail]->rank;
    costs[i] = e.rank < mine ? -1 : (e.rank > mine ? 1 : 0);
  }
  std::vector<int> unrestricted(g.num_nodes, -1);
  auto sol = solve_raw<long long>(g, costs, unrestricted);
  if (!sol) throw Infeasible("reduced instance has no branching");
  UnpopularityResult out;
  out.margin = -sol->cost;
  out.best_response = branching_from_flat(reduced, g, sol->flat_choice);
  if (out.margin < 0)
    throw std::logic_error("unpopularity margin below zero; solver bug");
  return out;
}

bool is_popular(const Instance& reduced, const Branching& b) {
  return unpopularity_margin(reduced, b).margin == 0;
}

Branching branching_of(const Resolution& res, const Reduction& red) {
  Branching b;
  b.choice.resize(red.instance.n);
  for (VoterId v = 0; v < static_cast<VoterId>(res.paths.size()); ++v) {
    if (!res.paths[v]) continue;
    const RankedEdge& first = res.paths[v]->edges.front();
    const VoterId rv = red.from_original[first.source];
    const VoterId rw = red.from_original[first.target];
    if (rv < 0 || rw < 0)
      throw InvalidInstance("resolution path touches an isolated voter");
    b.choice[rv] = RankedEdge{rv, rw, first.rank};
  }
  return b;
}

Resolution resolution_from_branching(const Instance& original, const Reduction& red,
                                     const Branching& b, const std::string& rule) {
  validate_branching(red.instance, b);
  Resolution res;
  res.rule = rule;
  res.paths.resize(original.n);
  for (VoterId rv = 0; rv < red.instance.n; ++rv) {
    if (!b.choice[rv]) continue;
    Path p;
    VoterId cur = rv;
    while (b.choice[cur]) {
      const auto& e = *b.choice[cur];
      p.edges.push_back(
          RankedEdge{red.to_original[e.source], red.to_original[e.target], e.rank});
      cur = e.target;
    }
    res.paths[red.to_original[rv]] = std::move(p);
  }
  return res;
}

}  // namespace rankdel
