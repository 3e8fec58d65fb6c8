#include "rankdel/instance.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace rankdel {

Instance make_instance(int n, std::vector<std::vector<VoterId>> targets,
                       std::vector<bool> casting, std::vector<std::string> names) {
  if (n < 0 || targets.size() > static_cast<std::size_t>(n) ||
      casting.size() > static_cast<std::size_t>(n))
    throw InvalidInstance("per-voter tables do not match voter count");
  Instance inst;
  inst.n = n;
  inst.targets = std::move(targets);
  inst.casting = std::move(casting);
  inst.names = std::move(names);
  inst.targets.resize(n);
  inst.casting.resize(n, false);
  inst.edge_ranks.resize(n);
  for (VoterId v = 0; v < n; ++v) {
    inst.edge_ranks[v].resize(inst.targets[v].size());
    std::iota(inst.edge_ranks[v].begin(), inst.edge_ranks[v].end(), 1);
  }
  validate_instance(inst, /*contiguous_ranks=*/true);
  return inst;
}

void validate_instance(const Instance& inst, bool contiguous_ranks) {
  if (inst.n < 0) throw InvalidInstance("negative voter count");
  const auto nsz = static_cast<std::size_t>(inst.n);
  if (inst.targets.size() != nsz || inst.edge_ranks.size() != nsz ||
      inst.casting.size() != nsz)
    throw InvalidInstance("per-voter tables do not match voter count");
  if (!inst.names.empty() && inst.names.size() != nsz)
    throw InvalidInstance("name table does not match voter count");

  for (VoterId v = 0; v < inst.n; ++v) {
    const auto& tg = inst.targets[v];
    const auto& rk = inst.edge_ranks[v];
    if (tg.size() != rk.size())
      throw InvalidInstance("rank list does not match target list for voter " +
                            inst.name(v));
    if (inst.casting[v] && !tg.empty())
      throw InvalidInstance("casting voter " + inst.name(v) + " has outgoing edges");
    std::unordered_set<VoterId> seen;
    for (std::size_t i = 0; i < tg.size(); ++i) {
      if (tg[i] < 0 || tg[i] >= inst.n)
        throw InvalidInstance("edge target out of range for voter " + inst.name(v));
      if (tg[i] == v)
        throw InvalidInstance("self-delegation by voter " + inst.name(v));
      if (!seen.insert(tg[i]).second)
        throw InvalidInstance("duplicate target for voter " + inst.name(v));
      if (rk[i] < 1) throw InvalidInstance("rank below 1 for voter " + inst.name(v));
      if (i > 0 && rk[i] <= rk[i - 1])
        throw InvalidInstance("ranks not strictly increasing for voter " +
                              inst.name(v));
      if (contiguous_ranks && rk[i] != static_cast<Rank>(i + 1))
        throw InvalidInstance("ranks of voter " + inst.name(v) +
                              " are not contiguous 1..k");
    }
  }
}

std::vector<VoterClass> classify(const Instance& inst) {
  // Reverse reachability from the casting voters.
  std::vector<std::vector<VoterId>> rev(inst.n);
  for (VoterId v = 0; v < inst.n; ++v)
    for (VoterId w : inst.targets[v]) rev[w].push_back(v);

  std::vector<VoterClass> cls(inst.n, VoterClass::Isolated);
  std::vector<VoterId> stack;
  for (VoterId v = 0; v < inst.n; ++v)
    if (inst.casting[v]) {
      cls[v] = VoterClass::Casting;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    VoterId w = stack.back();
    stack.pop_back();
    for (VoterId v : rev[w])
      if (cls[v] == VoterClass::Isolated) {
        cls[v] = VoterClass::Delegating;
        stack.push_back(v);
      }
  }
  return cls;
}

Reduction reduce(const Instance& inst) {
  const auto cls = classify(inst);
  Reduction red;
  red.from_original.assign(inst.n, -1);
  for (VoterId v = 0; v < inst.n; ++v)
    if (cls[v] != VoterClass::Isolated) {
      red.from_original[v] = static_cast<VoterId>(red.to_original.size());
      red.to_original.push_back(v);
    }

  Instance& out = red.instance;
  out.n = static_cast<int>(red.to_original.size());
  out.targets.resize(out.n);
  out.edge_ranks.resize(out.n);
  out.casting.resize(out.n);
  if (inst.has_names()) out.names.resize(out.n);
  for (VoterId rv = 0; rv < out.n; ++rv) {
    VoterId v = red.to_original[rv];
    out.casting[rv] = inst.casting[v];
    if (inst.has_names()) out.names[rv] = inst.names[v];
    for (std::size_t i = 0; i < inst.targets[v].size(); ++i) {
      VoterId w = inst.targets[v][i];
      if (red.from_original[w] < 0) continue;  // edge into an isolated voter
      out.targets[rv].push_back(red.from_original[w]);
      out.edge_ranks[rv].push_back(inst.edge_ranks[v][i]);
    }
  }
  validate_instance(out, /*contiguous_ranks=*/false);
  return red;
}

Sequence sequence_of(const Path& path) {
  Sequence s;
  s.reserve(path.edges.size());
  for (const auto& e : path.edges) s.push_back(e.rank);
  return s;
}

std::string to_string(const Sequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += ')';
  return out;
}

std::string to_string(const Instance& inst, const Path& path) {
  if (path.empty()) return "";
  std::string out = inst.name(path.source());
  for (const auto& e : path.edges) {
    out += " -> ";
    out += inst.name(e.target);
  }
  return out;
}

namespace {

void enumerate_paths(const Instance& inst, VoterId v, std::vector<bool>& visited,
                     Path& cur, std::vector<Path>& out, std::size_t max_paths) {
  for (std::size_t i = 0; i < inst.targets[v].size(); ++i) {
    VoterId w = inst.targets[v][i];
    if (visited[w]) continue;
    cur.edges.push_back(inst.edge(v, static_cast<int>(i)));
    if (inst.casting[w]) {
      if (out.size() >= max_paths)
        throw BudgetExceeded("path enumeration exceeded " +
                             std::to_string(max_paths) + " paths");
      out.push_back(cur);
    } else {
      visited[w] = true;
      enumerate_paths(inst, w, visited, cur, out, max_paths);
      visited[w] = false;
    }
    cur.edges.pop_back();
  }
}

}  // namespace

std::vector<Path> paths_from(const Instance& inst, VoterId v, std::size_t max_paths) {
  if (v < 0 || v >= inst.n) throw InvalidInstance("voter id out of range");
  if (inst.casting[v])
    throw InvalidInstance("paths_from called on casting voter " + inst.name(v));
  std::vector<Path> out;
  std::vector<bool> visited(inst.n, false);
  visited[v] = true;
  Path cur;
  enumerate_paths(inst, v, visited, cur, out, max_paths);
  return out;
}

}  // namespace rankdel
