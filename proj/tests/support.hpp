#pragma once

#include <string>

#include "rankdel/io.hpp"

namespace rankdel::test {

inline std::string data_path(const std::string& name) {
  return std::string(RANKDEL_TEST_DATA_DIR) + "/" + name;
}

inline Instance load_fixture(const std::string& name) {
  return load_instance(data_path(name));
}

inline Instance fig1() { return load_fixture("fig1.txt"); }

/// Voter id by display name; fixtures address voters by label.
inline VoterId vid(const Instance& inst, const std::string& name) {
  for (VoterId v = 0; v < inst.n; ++v)
    if (inst.name(v) == name) return v;
  throw std::runtime_error("no voter named " + name);
}

/// Node-name rendering of a voter's chosen path, e.g. "a,b,c,i".
inline std::string path_names(const Instance& inst, const Path& p) {
  std::string out = inst.name(p.source());
  for (const auto& e : p.edges) out += "," + inst.name(e.target);
  return out;
}

}  // namespace rankdel::test
