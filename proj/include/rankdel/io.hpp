#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rankdel/instance.hpp"

namespace rankdel {

/// Instance text format v1 (UTF-8, line oriented):
///
///   # comment
///   voters: <n>            optional; declares id-named voters 0..n-1
///   casting: <name> ...
///   <name>: <t1> <t2> ...  targets in rank order (t1 has rank 1)
///   <name>:                an abstainer
///
/// Without a `voters:` line, the voter set is the union of all names that
/// appear; names mentioned only as targets become abstainers. A `.json` file
/// with fields {"voters"?, "casting", "delegations"} mirrors the same schema.
Instance parse_instance_text(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance parse_instance_json(const std::string& text);

/// Loads text or JSON depending on the file extension.
Instance load_instance(const std::string& path);

std::string to_text(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

/// Generic edge-list base graph: one `u v [weight]` triple per line,
/// `#` comments, ids 0-based. Used as input to the generators.
struct EdgeList {
  struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
  };
  int n = 0;
  std::vector<Edge> edges;
};

EdgeList parse_edge_list(std::istream& in);
EdgeList load_edge_list(const std::string& path);

}  // namespace rankdel
