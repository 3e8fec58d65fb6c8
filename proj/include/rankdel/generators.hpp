#pragma once

#include <cstdint>

#include "rankdel/instance.hpp"
#include "rankdel/io.hpp"
#include "rankdel/rational.hpp"

namespace rankdel {

enum class GenMethod { Friendship, ProminenceSynthetic, ProminenceFromBase, WeightBased };
enum class Spatial { Uniform2D, Gaussian2D };

GenMethod parse_gen_method(const std::string& name);
std::string to_string(GenMethod method);

/// Seeded generator configuration. A fixed config reproduces the instance
/// bit for bit: all draws run through the project RNG with one sub-stream
/// per voter.
struct GenConfig {
  GenMethod method = GenMethod::Friendship;
  int n = 0;
  double p_c = 0.2;        // casting probability
  double avg_degree = 4;   // target mean degree
  double alpha = 1;        // friendship exponent (>= 0; 0 is uniform)
  double beta = 1;         // prominence exponent (>= 0)
  Spatial spatial = Spatial::Uniform2D;
  std::uint64_t seed = 0;
};

void validate_config(const GenConfig& cfg);

/// Erdos-Renyi base with p = avg_degree/(n-1); every non-casting voter ranks
/// all incident edges by repeated weighted draws with weight proportional to
/// (1 + common neighbors)^alpha. Voters with no base neighbors abstain.
Instance gen_friendship(const GenConfig& cfg);

/// Without a base: self-reinforcing edge addition on the complete digraph,
/// target probability proportional to (1 + current indegree)^beta, stopping
/// after avg_degree * |non-casting| edges. With a base: each voter ranks its
/// base out-neighbors weighted by (1 + base indegree)^beta.
Instance gen_prominence(const GenConfig& cfg, const EdgeList* base = nullptr);

/// Without a base: voters are random points in the plane and rank their
/// avg_degree nearest neighbors by increasing distance. With a base: edges
/// with positive weight, ranked by decreasing weight, ties shuffled.
Instance gen_weight_based(const GenConfig& cfg, const EdgeList* base = nullptr);

Instance generate(const GenConfig& cfg, const EdgeList* base = nullptr);

/// 1 - |I|/|V|, exactly.
Rational participation_rate(const Instance& inst);

}  // namespace rankdel
