#pragma once

#include <utility>
#include <vector>

#include "rankdel/generators.hpp"
#include "rankdel/metrics.hpp"
#include "rankdel/rules.hpp"

namespace rankdel {

/// A seeded batch run: generate `instances` instances (instance i uses a seed
/// derived from gen.seed and i), resolve every rule on each, aggregate the
/// metrics, and optionally sweep outdegree caps for the isolated fraction.
/// Instances fan out across worker threads; the seed derivation keeps results
/// independent of scheduling.
struct ExperimentConfig {
  GenConfig gen;
  int instances = 100;
  std::vector<RuleSpec> rules;
  std::vector<int> truncation_caps;
  int workers = 0;  // 0: hardware concurrency
};

ExperimentConfig parse_experiment_config(const std::string& json_text);

struct RuleSummary {
  std::string rule;
  MetricsRecord means;
  std::vector<MetricsRecord> per_instance;
  int popular_count = 0;  // confluent rules: instances whose branching is popular
};

struct ExperimentResult {
  int instances = 0;
  std::vector<RuleSummary> rules;
  std::vector<std::pair<int, Rational>> isolated_by_cap;  // mean fraction per cap
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace rankdel
