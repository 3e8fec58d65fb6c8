#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankdel/instance.hpp"
#include "rankdel/rational.hpp"
#include "rankdel/resolver.hpp"

namespace rankdel {

/// The evaluation quantities of one (instance, resolution) pair. avg_rank and
/// unpop exist only when the resolution is confluent; unpop is the
/// unpopularity margin of the first-edge branching divided by the number of
/// non-isolated voters.
struct MetricsRecord {
  Rational max_rank = 0;
  Rational max_len = 0;
  Rational avg_len = 0;
  Rational max_sum = 0;
  Rational max_weight = 0;
  std::optional<Rational> avg_rank;
  std::optional<Rational> unpop;

  const Rational& avg_rank_value() const;  // throws NonConfluentMetrics if absent
  const Rational& unpop_value() const;
};

MetricsRecord compute_metrics(const Instance& inst, const Resolution& res);

/// Field-wise arithmetic mean; optional fields average over the records that
/// carry them. Throws ConfigError on an empty list.
MetricsRecord aggregate(const std::vector<MetricsRecord>& records);

std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& instance_id, const std::string& rule,
                            const MetricsRecord& m);

}  // namespace rankdel
