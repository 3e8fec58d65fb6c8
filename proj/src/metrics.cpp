#include "rankdel/metrics.hpp"

#include <algorithm>

#include "rankdel/axioms.hpp"
#include "rankdel/branching.hpp"

namespace rankdel {

const Rational& MetricsRecord::avg_rank_value() const {
  if (!avg_rank)
    throw NonConfluentMetrics("avg_rank exists only for confluent resolutions");
  return *avg_rank;
}

const Rational& MetricsRecord::unpop_value() const {
  if (!unpop)
    throw NonConfluentMetrics("unpop exists only for confluent resolutions");
  return *unpop;
}

MetricsRecord compute_metrics(const Instance& inst, const Resolution& res) {
  MetricsRecord m;
  long long max_rank = 0, max_len = 0, max_sum = 0;
  long long len_total = 0, first_rank_total = 0, delegators = 0;
  for (const auto& p : res.paths) {
    if (!p) continue;
    ++delegators;
    long long sum = 0;
    for (const auto& e : p->edges) {
      max_rank = std::max<long long>(max_rank, e.rank);
      sum += e.rank;
    }
    max_len = std::max<long long>(max_len, static_cast<long long>(p->length()));
    max_sum = std::max(max_sum, sum);
    len_total += static_cast<long long>(p->length());
    first_rank_total += p->edges.front().rank;
  }
  m.max_rank = max_rank;
  m.max_len = max_len;
  m.max_sum = max_sum;
  m.avg_len = delegators ? Rational(len_total, delegators) : Rational(0);

  for (const auto& [c, w] : weights(inst, res)) m.max_weight = std::max(m.max_weight, w);

  if (is_confluent_output(res)) {
    m.avg_rank = delegators ? Rational(first_rank_total, delegators) : Rational(0);
    const Reduction red = reduce(inst);
    if (delegators) {
      const auto mu = unpopularity_margin(red.instance, branching_of(res, red));
      m.unpop = Rational(mu.margin, red.instance.n);
    } else {
      m.unpop = Rational(0);
    }
  }
  return m;
}

MetricsRecord aggregate(const std::vector<MetricsRecord>& records) {
  if (records.empty()) throw ConfigError("aggregate needs at least one record");
  MetricsRecord out;
  Rational avg_rank_sum = 0, unpop_sum = 0;
  long long avg_rank_count = 0, unpop_count = 0;
  for (const auto& r : records) {
    out.max_rank += r.max_rank;
    out.max_len += r.max_len;
    out.avg_len += r.avg_len;
    out.max_sum += r.max_sum;
    out.max_weight += r.max_weight;
    if (r.avg_rank) {
      avg_rank_sum += *r.avg_rank;
      ++avg_rank_count;
    }
    if (r.unpop) {
      unpop_sum += *r.unpop;
      ++unpop_count;
    }
  }
  const Rational k(static_cast<long long>(records.size()));
  out.max_rank /= k;
  out.max_len /= k;
  out.avg_len /= k;
  out.max_sum /= k;
  out.max_weight /= k;
  if (avg_rank_count) out.avg_rank = avg_rank_sum / avg_rank_count;
  if (unpop_count) out.unpop = unpop_sum / unpop_count;
  return out;
}

std::string metrics_csv_header() {
  return "instance,rule,max_rank,max_len,avg_len,max_sum,max_weight,avg_rank,unpop";
}

std::string metrics_csv_row(const std::string& instance_id, const std::string& rule,
                            const MetricsRecord& m) {
  std::string row = instance_id + "," + rule;
  row += "," + to_decimal(m.max_rank);
  row += "," + to_decimal(m.max_len);
  row += "," + to_decimal(m.avg_len);
  row += "," + to_decimal(m.max_sum);
  row += "," + to_decimal(m.max_weight);
  row += ",";
  if (m.avg_rank) row += to_decimal(*m.avg_rank);
  row += ",";
  if (m.unpop) row += to_decimal(*m.unpop);
  return row;
}

}  // namespace rankdel
