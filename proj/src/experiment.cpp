#include "rankdel/experiment.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "rankdel/rng.hpp"

namespace rankdel {

namespace {

constexpr std::uint64_t kExperiment = 8;

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad experiment config: ") + e.what());
  }
  ExperimentConfig cfg;
  if (!j.contains("generator")) throw ConfigError("experiment config needs 'generator'");
  const auto& g = j["generator"];
  cfg.gen.method = parse_gen_method(g.value("method", "friendship"));
  cfg.gen.n = g.value("n", 0);
  cfg.gen.p_c = g.value("pc", 0.2);
  cfg.gen.avg_degree = g.value("delta", 4.0);
  cfg.gen.alpha = g.value("alpha", 1.0);
  cfg.gen.beta = g.value("beta", 1.0);
  cfg.gen.seed = g.value("seed", 0ULL);
  const std::string spatial = g.value("spatial", "uniform");
  if (spatial == "uniform")
    cfg.gen.spatial = Spatial::Uniform2D;
  else if (spatial == "gaussian")
    cfg.gen.spatial = Spatial::Gaussian2D;
  else
    throw ConfigError("spatial must be uniform or gaussian");
  validate_config(cfg.gen);

  cfg.instances = j.value("instances", 100);
  if (cfg.instances <= 0) throw ConfigError("experiment needs instances > 0");
  for (const auto& r : j.value("rules", nlohmann::json::array())) {
    const std::string name = r.get<std::string>();
    if (name == "all") {
      for (auto& rule : all_rules()) cfg.rules.push_back(rule);
    } else {
      cfg.rules.push_back(parse_rule(name));
    }
  }
  for (const auto& d : j.value("truncation_caps", nlohmann::json::array()))
    cfg.truncation_caps.push_back(d.get<int>());
  cfg.workers = j.value("workers", 0);
  return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const std::size_t count = static_cast<std::size_t>(cfg.instances);
  const std::size_t n_rules = cfg.rules.size();

  // records[r][i] per rule and instance; isolated[c][i] per cap and instance.
  std::vector<std::vector<MetricsRecord>> records(
      n_rules, std::vector<MetricsRecord>(count));
  std::vector<std::vector<Rational>> isolated(
      cfg.truncation_caps.size(), std::vector<Rational>(count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        GenConfig gen = cfg.gen;
        gen.seed = derive_seed(cfg.gen.seed, kExperiment, i);
        const Instance inst = generate(gen);
        for (std::size_t r = 0; r < n_rules; ++r)
          records[r][i] = compute_metrics(inst, resolve_rule(inst, cfg.rules[r]));
        for (std::size_t c = 0; c < cfg.truncation_caps.size(); ++c) {
          const Instance capped = truncate_outdegree(inst, cfg.truncation_caps[c]);
          isolated[c][i] = Rational(1) - participation_rate(capped);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  unsigned workers = cfg.workers > 0 ? static_cast<unsigned>(cfg.workers)
                                     : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min({workers, 8u, static_cast<unsigned>(count)}));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  result.instances = cfg.instances;
  for (std::size_t r = 0; r < n_rules; ++r) {
    RuleSummary summary;
    summary.rule = cfg.rules[r].name();
    summary.means = aggregate(records[r]);
    for (const auto& m : records[r])
      if (m.unpop && *m.unpop == 0) ++summary.popular_count;
    summary.per_instance = std::move(records[r]);
    result.rules.push_back(std::move(summary));
  }
  for (std::size_t c = 0; c < cfg.truncation_caps.size(); ++c) {
    Rational mean = 0;
    for (const auto& f : isolated[c]) mean += f;
    result.isolated_by_cap.emplace_back(cfg.truncation_caps[c],
                                        mean / Rational(static_cast<long long>(count)));
  }
  return result;
}

}  // namespace rankdel
