#include "rankdel/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankdel/axioms.hpp"
#include "rankdel/branching.hpp"
#include "rankdel/experiment.hpp"
#include "rankdel/generators.hpp"
#include "rankdel/io.hpp"
#include "rankdel/metrics.hpp"
#include "rankdel/oracle.hpp"
#include "rankdel/rules.hpp"

namespace rankdel {

namespace {

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

/// "--priority a,b,c": listed voters first, everyone else follows in id
/// order. Only meaningful for borda.
void apply_priority(RuleSpec& rule, const Instance& inst, const std::string& spec) {
  if (spec.empty()) return;
  if (rule.kind != RuleSpec::Kind::Borda)
    throw ConfigError("--priority only applies to the borda rule");
  std::vector<bool> listed(inst.n, false);
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string name = spec.substr(pos, comma - pos);
    if (!name.empty()) {
      VoterId v = -1;
      for (VoterId cand = 0; cand < inst.n; ++cand)
        if (inst.name(cand) == name) v = cand;
      if (v < 0) throw ConfigError("unknown voter '" + name + "' in --priority");
      if (listed[v]) throw ConfigError("duplicate voter '" + name + "' in --priority");
      listed[v] = true;
      rule.priority.push_back(v);
    }
    pos = comma + 1;
  }
  for (VoterId v = 0; v < inst.n; ++v)
    if (!listed[v]) rule.priority.push_back(v);
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ConfigError("cannot write output file: " + out_path);
  f << text;
}

struct GenFlags {
  std::string method;
  GenConfig cfg;
  std::string spatial = "uniform";
  std::string base_path;

  void add_to(CLI::App* cmd, bool method_flag) {
    if (method_flag)
      cmd->add_option("--gen", method, "generator method");
    else
      cmd->add_option("method", method,
                      "friendship | prominence | prominence-base | weight")
          ->required();
    cmd->add_option("--n", cfg.n, "voter count");
    cmd->add_option("--pc", cfg.p_c, "casting probability");
    cmd->add_option("--delta", cfg.avg_degree, "target average degree");
    cmd->add_option("--alpha", cfg.alpha, "friendship exponent");
    cmd->add_option("--beta", cfg.beta, "prominence exponent");
    cmd->add_option("--spatial", spatial, "uniform | gaussian");
    cmd->add_option("--base", base_path, "base graph edge list");
  }

  Instance make(std::uint64_t seed, const EdgeList* base) {
    cfg.method = parse_gen_method(method);
    cfg.seed = seed;
    if (spatial == "uniform")
      cfg.spatial = Spatial::Uniform2D;
    else if (spatial == "gaussian")
      cfg.spatial = Spatial::Gaussian2D;
    else
      throw ConfigError("spatial must be uniform or gaussian");
    return generate(cfg, base);
  }
};

std::string resolve_text(const Instance& inst, const Resolution& res) {
  std::ostringstream out;
  for (VoterId v : res.delegators()) {
    const Path& p = res.path(v);
    out << inst.name(v) << ": " << to_string(inst, p)
        << " [seq: " << to_string(sequence_of(p)) << "]\n";
  }
  return out.str();
}

std::string resolve_json(const Instance& inst, const Resolution& res) {
  nlohmann::json j;
  j["rule"] = res.rule;
  auto& paths = j["paths"] = nlohmann::json::object();
  for (VoterId v : res.delegators()) {
    const Path& p = res.path(v);
    nlohmann::json entry;
    entry["path"] = nlohmann::json::array();
    entry["path"].push_back(inst.name(v));
    for (const auto& e : p.edges) entry["path"].push_back(inst.name(e.target));
    entry["sequence"] = sequence_of(p);
    paths[inst.name(v)] = std::move(entry);
  }
  return j.dump(2) + "\n";
}

int cmd_resolve(const std::string& instance_path, const std::string& rule_name,
                const std::string& priority, const std::string& format,
                const std::string& out_path, std::ostream& out) {
  const Instance inst = load_instance(instance_path);
  RuleSpec rule = parse_rule(rule_name);
  apply_priority(rule, inst, priority);
  const Resolution res = resolve_rule(inst, rule);
  if (format == "json")
    write_output(resolve_json(inst, res), out_path, out);
  else
    write_output(resolve_text(inst, res), out_path, out);
  return 0;
}

std::vector<RuleSpec> rules_from_flag(const std::string& flag) {
  if (flag == "all") return all_rules();
  return {parse_rule(flag)};
}

int cmd_metrics(const std::string& instance_path, GenFlags& gen, int count,
                std::uint64_t seed, const std::string& rule_flag,
                const std::string& out_path, std::ostream& out) {
  const auto rules = rules_from_flag(rule_flag);
  std::ostringstream csv;
  csv << metrics_csv_header() << "\n";

  if (!instance_path.empty()) {
    const Instance inst = load_instance(instance_path);
    for (const auto& rule : rules)
      csv << metrics_csv_row(file_stem(instance_path), rule.name(),
                             compute_metrics(inst, resolve_rule(inst, rule)))
          << "\n";
  } else {
    if (gen.method.empty())
      throw ConfigError("metrics needs --instance or --gen");
    EdgeList base;
    const bool has_base = !gen.base_path.empty();
    if (has_base) base = load_edge_list(gen.base_path);
    std::vector<std::vector<MetricsRecord>> records(rules.size());
    for (int i = 0; i < count; ++i) {
      const Instance inst =
          gen.make(derive_seed(seed, 8, static_cast<std::uint64_t>(i)),
                   has_base ? &base : nullptr);
      const std::string id = "gen-" + std::to_string(i);
      for (std::size_t r = 0; r < rules.size(); ++r) {
        records[r].push_back(compute_metrics(inst, resolve_rule(inst, rules[r])));
        csv << metrics_csv_row(id, rules[r].name(), records[r].back()) << "\n";
      }
    }
    if (count > 1)
      for (std::size_t r = 0; r < rules.size(); ++r)
        csv << metrics_csv_row("mean", rules[r].name(), aggregate(records[r])) << "\n";
  }
  write_output(csv.str(), out_path, out);
  return 0;
}

int cmd_generate(GenFlags& gen, std::uint64_t seed, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  EdgeList base;
  const bool has_base = !gen.base_path.empty();
  if (has_base) base = load_edge_list(gen.base_path);
  const Instance inst = gen.make(seed, has_base ? &base : nullptr);
  const Rational rate = participation_rate(inst);
  const std::string rate_line =
      "participation rate: " + rate.str() + " (" + to_decimal(rate) + ")\n";
  if (out_path.empty()) {
    out << to_text(inst);
    err << rate_line;
  } else {
    save_instance(inst, out_path);
    out << rate_line;
  }
  return 0;
}

int cmd_axioms(const std::string& rule_name, const std::string& axiom_name,
               int trials, std::uint64_t seed, const std::string& out_path,
               std::ostream& out) {
  const RuleSpec rule = parse_rule(rule_name);
  const Axiom axiom = parse_axiom(axiom_name);
  const AxiomReport report = run_axiom_trials(rule, axiom, trials, seed);
  write_output(report.to_json() + "\n", out_path, out);
  return report.passed() ? 0 : 1;
}

int cmd_unpop(const std::string& instance_path, const std::string& rule_name,
              const std::string& priority, std::ostream& out) {
  const Instance inst = load_instance(instance_path);
  RuleSpec rule = parse_rule(rule_name);
  apply_priority(rule, inst, priority);
  const Resolution res = resolve_rule(inst, rule);
  if (!is_confluent_output(res))
    throw NonConfluentMetrics("unpopularity needs a confluent resolution");
  const Reduction red = reduce(inst);
  const auto mu = unpopularity_margin(red.instance, branching_of(res, red));
  out << "mu: " << mu.margin << "\n";
  out << "unpop: " << to_decimal(Rational(mu.margin, red.instance.n)) << "\n";
  out << "popular: " << (mu.margin == 0 ? "yes" : "no") << "\n";
  return 0;
}

int cmd_experiment(const std::string& config_path, const std::string& out_path,
                   std::ostream& out) {
  std::ifstream f(config_path);
  if (!f) throw ConfigError("cannot open experiment config: " + config_path);
  std::ostringstream buf;
  buf << f.rdbuf();
  const ExperimentConfig cfg = parse_experiment_config(buf.str());
  const ExperimentResult result = run_experiment(cfg);

  std::ostringstream csv;
  csv << metrics_csv_header() << "\n";
  for (const auto& rule : result.rules)
    csv << metrics_csv_row("mean", rule.rule, rule.means) << "\n";
  for (const auto& rule : result.rules)
    if (rule.means.unpop)
      csv << "# popular " << rule.rule << ": " << rule.popular_count << "/"
          << result.instances << "\n";
  for (const auto& [cap, frac] : result.isolated_by_cap)
    csv << "# isolated d=" << cap << ": " << to_decimal(frac) << "\n";
  write_output(csv.str(), out_path, out);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ranked-delegation resolver and experiment harness"};
  app.require_subcommand(1);

  std::string instance_path, rule_name = "bfd", axiom_name, format = "text";
  std::string out_path, config_path, priority;
  std::uint64_t seed = 0;
  int trials = 1000, count = 1;
  GenFlags gen_flags;

  auto* resolve = app.add_subcommand("resolve", "compute delegation paths");
  resolve->add_option("--instance", instance_path)->required();
  resolve->add_option("--rule", rule_name)->required();
  resolve->add_option("--priority", priority, "borda tie-break order, e.g. a,b,c");
  resolve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  resolve->add_option("--out", out_path);

  auto* metrics = app.add_subcommand("metrics", "evaluation metrics per rule");
  metrics->add_option("--instance", instance_path);
  GenFlags metrics_gen;
  metrics_gen.add_to(metrics, /*method_flag=*/true);
  metrics->add_option("--count", count, "generated instances");
  metrics->add_option("--rule", rule_name, "rule name or 'all'");
  metrics->add_option("--seed", seed);
  metrics->add_option("--out", out_path);

  auto* generate = app.add_subcommand("generate", "write a synthetic instance");
  gen_flags.add_to(generate, /*method_flag=*/false);
  generate->add_option("--seed", seed);
  generate->add_option("--out", out_path);

  auto* axioms = app.add_subcommand("axioms", "randomized axiom checks");
  axioms->add_option("--rule", rule_name)->required();
  axioms->add_option("--axiom", axiom_name, "guru | gurustar | copy | iic")->required();
  axioms->add_option("--trials", trials);
  axioms->add_option("--seed", seed);
  axioms->add_option("--out", out_path);

  auto* unpop = app.add_subcommand("unpop", "unpopularity margin of a rule's branching");
  unpop->add_option("--instance", instance_path)->required();
  unpop->add_option("--rule", rule_name)->required();
  unpop->add_option("--priority", priority, "borda tie-break order, e.g. a,b,c");

  auto* experiment = app.add_subcommand("experiment", "seeded batch experiment");
  experiment->add_option("--config", config_path)->required();
  experiment->add_option("--out", out_path);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 4;
  }

  try {
    if (resolve->parsed())
      return cmd_resolve(instance_path, rule_name, priority, format, out_path, out);
    if (metrics->parsed())
      return cmd_metrics(instance_path, metrics_gen, count, seed, rule_name,
                         out_path, out);
    if (generate->parsed()) return cmd_generate(gen_flags, seed, out_path, out, err);
    if (axioms->parsed())
      return cmd_axioms(rule_name, axiom_name, trials, seed, out_path, out);
    if (unpop->parsed()) return cmd_unpop(instance_path, rule_name, priority, out);
    if (experiment->parsed()) return cmd_experiment(config_path, out_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const InsufficientNeighbors& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 4;
}

}  // namespace rankdel
