// comblap: learn a sparse, well-connected weighted graph from data by
// maximizing the spanning-tree weight of its Laplacian under per-edge costs.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "comblap/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitDisconnected = 2;
constexpr int kExitMaxEpochs = 3;
constexpr int kExitInputError = 4;

struct CommonFlags {
  std::string input;
  bool header = false;
  bool transpose = false;
  std::vector<std::string> demo;  // n k_clusters dim seed
  std::string cost_file;

  std::string cost = "gaussian";
  double alpha = -1.0;  // gmrf has no default; must be given explicitly
  double p = 2.0;
  double sigma = 0.0;   // 0 = unset -> median heuristic

  std::string topology = "complete";
  int k = 0;
  std::string edges;

  std::string rule = "cyclic";
  double tol = 1e-10;
  int max_epochs = 1000;
  std::uint64_t seed = 0;

  std::string out = ".";
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--input", f.input, "CSV data matrix, rows = nodes, columns = signals");
  cmd->add_flag("--header", f.header, "Skip the first CSV row");
  cmd->add_flag("--transpose", f.transpose, "Input is signals x nodes; transpose on load");
  cmd->add_option("--demo", f.demo,
                  "Generate clustered-Gaussian demo data: n k_clusters dim seed")
      ->expected(4);
  cmd->add_option("--cost-file", f.cost_file, "Precomputed pair costs, TSV lines `i j h`");

  cmd->add_option("--cost", f.cost, "Cost family: gmrf | lp | gaussian")
      ->check(CLI::IsMember({"gmrf", "lp", "gaussian"}));
  cmd->add_option("--alpha", f.alpha, "gmrf regularizer (required for --cost gmrf)");
  cmd->add_option("--p", f.p, "lp variation exponent (default 2)");
  cmd->add_option("--sigma", f.sigma,
                  "Gaussian bandwidth; omit for the median pairwise distance");

  cmd->add_option("--topology", f.topology, "Candidate edges: complete | knn | file")
      ->check(CLI::IsMember({"complete", "knn", "file"}));
  cmd->add_option("--k", f.k, "Neighbors per node for --topology knn");
  cmd->add_option("--edges", f.edges, "Edge list TSV `i j [h]` for --topology file");

  cmd->add_option("--rule", f.rule, "Edge selection: cyclic | random | pgs")
      ->check(CLI::IsMember({"cyclic", "random", "pgs"}));
  cmd->add_option("--tol", f.tol, "Per-epoch objective decrease threshold (default 1e-10)");
  cmd->add_option("--max-epochs", f.max_epochs, "Epoch cap (default 1000)");
  cmd->add_option("--seed", f.seed, "Seed for the random selection rule (default 0)");

  cmd->add_option("--out", f.out, "Output directory (default .)");
}

comblap::RunConfig to_run_config(const CommonFlags& f) {
  comblap::RunConfig config;
  if (!f.input.empty()) config.csv_path = f.input;
  config.csv_header = f.header;
  config.csv_transpose = f.transpose;
  if (!f.demo.empty()) {
    comblap::DemoSpec d;
    d.n = std::stoi(f.demo[0]);
    d.clusters = std::stoi(f.demo[1]);
    d.dim = std::stoi(f.demo[2]);
    d.seed = std::stoull(f.demo[3]);
    config.demo = d;
  }
  if (!f.cost_file.empty()) config.cost_file = f.cost_file;

  if (f.cost == "gmrf") {
    if (f.alpha < 0.0) {
      throw comblap::InputError("--cost gmrf requires an explicit --alpha >= 0");
    }
    config.cost.family = comblap::CostFamily::gmrf;
    config.cost.alpha = f.alpha;
  } else if (f.cost == "lp") {
    config.cost.family = comblap::CostFamily::lp_variation;
    config.cost.p = f.p;
  } else {
    config.cost.family = comblap::CostFamily::gaussian_kernel;
    if (f.sigma > 0.0) config.cost.sigma = f.sigma;
  }

  if (f.topology == "complete") {
    config.topology.kind = comblap::TopologyKind::complete;
  } else if (f.topology == "knn") {
    if (f.k < 1) throw comblap::InputError("--topology knn requires --k >= 1");
    config.topology.kind = comblap::TopologyKind::knn;
    config.topology.k = f.k;
  } else {
    if (f.edges.empty()) throw comblap::InputError("--topology file requires --edges <path>");
    config.topology.kind = comblap::TopologyKind::file;
    config.topology.path = f.edges;
  }

  config.rule = comblap::parse_rule(f.rule);
  config.tol = f.tol;
  config.max_epochs = f.max_epochs;
  config.seed = f.seed;
  config.out_dir = f.out;
  return config;
}

int exit_code_for(comblap::SolveStatus status) {
  return status == comblap::SolveStatus::converged ? kExitOk : kExitMaxEpochs;
}

void print_metrics(const comblap::MetricsReport& m) {
  std::printf("n=%d m_input=%d m_active=%d log_omega=%.12g sum_hw=%.12g epochs=%d status=%s\n",
              m.n, m.m_input, m.m_active, m.log_omega, m.sum_hw, m.epochs,
              comblap::status_name(m.status).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comblap: sparse well-connected graph learning by spanning-tree maximization"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "Learn a graph and write graph.tsv, "
                                                "trace.json, metrics.json");
  add_common_flags(run_cmd, run_flags);

  CommonFlags sweep_k_flags;
  std::vector<int> k_values;
  CLI::App* sweep_k_cmd =
      app.add_subcommand("sweep-k", "Solve the same data under several KNN densities");
  add_common_flags(sweep_k_cmd, sweep_k_flags);
  sweep_k_cmd->add_option("--k-values", k_values, "K values, e.g. --k-values 5 10 20")
      ->required()
      ->expected(-1);

  CommonFlags sweep_rules_flags;
  std::vector<std::string> rule_names{"cyclic", "random", "pgs"};
  CLI::App* sweep_rules_cmd =
      app.add_subcommand("sweep-rules", "Solve one instance under each selection rule");
  add_common_flags(sweep_rules_cmd, sweep_rules_flags);
  sweep_rules_cmd->add_option("--rules", rule_names, "Subset of: cyclic random pgs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const auto metrics = comblap::run(to_run_config(run_flags));
      print_metrics(metrics);
      return exit_code_for(metrics.status);
    }
    if (sweep_k_cmd->parsed()) {
      const auto rows = comblap::sweep_k(to_run_config(sweep_k_flags), k_values);
      for (const auto& row : rows) {
        std::printf("k=%d m_input=%d m_active=%d log_omega=%.12g epochs=%d status=%s\n",
                    row.k, row.m_input, row.m_active, row.log_omega, row.epochs,
                    row.status.c_str());
      }
      return kExitOk;
    }
    if (sweep_rules_cmd->parsed()) {
      std::vector<comblap::SelectionKind> rules;
      for (const auto& name : rule_names) rules.push_back(comblap::parse_rule(name));
      const auto rows = comblap::sweep_rules(to_run_config(sweep_rules_flags), rules);
      for (const auto& row : rows) {
        std::printf("rule=%s epochs=%d wall_ms=%.3f objective=%.12g status=%s\n",
                    row.rule.c_str(), row.epochs, row.wall_ms, row.objective,
                    row.status.c_str());
      }
      return kExitOk;
    }
  } catch (const comblap::DisconnectedError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDisconnected;
  } catch (const comblap::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
  return kExitInternal;
}
