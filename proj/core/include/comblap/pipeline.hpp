#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comblap/costs.hpp"
#include "comblap/io.hpp"
#include "comblap/solver.hpp"
#include "comblap/topology.hpp"

namespace comblap {

struct DemoSpec {
  int n = 90;
  int clusters = 3;
  int dim = 10;
  std::uint64_t seed = 0;
};

/// Full description of one end-to-end run. Exactly one of csv_path / demo /
/// cost_file supplies the pairwise costs (cost_file may also accompany a
/// `file` topology that lists edges without costs).
struct RunConfig {
  std::optional<std::string> csv_path;
  bool csv_header = false;
  bool csv_transpose = false;
  std::optional<DemoSpec> demo;
  std::optional<std::string> cost_file;  // TSV `i j h`, all off-diagonal pairs

  CostConfig cost;
  TopologySpec topology;

  SelectionKind rule = SelectionKind::cyclic;
  double tol = 1e-10;
  int max_epochs = 1000;
  std::uint64_t seed = 0;

  std::string out_dir = ".";
};

/// KKT certificate residuals of a solved state (resistances from sigma).
KKTReport compute_kkt(const GraphState& state, const SigmaMatrix& sigma);

/// Effective resistance of every edge in the set, read from sigma.
Vector edge_resistances(const EdgeSet& edge_set, const SigmaMatrix& sigma);

/// Builds the candidate edge set for the config (costs resolved from data,
/// demo generator, or cost file; topology per spec). Exposed for sweeps and
/// tests; run() uses it internally.
EdgeSet build_candidate_edges(const RunConfig& config);

/// One full run: ingest, topology, solve, write graph.tsv / trace.json /
/// metrics.json into out_dir (created if missing). Throws DisconnectedError
/// for an unusable topology and InputError for bad input; a max-epochs stop
/// is reported in the returned metrics, not thrown.
MetricsReport run(const RunConfig& config);

struct SweepKRow {
  int k = 0;
  int m_input = 0;
  int m_active = 0;
  double log_omega = 0.0;
  int epochs = 0;
  double wall_ms = 0.0;
  std::string status;  // converged | max_epochs | disconnected
};

/// Solves the same instance for each K over one shared cost table; a K whose
/// KNN graph is disconnected yields a "disconnected" row instead of failing
/// the sweep. Writes sweep_k.csv and sweep_k.json into out_dir.
std::vector<SweepKRow> sweep_k(const RunConfig& base, const std::vector<int>& k_values);

struct SweepRuleRow {
  std::string rule;
  int epochs = 0;
  double wall_ms = 0.0;
  double objective = 0.0;
  double log_omega = 0.0;
  std::string status;
};

/// Solves one fixed instance under each selection rule (epochs-vs-time
/// comparison). Writes sweep_rules.csv and sweep_rules.json into out_dir.
std::vector<SweepRuleRow> sweep_rules(const RunConfig& base,
                                      const std::vector<SelectionKind>& rules);

std::string rule_name(SelectionKind kind);
SelectionKind parse_rule(const std::string& name);

}  // namespace comblap
