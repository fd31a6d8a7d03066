#include "comblap/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <future>
#include <limits>

#include <nlohmann/json.hpp>

#include "comblap/synthetic.hpp"

namespace comblap {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Matrix load_data(const RunConfig& config) {
  if (config.csv_path && config.demo) {
    throw InputError("pass either --input or --demo, not both");
  }
  if (config.csv_path) {
    return read_csv_matrix(*config.csv_path, config.csv_header, config.csv_transpose);
  }
  if (config.demo) {
    const DemoSpec& d = *config.demo;
    return clustered_gaussians(d.n, d.clusters, d.dim, d.seed);
  }
  throw InputError("no input: pass --input <csv>, --demo, or --cost-file");
}

Matrix cost_table_from_file(const std::string& path) {
  EdgeListFile file = read_edge_list_tsv(path);
  if (file.costs.empty()) {
    throw InputError("cost file must carry an h column: " + path);
  }
  const int n = file.n;
  Matrix H = Matrix::Constant(n, n, std::numeric_limits<double>::quiet_NaN());
  H.diagonal().setZero();
  for (std::size_t e = 0; e < file.edges.size(); ++e) {
    H(file.edges[e].i, file.edges[e].j) = file.costs[e];
    H(file.edges[e].j, file.edges[e].i) = file.costs[e];
  }
  return H;
}

void require_complete_table(const Matrix& H) {
  for (int i = 0; i < H.rows(); ++i) {
    for (int j = i + 1; j < H.cols(); ++j) {
      if (std::isnan(H(i, j))) {
        throw InputError("cost file is missing pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ") required by this topology");
      }
    }
  }
}

// Pair costs for the run: from the data matrix via the configured family,
// or from a precomputed cost file.
Matrix resolve_cost_table(const RunConfig& config) {
  if (config.cost_file && (config.csv_path || config.demo)) {
    throw InputError("pass either a data input or --cost-file, not both");
  }
  if (config.cost_file) return cost_table_from_file(*config.cost_file);
  return cost_table(load_data(config), config.cost);
}

SolverConfig solver_config(const RunConfig& config) {
  SolverConfig sc;
  sc.rule.kind = config.rule;
  sc.rule.seed = config.seed;
  sc.tol = config.tol;
  sc.max_epochs = config.max_epochs;
  return sc;
}

struct SolvedRun {
  SolveResult result;
  MetricsReport metrics;
};

SolvedRun solve_instance(const EdgeSet& edge_set, const SolverConfig& sc) {
  SolvedRun out{solve(edge_set, sc), {}};
  const SolveResult& res = out.result;
  MetricsReport& metrics = out.metrics;
  metrics.n = edge_set.node_count();
  metrics.m_input = edge_set.edge_count();
  metrics.m_active = res.trace.m_active;
  metrics.log_omega = res.trace.log_det - std::log(double(edge_set.node_count()));
  metrics.sum_hw = res.trace.sum_hw;
  metrics.kkt = compute_kkt(res.state, res.sigma);
  metrics.epochs = static_cast<int>(res.trace.epochs.size());
  for (const auto& epoch : res.trace.epochs) metrics.wall_ms += epoch.wall_ms;
  metrics.status = res.trace.status;
  return out;
}

}  // namespace

KKTReport compute_kkt(const GraphState& state, const SigmaMatrix& sigma) {
  KKTReport report;
  for (int e = 0; e < state.edge_set.edge_count(); ++e) {
    const double h = state.edge_set.cost(e);
    const double r = sigma.resistance(state.edge_set.edge(e));
    const double w = state.w[e];
    if (w > kActiveWeightEps) {
      report.max_active_gap = std::max(report.max_active_gap, std::abs(r - h) / h);
    } else {
      report.max_inactive_violation = std::max(report.max_inactive_violation, r - h);
    }
    report.max_weight_bound_violation =
        std::max(report.max_weight_bound_violation, w - 1.0 / h);
  }
  report.max_inactive_violation = std::max(report.max_inactive_violation, 0.0);
  report.max_weight_bound_violation = std::max(report.max_weight_bound_violation, 0.0);
  return report;
}

Vector edge_resistances(const EdgeSet& edge_set, const SigmaMatrix& sigma) {
  Vector r(edge_set.edge_count());
  for (int e = 0; e < edge_set.edge_count(); ++e) r[e] = sigma.resistance(edge_set.edge(e));
  return r;
}

EdgeSet build_candidate_edges(const RunConfig& config) {
  switch (config.topology.kind) {
    case TopologyKind::complete: {
      Matrix H = resolve_cost_table(config);
      require_complete_table(H);
      return complete_edge_set(H);
    }
    case TopologyKind::knn: {
      Matrix H = resolve_cost_table(config);
      require_complete_table(H);
      return knn_edge_set(H, config.topology.k);
    }
    case TopologyKind::file: {
      EdgeListFile file = read_edge_list_tsv(config.topology.path);
      std::vector<double> costs = file.costs;
      if (costs.empty()) {
        // Edge list without costs: fill from the data-derived table.
        Matrix H = resolve_cost_table(config);
        if (H.rows() != file.n) {
          throw InputError("edge file n=" + std::to_string(file.n) +
                           " does not match data n=" + std::to_string(H.rows()));
        }
        costs.reserve(file.edges.size());
        for (const Edge& e : file.edges) {
          if (std::isnan(H(e.i, e.j))) {
            throw InputError("no cost available for edge (" + std::to_string(e.i) + "," +
                             std::to_string(e.j) + ")");
          }
          costs.push_back(H(e.i, e.j));
        }
      }
      return EdgeSet(file.n, std::move(file.edges), std::move(costs));
    }
  }
  throw InputError("unknown topology kind");
}

MetricsReport run(const RunConfig& config) {
  const EdgeSet edge_set = build_candidate_edges(config);
  validate_connected(edge_set);

  SolvedRun solved = solve_instance(edge_set, solver_config(config));

  const std::filesystem::path out_dir(config.out_dir);
  std::filesystem::create_directories(out_dir);
  write_edge_list_tsv(out_dir / "graph.tsv", solved.result.state,
                      edge_resistances(edge_set, solved.result.sigma));
  write_trace_json(out_dir / "trace.json", solved.result.trace);
  write_metrics_json(out_dir / "metrics.json", solved.metrics);
  return solved.metrics;
}

std::vector<SweepKRow> sweep_k(const RunConfig& base, const std::vector<int>& k_values) {
  if (k_values.empty()) throw InputError("sweep-k needs at least one K");
  const Matrix H = resolve_cost_table(base);  // one shared cost table
  require_complete_table(H);
  const SolverConfig sc = solver_config(base);

  auto solve_one = [&](int k) -> SweepKRow {
    SweepKRow row;
    row.k = k;
    EdgeSet edge_set = knn_edge_set(H, k);
    row.m_input = edge_set.edge_count();
    try {
      validate_connected(edge_set);
    } catch (const DisconnectedError&) {
      row.status = "disconnected";
      return row;
    }
    SolvedRun solved = solve_instance(edge_set, sc);
    row.m_active = solved.metrics.m_active;
    row.log_omega = solved.metrics.log_omega;
    row.epochs = solved.metrics.epochs;
    row.wall_ms = solved.metrics.wall_ms;
    row.status = status_name(solved.metrics.status);
    return row;
  };

  std::vector<std::future<SweepKRow>> futures;
  futures.reserve(k_values.size());
  for (int k : k_values) {
    futures.push_back(std::async(std::launch::async, solve_one, k));
  }
  std::vector<SweepKRow> rows;
  rows.reserve(k_values.size());
  for (auto& f : futures) rows.push_back(f.get());

  const std::filesystem::path out_dir(base.out_dir);
  std::filesystem::create_directories(out_dir);

  std::string csv = "k,m_input,m_active,log_omega,epochs,wall_ms,status\n";
  ordered_json rows_json = ordered_json::array();
  for (const auto& row : rows) {
    csv += std::to_string(row.k) + "," + std::to_string(row.m_input) + "," +
           std::to_string(row.m_active) + "," + format_double(row.log_omega) + "," +
           std::to_string(row.epochs) + "," + format_double(row.wall_ms) + "," + row.status +
           "\n";
    rows_json.push_back({{"k", row.k},
                         {"m_input", row.m_input},
                         {"m_active", row.m_active},
                         {"log_omega", row.log_omega},
                         {"epochs", row.epochs},
                         {"wall_ms", row.wall_ms},
                         {"status", row.status}});
  }
  atomic_write_text(out_dir / "sweep_k.csv", csv);
  atomic_write_text(out_dir / "sweep_k.json", rows_json.dump(2) + "\n");
  return rows;
}

std::vector<SweepRuleRow> sweep_rules(const RunConfig& base,
                                      const std::vector<SelectionKind>& rules) {
  if (rules.empty()) throw InputError("sweep-rules needs at least one rule");
  const EdgeSet edge_set = build_candidate_edges(base);
  validate_connected(edge_set);

  auto solve_one = [&](SelectionKind kind) -> SweepRuleRow {
    SweepRuleRow row;
    row.rule = rule_name(kind);
    SolverConfig sc = solver_config(base);
    sc.rule.kind = kind;
    SolvedRun solved = solve_instance(edge_set, sc);
    row.epochs = solved.metrics.epochs;
    row.wall_ms = solved.metrics.wall_ms;
    row.log_omega = solved.metrics.log_omega;
    row.objective = -solved.result.trace.log_det + solved.result.trace.sum_hw;
    row.status = status_name(solved.metrics.status);
    return row;
  };

  std::vector<std::future<SweepRuleRow>> futures;
  futures.reserve(rules.size());
  for (SelectionKind kind : rules) {
    futures.push_back(std::async(std::launch::async, solve_one, kind));
  }
  std::vector<SweepRuleRow> rows;
  rows.reserve(rules.size());
  for (auto& f : futures) rows.push_back(f.get());

  const std::filesystem::path out_dir(base.out_dir);
  std::filesystem::create_directories(out_dir);

  std::string csv = "rule,epochs,wall_ms,objective,log_omega,status\n";
  ordered_json rows_json = ordered_json::array();
  for (const auto& row : rows) {
    csv += row.rule + "," + std::to_string(row.epochs) + "," + format_double(row.wall_ms) +
           "," + format_double(row.objective) + "," + format_double(row.log_omega) + "," +
           row.status + "\n";
    rows_json.push_back({{"rule", row.rule},
                         {"epochs", row.epochs},
                         {"wall_ms", row.wall_ms},
                         {"objective", row.objective},
                         {"log_omega", row.log_omega},
                         {"status", row.status}});
  }
  atomic_write_text(out_dir / "sweep_rules.csv", csv);
  atomic_write_text(out_dir / "sweep_rules.json", rows_json.dump(2) + "\n");
  return rows;
}

std::string rule_name(SelectionKind kind) {
  switch (kind) {
    case SelectionKind::cyclic: return "cyclic";
    case SelectionKind::random: return "random";
    case SelectionKind::pgs: return "pgs";
  }
  return "?";
}

SelectionKind parse_rule(const std::string& name) {
  if (name == "cyclic") return SelectionKind::cyclic;
  if (name == "random") return SelectionKind::random;
  if (name == "pgs") return SelectionKind::pgs;
  throw InputError("unknown selection rule '" + name + "' (cyclic|random|pgs)");
}

}  // namespace comblap
