#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "comblap/edge_set.hpp"
#include "comblap/graph_state.hpp"
#include "comblap/solver.hpp"

namespace comblap {

/// Numeric CSV: comma-separated, UTF-8, one row per node (columns are
/// signals). `skip_header` drops the first line; `transpose` swaps the
/// convention. Malformed content raises InputError.
Matrix read_csv_matrix(const std::filesystem::path& path, bool skip_header = false,
                       bool transpose = false);

/// Edge-list TSV contents. Lines are `i j [h [w r]]`, `#` lines are
/// comments; a `# n=<n> m=<m>` header pins the node count (otherwise
/// max index + 1 is used). Column counts must be consistent across rows.
struct EdgeListFile {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<double> costs;    // empty when the file has no h column
  std::vector<double> weights;  // empty unless the 5-column graph format
  std::vector<double> resistances;
};

EdgeListFile read_edge_list_tsv(const std::filesystem::path& path);

/// Writes `# n=<n> m=<m>` then one `i<TAB>j<TAB>w<TAB>h<TAB>r` line per edge
/// with round-trip-exact floats. Atomic: temp file + rename.
void write_edge_list_tsv(const std::filesystem::path& path, const GraphState& state,
                         const Vector& resistances);

/// Per-run KKT certificate residuals (Proposition-style optimality report).
struct KKTReport {
  double max_active_gap = 0.0;           // max over w_e > eps of |r_e - h_e| / h_e
  double max_inactive_violation = 0.0;   // max over w_e <= eps of max(0, r_e - h_e)
  double max_weight_bound_violation = 0.0;  // max over all e of max(0, w_e - 1/h_e)
};

struct MetricsReport {
  int n = 0;
  int m_input = 0;
  int m_active = 0;
  double log_omega = 0.0;  // log spanning-tree weight sum of the learned graph
  double sum_hw = 0.0;
  KKTReport kkt;
  int epochs = 0;
  double wall_ms = 0.0;  // total solve wall clock; reported in the trace file
  SolveStatus status = SolveStatus::converged;
};

/// {n, m_input, m_active, log_omega, sum_hw, kkt{...}, epochs, status}.
/// Timing is deliberately left to the trace file so the metrics artifact is
/// byte-reproducible for a fixed config and seed. Atomic write.
void write_metrics_json(const std::filesystem::path& path, const MetricsReport& report);

/// {epochs: [{F, wall_ms, updates}...], status, final: {m_active, logdet, sum_hw}}.
void write_trace_json(const std::filesystem::path& path, const SolverTrace& trace);

/// Atomic small-file write helper (temp + rename in the target directory).
void atomic_write_text(const std::filesystem::path& path, const std::string& content);

std::string status_name(SolveStatus status);

}  // namespace comblap
