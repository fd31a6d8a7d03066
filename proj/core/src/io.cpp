#include "comblap/io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace comblap {

namespace {

using ordered_json = nlohmann::ordered_json;

double parse_double(const std::string& token, const std::filesystem::path& path, int line) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  double value{};
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError(path.string() + ":" + std::to_string(line) + ": cannot parse number '" +
                     token + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Matrix read_csv_matrix(const std::filesystem::path& path, bool skip_header, bool transpose) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path.string());

  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && skip_header) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      std::string token = line.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
      // trim surrounding spaces
      const auto first = token.find_first_not_of(" \t");
      if (first == std::string::npos) {
        throw InputError(path.string() + ":" + std::to_string(lineno) + ": empty field");
      }
      const auto last = token.find_last_not_of(" \t");
      row.push_back(parse_double(token.substr(first, last - first + 1), path, lineno));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": ragged row (" +
                       std::to_string(row.size()) + " fields, expected " +
                       std::to_string(rows.front().size()) + ")");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("empty CSV input: " + path.string());

  Matrix X(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.front().size(); ++j) X(i, j) = rows[i][j];
  }
  if (transpose) return X.transpose();
  return X;
}

EdgeListFile read_edge_list_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list: " + path.string());

  EdgeListFile out;
  int header_n = -1;
  std::string line;
  int lineno = 0;
  int columns = -1;
  int max_index = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("n=");
      if (pos != std::string::npos) {
        header_n = std::atoi(line.c_str() + pos + 2);
      }
      continue;
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.size() != 2 && tokens.size() != 3 && tokens.size() != 5) {
      throw InputError(path.string() + ":" + std::to_string(lineno) +
                       ": expected 'i j', 'i j h' or 'i j w h r', got " +
                       std::to_string(tokens.size()) + " fields");
    }
    if (columns == -1) columns = static_cast<int>(tokens.size());
    if (static_cast<int>(tokens.size()) != columns) {
      throw InputError(path.string() + ":" + std::to_string(lineno) +
                       ": inconsistent column count");
    }
    const int i = static_cast<int>(parse_double(tokens[0], path, lineno));
    const int j = static_cast<int>(parse_double(tokens[1], path, lineno));
    out.edges.emplace_back(i, j);
    max_index = std::max({max_index, i, j});
    if (columns == 3) {
      out.costs.push_back(parse_double(tokens[2], path, lineno));
    } else if (columns == 5) {
      out.weights.push_back(parse_double(tokens[2], path, lineno));
      out.costs.push_back(parse_double(tokens[3], path, lineno));
      out.resistances.push_back(parse_double(tokens[4], path, lineno));
    }
  }
  if (out.edges.empty()) throw InputError("edge list has no edges: " + path.string());
  out.n = header_n > 0 ? header_n : max_index + 1;
  if (max_index >= out.n) {
    throw InputError("edge list references node " + std::to_string(max_index) +
                     " but header says n=" + std::to_string(out.n));
  }
  return out;
}

void atomic_write_text(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream outf(tmp, std::ios::binary | std::ios::trunc);
    if (!outf) throw InputError("cannot write file: " + tmp.string());
    outf << content;
    if (!outf.flush()) throw InputError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_edge_list_tsv(const std::filesystem::path& path, const GraphState& state,
                         const Vector& resistances) {
  const int m = state.edge_set.edge_count();
  std::string body = "# n=" + std::to_string(state.node_count()) +
                     " m=" + std::to_string(m) + "\n";
  for (int e = 0; e < m; ++e) {
    const Edge& ed = state.edge_set.edge(e);
    body += std::to_string(ed.i) + "\t" + std::to_string(ed.j) + "\t" +
            format_double(state.w[e]) + "\t" + format_double(state.edge_set.cost(e)) + "\t" +
            format_double(resistances[e]) + "\n";
  }
  atomic_write_text(path, body);
}

std::string status_name(SolveStatus status) {
  return status == SolveStatus::converged ? "converged" : "max_epochs";
}

void write_metrics_json(const std::filesystem::path& path, const MetricsReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["m_input"] = report.m_input;
  j["m_active"] = report.m_active;
  j["log_omega"] = report.log_omega;
  j["sum_hw"] = report.sum_hw;
  j["kkt"] = {{"max_active_gap", report.kkt.max_active_gap},
              {"max_inactive_violation", report.kkt.max_inactive_violation},
              {"max_weight_bound_violation", report.kkt.max_weight_bound_violation}};
  j["epochs"] = report.epochs;
  j["status"] = status_name(report.status);
  atomic_write_text(path, j.dump(2) + "\n");
}

void write_trace_json(const std::filesystem::path& path, const SolverTrace& trace) {
  ordered_json j;
  j["epochs"] = ordered_json::array();
  for (const auto& epoch : trace.epochs) {
    j["epochs"].push_back(
        {{"F", epoch.objective}, {"wall_ms", epoch.wall_ms}, {"updates", epoch.updates}});
  }
  j["status"] = status_name(trace.status);
  j["final"] = {{"m_active", trace.m_active},
                {"logdet", trace.log_det},
                {"sum_hw", trace.sum_hw}};
  atomic_write_text(path, j.dump(2) + "\n");
}

}  // namespace comblap
