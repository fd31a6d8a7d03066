#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "comblap/io.hpp"
#include "comblap/pipeline.hpp"
#include "comblap/synthetic.hpp"
#include "helpers.hpp"

using namespace comblap;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("comblap_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig demo_config(const fs::path& out, int n = 45, int k = 5) {
  RunConfig config;
  config.demo = DemoSpec{n, 3, 8, 5};
  config.topology.kind = TopologyKind::knn;
  config.topology.k = k;
  config.tol = 1e-12;
  config.out_dir = out.string();
  return config;
}

}  // namespace

TEST_SUITE("io_pipeline") {

TEST_CASE("csv reading honors header and transpose flags") {
  auto dir = fresh_dir("csv");
  write_file(dir / "x.csv", "a,b,c\n1,2,3\n4,5,6\n");
  auto X = read_csv_matrix(dir / "x.csv", true, false);
  CHECK(X.rows() == 2);
  CHECK(X.cols() == 3);
  CHECK(X(1, 2) == 6.0);

  auto Xt = read_csv_matrix(dir / "x.csv", true, true);
  CHECK(Xt.rows() == 3);
  CHECK(Xt(2, 1) == 6.0);
}

TEST_CASE("malformed csv inputs are InputError") {
  auto dir = fresh_dir("csv_bad");
  write_file(dir / "ragged.csv", "1,2\n3\n");
  CHECK_THROWS_AS(read_csv_matrix(dir / "ragged.csv"), InputError);
  write_file(dir / "alpha.csv", "1,two\n");
  CHECK_THROWS_AS(read_csv_matrix(dir / "alpha.csv"), InputError);
  write_file(dir / "empty.csv", "");
  CHECK_THROWS_AS(read_csv_matrix(dir / "empty.csv"), InputError);
  CHECK_THROWS_AS(read_csv_matrix(dir / "missing.csv"), InputError);
}

TEST_CASE("edge list TSV round trip is exact") {
  std::mt19937_64 rng(3);
  auto es = testing::random_connected_edge_set(rng, 9, 0.4);
  auto w = testing::random_weights(rng, es.edge_count());
  auto state = build_laplacian(es, w);
  auto sigma = SigmaMatrix::from_strengthened(state.strengthened);

  auto dir = fresh_dir("tsv");
  write_edge_list_tsv(dir / "graph.tsv", state, edge_resistances(es, sigma));
  auto file = read_edge_list_tsv(dir / "graph.tsv");

  CHECK(file.n == 9);
  REQUIRE(static_cast<int>(file.edges.size()) == es.edge_count());
  for (int e = 0; e < es.edge_count(); ++e) {
    CHECK(file.edges[e] == es.edge(e));
    CHECK(file.weights[e] == state.w[e]);
    CHECK(file.costs[e] == es.cost(e));
    CHECK(file.resistances[e] == sigma.resistance(es.edge(e)));
  }
}

TEST_CASE("edge list TSV rejects malformed rows") {
  auto dir = fresh_dir("tsv_bad");
  write_file(dir / "wrong_cols.tsv", "0\t1\t2\t3\n");
  CHECK_THROWS_AS(read_edge_list_tsv(dir / "wrong_cols.tsv"), InputError);
  write_file(dir / "past_n.tsv", "# n=2 m=1\n0\t5\n");
  CHECK_THROWS_AS(read_edge_list_tsv(dir / "past_n.tsv"), InputError);
  write_file(dir / "empty.tsv", "# n=3 m=0\n");
  CHECK_THROWS_AS(read_edge_list_tsv(dir / "empty.tsv"), InputError);
}

TEST_CASE("two distinct rows learn the single edge at w = 1/h") {
  auto dir = fresh_dir("two_nodes");
  write_file(dir / "x.csv", "0\n1\n");
  RunConfig config;
  config.csv_path = (dir / "x.csv").string();
  config.topology.kind = TopologyKind::complete;
  config.out_dir = (dir / "out").string();
  auto metrics = run(config);
  CHECK(metrics.n == 2);
  CHECK(metrics.m_input == 1);
  CHECK(metrics.status == SolveStatus::converged);

  auto graph = read_edge_list_tsv(dir / "out" / "graph.tsv");
  // Median sigma equals the single distance, so h = e and w = 1/e.
  CHECK(graph.costs[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(graph.weights[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
}

TEST_CASE("emitted graph reloads to the reported log omega") {
  auto dir = fresh_dir("reload");
  auto metrics = run(demo_config(dir / "out"));
  CHECK(metrics.status == SolveStatus::converged);
  CHECK(std::abs(metrics.sum_hw - (metrics.n - 1)) <= 1e-4);

  auto file = read_edge_list_tsv(dir / "out" / "graph.tsv");
  Vector w(file.weights.size());
  for (std::size_t e = 0; e < file.weights.size(); ++e) w[e] = file.weights[e];
  auto state = build_laplacian(EdgeSet(file.n, file.edges, file.costs), w);
  CHECK(std::abs(log_tree_weight(state) - metrics.log_omega) <= 1e-9);
}

TEST_CASE("library-level determinism: identical runs, identical bytes") {
  auto dir_a = fresh_dir("det_a");
  auto dir_b = fresh_dir("det_b");
  RunConfig config_a = demo_config(dir_a);
  config_a.rule = SelectionKind::random;
  config_a.seed = 31;
  RunConfig config_b = config_a;
  config_b.out_dir = dir_b.string();
  run(config_a);
  run(config_b);
  CHECK(slurp(dir_a / "graph.tsv") == slurp(dir_b / "graph.tsv"));
  CHECK(slurp(dir_a / "metrics.json") == slurp(dir_b / "metrics.json"));
}

TEST_CASE("disconnected topology propagates with components listed") {
  auto dir = fresh_dir("disc");
  // Two far blobs, K=1.
  write_file(dir / "x.csv", "0\n0.1\n100\n100.1\n");
  RunConfig config;
  config.csv_path = (dir / "x.csv").string();
  config.cost.family = CostFamily::gmrf;
  config.cost.alpha = 0.0;
  config.topology.kind = TopologyKind::knn;
  config.topology.k = 1;
  config.out_dir = (dir / "out").string();
  try {
    run(config);
    FAIL("expected DisconnectedError");
  } catch (const DisconnectedError& e) {
    CHECK(e.components().size() == 2);
  }
}

TEST_CASE("file topology with and without explicit costs") {
  auto dir = fresh_dir("file_topo");
  write_file(dir / "x.csv", "0\n1\n2\n");
  // With costs.
  write_file(dir / "edges_h.tsv", "0\t1\t2.0\n1\t2\t4.0\n");
  RunConfig config;
  config.csv_path = (dir / "x.csv").string();
  config.topology.kind = TopologyKind::file;
  config.topology.path = (dir / "edges_h.tsv").string();
  config.out_dir = (dir / "out1").string();
  auto metrics = run(config);
  CHECK(metrics.m_input == 2);
  auto graph = read_edge_list_tsv(dir / "out1" / "graph.tsv");
  CHECK(graph.costs[0] == 2.0);
  CHECK(graph.costs[1] == 4.0);
  // Tree instance: w_e = 1/h_e at the optimum.
  CHECK(graph.weights[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(graph.weights[1] == doctest::Approx(0.25).epsilon(1e-9));

  // Without costs: pulled from the configured cost family over X.
  write_file(dir / "edges_bare.tsv", "0\t1\n1\t2\n");
  config.topology.path = (dir / "edges_bare.tsv").string();
  config.cost.family = CostFamily::gmrf;
  config.cost.alpha = 0.5;
  config.out_dir = (dir / "out2").string();
  auto metrics2 = run(config);
  auto graph2 = read_edge_list_tsv(dir / "out2" / "graph.tsv");
  CHECK(graph2.costs[0] == doctest::Approx(1.5).epsilon(1e-12));  // alpha + 1
  CHECK(metrics2.m_input == 2);
}

TEST_CASE("precomputed cost table feeds any topology") {
  auto dir = fresh_dir("cost_file");
  write_file(dir / "h.tsv", "0\t1\t1.0\n0\t2\t2.0\n1\t2\t1.5\n");
  RunConfig config;
  config.cost_file = (dir / "h.tsv").string();
  config.topology.kind = TopologyKind::complete;
  config.out_dir = (dir / "out").string();
  auto metrics = run(config);
  CHECK(metrics.n == 3);
  CHECK(metrics.m_input == 3);

  // Missing pair: complete topology must name it.
  write_file(dir / "partial.tsv", "0\t1\t1.0\n1\t2\t1.5\n");
  config.cost_file = (dir / "partial.tsv").string();
  CHECK_THROWS_AS(run(config), InputError);
}

TEST_CASE("sweep over K reuses one cost table and tolerates disconnection") {
  auto dir = fresh_dir("sweep_k");
  // Two far blobs: K=1 disconnected, larger K fine.
  write_file(dir / "x.csv", "0\n0.1\n0.2\n100\n100.1\n100.2\n");
  RunConfig config;
  config.csv_path = (dir / "x.csv").string();
  config.cost.family = CostFamily::gmrf;
  config.cost.alpha = 0.1;
  config.topology.kind = TopologyKind::knn;
  config.tol = 1e-12;
  config.out_dir = dir.string();
  auto rows = sweep_k(config, {1, 3, 5});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].status == "disconnected");
  CHECK(rows[1].status == "converged");
  CHECK(rows[2].status == "converged");

  // K = n-1 row coincides with a complete-topology run.
  RunConfig complete = config;
  complete.topology.kind = TopologyKind::complete;
  complete.out_dir = (dir / "complete").string();
  auto complete_metrics = run(complete);
  CHECK(rows[2].m_input == complete_metrics.m_input);
  CHECK(rows[2].log_omega == doctest::Approx(complete_metrics.log_omega).epsilon(1e-12));

  CHECK(fs::exists(dir / "sweep_k.csv"));
  CHECK(fs::exists(dir / "sweep_k.json"));
}

TEST_CASE("rule sweep solves one instance to a shared objective") {
  auto dir = fresh_dir("sweep_rules");
  RunConfig config = demo_config(dir, 30, 4);
  auto rows = sweep_rules(
      config, {SelectionKind::cyclic, SelectionKind::random, SelectionKind::pgs});
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) CHECK(row.status == "converged");
  CHECK(std::abs(rows[0].objective - rows[1].objective) <= 1e-6);
  CHECK(std::abs(rows[0].objective - rows[2].objective) <= 1e-6);
  CHECK(fs::exists(dir / "sweep_rules.csv"));
  CHECK(fs::exists(dir / "sweep_rules.json"));
}

#ifdef COMBLAP_CLI_PATH
TEST_CASE("cli: determinism, exit codes") {
  const std::string cli = COMBLAP_CLI_PATH;
  auto dir = fresh_dir("cli");
  auto quoted = [](const fs::path& p) { return "'" + p.string() + "'"; };

  // Byte-identical artifacts across two identical invocations.
  const std::string base = cli +
      " run --demo 36 3 6 9 --topology knn --k 4 --rule random --seed 5 --out ";
  CHECK(std::system((base + quoted(dir / "r1") + " >/dev/null").c_str()) == 0);
  CHECK(std::system((base + quoted(dir / "r2") + " >/dev/null").c_str()) == 0);
  CHECK(slurp(dir / "r1" / "graph.tsv") == slurp(dir / "r2" / "graph.tsv"));
  CHECK(slurp(dir / "r1" / "metrics.json") == slurp(dir / "r2" / "metrics.json"));

  // Exit 2: disconnected topology.
  write_file(dir / "blobs.csv", "0\n0.1\n50\n50.1\n");
  int rc = std::system((cli + " run --input " + quoted(dir / "blobs.csv") +
                        " --cost gmrf --alpha 0 --topology knn --k 1 --out " +
                        quoted(dir / "d") + " 2>/dev/null")
                           .c_str());
  CHECK(WEXITSTATUS(rc) == 2);

  // Exit 3: epoch cap hit.
  rc = std::system((cli + " run --demo 36 3 6 9 --topology knn --k 4 --max-epochs 1"
                          " --tol 1e-16 --out " +
                    quoted(dir / "m") + " >/dev/null")
                       .c_str());
  CHECK(WEXITSTATUS(rc) == 3);

  // Exit 4: unreadable input.
  rc = std::system((cli + " run --input /nonexistent.csv --out " + quoted(dir / "e") +
                    " 2>/dev/null")
                       .c_str());
  CHECK(WEXITSTATUS(rc) == 4);
}
#endif

}  // TEST_SUITE
