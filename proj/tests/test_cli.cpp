#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fraclog/cli.hpp"
#include "fraclog/error.hpp"
#include "json.hpp"

using namespace fraclog;

namespace {
ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected fraclog::Error");
  return ErrorKind::validation;
}

std::size_t column_of(const TableArtifact& t, const std::string& label) {
  for (std::size_t i = 0; i < t.column_labels.size(); ++i) {
    if (t.column_labels[i] == label) return i;
  }
  FAIL("missing column " << label);
  return 0;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(-0.00001, 4) == "0.0000");
  CHECK(format_number(-0.0, 4) == "0.0000");
  CHECK(format_number(2.30258509, 4) == "2.3026");
  CHECK(format_number(-1.22685, 4).substr(0, 6) == "-1.226");
  CHECK(format_number(0.231969316684319, -1) == "0.231969316684");
  CHECK(format_number(0.15000000000000002, -1) == "0.15");
  CHECK(format_number(1e-20, -1) == "1e-20");
}

TEST_CASE("config text, precedence and rejection of unknown keys") {
  RunConfig cfg;
  load_config_text(cfg, "# comment\nalpha = 0.5\nt-end=3\ninterp = substitution\nformat=structured\n");
  CHECK(cfg.alpha == 0.5);
  CHECK(cfg.t_end == 3.0);
  CHECK(cfg.interp == ArgInterpretation::differential_substitution);
  CHECK(cfg.format == OutputFormat::structured);

  std::map<std::string, std::string> env = {{"FRACLOG_ALPHA", "0.7"}, {"FRACLOG_STEPS", "64"}};
  apply_environment(cfg, [&](const char* name) -> const char* {
    const auto it = env.find(name);
    return it == env.end() ? nullptr : it->second.c_str();
  });
  CHECK(cfg.alpha == 0.7);
  CHECK(cfg.steps == 64);
  CHECK(cfg.t_end == 3.0);
  set_config_value(cfg, "alpha", "0.9");
  CHECK(cfg.alpha == 0.9);

  CHECK(kind_of([&] { load_config_text(cfg, "alpah = 0.5\n"); }) == ErrorKind::validation);
  CHECK(kind_of([&] { load_config_text(cfg, "alpha 0.5\n"); }) == ErrorKind::validation);
  CHECK(kind_of([&] { set_config_value(cfg, "steps", "ten"); }) == ErrorKind::validation);
  CHECK(kind_of([&] { set_config_value(cfg, "alpha", "0,5"); }) == ErrorKind::validation);
  CHECK(kind_of([&] { set_config_value(cfg, "interp", "other"); }) == ErrorKind::validation);
  CHECK(kind_of([&] { load_config_file(cfg, "/nonexistent/fraclog.cfg"); }) == ErrorKind::io);
}

TEST_CASE("config ranges") {
  RunConfig cfg;
  cfg.series.tol = 0.5;
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::validation);
  cfg = RunConfig{};
  cfg.steps = 2;
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::validation);
}

TEST_CASE("config hash") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  RunConfig a, b;
  b.out = "elsewhere.csv";
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a).size() == 16);
  b.alpha = 0.5;
  CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("table1 layout and cells") {
  const TableArtifact t = cmd_table1(RunConfig{});
  CHECK(t.column_labels.size() == 10);
  CHECK(t.cells.size() == 20);
  CHECK(t.cells[0][2] == doctest::Approx(8.0407).epsilon(5e-5));
  CHECK(t.row_labels.back() == "log(10)");
  CHECK(t.cells.back()[9] == doctest::Approx(2.3026).epsilon(1e-4));
  CHECK(t.row_labels[10] == "log(1)");
  for (double v : t.cells[10]) CHECK(v == 0.0);
  const std::string csv = render_csv(t);
  CHECK(csv.find("row,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1\n") != std::string::npos);
  CHECK(csv.find("log(1),0.0000,0.0000") != std::string::npos);
  CHECK(csv.find("# config_hash: fnv1a64:") != std::string::npos);
}

TEST_CASE("table2 rows") {
  const TableArtifact t = cmd_table2(RunConfig{});
  REQUIRE(t.cells.size() == 14);
  const auto& last = t.cells[13];
  CHECK(last[column_of(t, "log(x1*x2)")] == doctest::Approx(2.7478).epsilon(1e-4));
  CHECK(last[column_of(t, "log(x1)-log(x2)")] == doctest::Approx(1.4763).epsilon(1e-4));
  CHECK(t.cells[0][column_of(t, "log(x1/x2)")] == doctest::Approx(-0.5122).epsilon(1e-4));
  for (const auto& row : t.cells) {
    const double prod = std::stod(format_number(row[column_of(t, "log(x1*x2)")], 4));
    const double sum = std::stod(format_number(row[column_of(t, "log(x1)+log(x2)")], 4));
    CHECK(std::fabs(prod - sum) <= 1e-3);
  }
}

TEST_CASE("figure1 data") {
  const TableArtifact t = cmd_figure1(RunConfig{});
  CHECK(t.cells.size() == 2000);
  for (std::size_t i = 1; i < t.cells.size(); ++i) {
    if (t.cells[i][1] == t.cells[i - 1][1]) CHECK(t.cells[i][2] > t.cells[i - 1][2]);
  }
  CHECK(t.cells[19][0] == 1.0);
  CHECK(t.cells[19][2] == 0.0);
  CHECK(t.cells[199][0] == 10.0);
  CHECK(t.cells[199][2] == doctest::Approx(0.7327).epsilon(1e-4));
}

TEST_CASE("solve") {
  RunConfig cfg;
  cfg.method = SolveMethod::classical;
  cfg.u0 = 0.1;
  cfg.t_end = 1.0;
  cfg.steps = 1000;
  const TableArtifact classical = cmd_solve(cfg);
  CHECK(classical.cells.back()[1] == doctest::Approx(0.23197).epsilon(1e-5));

  cfg.method = SolveMethod::paper;
  const TableArtifact closed = cmd_solve(cfg);
  for (std::size_t i = 0; i < closed.cells.size(); ++i) {
    CHECK(std::fabs(closed.cells[i][1] - classical.cells[i][1]) <= 1e-12 * classical.cells[i][1]);
  }

  cfg.method = SolveMethod::west;
  cfg.u0 = 0.3;
  CHECK(kind_of([&] { cmd_solve(cfg); }) == ErrorKind::convergence_domain);

  cfg.method = SolveMethod::classical;
  cfg.alpha = 0.5;
  CHECK(kind_of([&] { cmd_solve(cfg); }) == ErrorKind::validation);

  cfg = RunConfig{};
  cfg.model = ModelKind::si;
  cfg.method = SolveMethod::west;
  CHECK(kind_of([&] { cmd_solve(cfg); }) == ErrorKind::validation);

  cfg.method = SolveMethod::fabm;
  cfg.steps = 200;
  const TableArtifact si = cmd_solve(cfg);
  CHECK(si.column_labels == std::vector<std::string>{"t", "I", "S"});
  CHECK(si.cells[0][1] == 1.0);
  CHECK(si.cells[0][2] == 999.0);
}

TEST_CASE("compare") {
  RunConfig cfg;
  cfg.u0 = 0.9;
  cfg.steps = 400;
  const auto out = cmd_compare(cfg);
  REQUIRE(out.size() == 2);
  const TableArtifact& summary = out[0];
  CHECK(summary.row_labels.size() == 4);
  for (const auto& row : summary.cells) {
    for (std::size_t j = 2; j < row.size(); ++j) CHECK(row[j] < 1e-3);
  }
  CHECK(out[1].column_labels.front() == "t");
  CHECK(out[1].cells.size() == 401);

  RunConfig sis;
  sis.model = ModelKind::sis;
  sis.N = 100.0;
  sis.beta = 0.01;
  sis.lambda = 2.0;
  sis.I0 = 10.0;
  CHECK(kind_of([&] { cmd_compare(sis); }) == ErrorKind::degenerate_model);

  sis.lambda = 0.2;
  sis.alpha = 0.7;
  sis.steps = 200;
  CHECK(cmd_compare(sis)[0].row_labels.size() == 3);
}

TEST_CASE("structured output parses and carries provenance") {
  const std::string text = render_structured({cmd_table2(RunConfig{})});
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["tables"][0]["name"] == "table2");
  CHECK(doc["tables"][0]["rows"].size() == 14);
  CHECK(doc["tables"][0]["provenance"]["interpretation"] == "jumarie");
}

TEST_CASE("written files are byte identical across runs") {
  RunConfig cfg;
  cfg.out = "test_cli_table1_a.csv";
  write_artifacts({cmd_table1(cfg)}, cfg);
  RunConfig again;
  again.out = "test_cli_table1_b.csv";
  write_artifacts({cmd_table1(again)}, again);
  CHECK(slurp("test_cli_table1_a.csv") == slurp("test_cli_table1_b.csv"));
  CHECK(slurp("test_cli_table1_a.csv").find('\r') == std::string::npos);

  RunConfig cmp;
  cmp.u0 = 0.9;
  cmp.steps = 40;
  cmp.out = "test_cli_compare.csv";
  write_artifacts(cmd_compare(cmp), cmp);
  CHECK(!slurp("test_cli_compare.curves.csv").empty());

  RunConfig bad;
  bad.out = "/nonexistent/dir/out.csv";
  CHECK(kind_of([&] { write_artifacts({cmd_table2(bad)}, bad); }) == ErrorKind::io);
  for (const char* f : {"test_cli_table1_a.csv", "test_cli_table1_b.csv", "test_cli_compare.csv",
                        "test_cli_compare.curves.csv"}) {
    std::remove(f);
  }
}

TEST_CASE("unknown command") {
  CHECK(kind_of([] { run_command("plot", RunConfig{}); }) == ErrorKind::validation);
}
