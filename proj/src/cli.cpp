#include "fraclog/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include "json.hpp"

#include "fraclog/error.hpp"
#include "fraclog/fractional.hpp"
#include "fraclog/mllog.hpp"

namespace fraclog {

namespace {

const std::vector<double> kAlphas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

struct Table2Row {
  double x1, x2, alpha;
};
const std::vector<Table2Row> kTable2Rows = {
    {0.2, 1, 0.1},   {0.2, 1, 0.2},   {0.2, 1, 0.3},    {0.75, 0.35, 0.1}, {0.75, 0.35, 0.5},
    {0.75, 0.35, 0.9}, {0.81, 0.4, 0.2}, {0.81, 0.4, 0.7}, {0.81, 0.4, 0.8},  {0.93, 0.5, 0.5},
    {2, 3, 0.6},     {3, 5, 0.7},     {6, 7, 0.8},      {10, 2, 0.9},
};

std::string normalize_key(std::string_view key) {
  std::string k(key);
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  throw Error(ErrorKind::validation,
              "config key '" + std::string(key) + "': cannot use '" + std::string(value) + "', expected " +
                  std::string(expected));
}

double parse_double(std::string_view key, std::string_view value) {
  double v = 0.0;
  const auto* first = value.data();
  if (!value.empty() && value.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(v)) {
    bad_value(key, value, "a finite number");
  }
  return v;
}

int parse_int(std::string_view key, std::string_view value) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) bad_value(key, value, "an integer");
  return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  bad_value(key, value, "true or false");
}

// Shortest text that reads back to the same double.
std::string exact_text(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string grid_label(double v) { return format_number(v, -1); }

void check_range(bool ok, std::string_view key, std::string_view range) {
  if (!ok) throw Error(ErrorKind::validation, "config key '" + std::string(key) + "' must lie in " + std::string(range));
}

LogisticProblem logistic_problem(const RunConfig& cfg) {
  LogisticProblem p{cfg.alpha, cfg.k, cfg.u0};
  p.validate();
  return p;
}

EpidemicProblem epidemic_problem(const RunConfig& cfg) {
  EpidemicProblem p{cfg.alpha, cfg.N, cfg.beta, cfg.lambda, cfg.I0};
  p.validate();
  return p;
}

EpidemicModel epidemic_of(ModelKind m) { return m == ModelKind::si ? EpidemicModel::si : EpidemicModel::sis; }

EpidemicOptions epidemic_options(const RunConfig& cfg) { return {cfg.alpha_exponent, cfg.series}; }

FabmOptions fabm_options(const RunConfig& cfg) {
  FabmOptions o;
  o.corrector_passes = cfg.corrector_passes;
  return o;
}

std::string problem_note(const RunConfig& cfg) {
  std::string s = "model=" + std::string(to_string(cfg.model)) + " alpha=" + exact_text(cfg.alpha);
  if (cfg.model == ModelKind::logistic) {
    s += " k=" + exact_text(cfg.k) + " u0=" + exact_text(cfg.u0);
  } else {
    s += " N=" + exact_text(cfg.N) + " beta=" + exact_text(cfg.beta) + " lambda=" + exact_text(cfg.lambda) +
         " I0=" + exact_text(cfg.I0) + " alpha_exponent=" + (cfg.alpha_exponent ? "true" : "false");
  }
  s += " t_end=" + exact_text(cfg.t_end) + " steps=" + std::to_string(cfg.steps);
  return s;
}

std::string cell_text(const TableArtifact& t, double v) { return format_number(v, t.decimals); }

std::string stem_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return path.substr(0, dot);
  return path;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  f.close();
  if (!f) throw Error(ErrorKind::io, "failed writing '" + path + "'");
}

}  // namespace

std::string_view to_string(OutputFormat f) noexcept { return f == OutputFormat::csv ? "csv" : "structured"; }

std::string_view to_string(ModelKind m) noexcept {
  switch (m) {
    case ModelKind::logistic: return "logistic";
    case ModelKind::si: return "si";
    case ModelKind::sis: return "sis";
  }
  return "";
}

std::string_view to_string(SolveMethod m) noexcept {
  switch (m) {
    case SolveMethod::paper: return "paper";
    case SolveMethod::west: return "west";
    case SolveMethod::fabm: return "fabm";
    case SolveMethod::classical: return "classical";
  }
  return "";
}

void RunConfig::validate() const {
  series.validate();
  check_range(series.tol >= 1e-16 && series.tol <= 1e-2, "tol", "[1e-16, 1e-2]");
  check_range(series.max_terms >= 10 && series.max_terms <= 100000, "max_terms", "[10, 100000]");
  check_range(series.z_max > 0.0 && series.z_max <= 700.0, "z_max", "(0, 700]");
  check_range(series.z_min >= -1e12 && series.z_min < 0.0, "z_min", "[-1e12, 0)");
  check_range(series.z_switch > 0.0 && series.z_switch <= 1e6, "z_switch", "(0, 1e6]");
  check_range(t_end > 0.0 && t_end <= 1e6, "t_end", "(0, 1e6]");
  check_range(steps >= 4 && steps <= 200000, "steps", "[4, 200000]");
  check_range(corrector_passes >= 1 && corrector_passes <= 5, "corrector_passes", "[1, 5]");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "tol",    "max_terms", "cancel_ratio_limit", "z_max", "z_min", "z_switch", "interp", "alpha_exponent",
      "format", "out",       "model",              "method", "alpha", "k",       "u0",     "N",
      "beta",   "lambda",    "I0",                 "t_end", "steps", "corrector_passes",
  };
  return keys;
}

void set_config_value(RunConfig& cfg, std::string_view raw_key, std::string_view raw_value) {
  const std::string key = normalize_key(trim(raw_key));
  const std::string_view value = trim(raw_value);
  if (key == "tol") {
    cfg.series.tol = parse_double(key, value);
  } else if (key == "max_terms") {
    cfg.series.max_terms = parse_int(key, value);
  } else if (key == "cancel_ratio_limit") {
    cfg.series.cancel_ratio_limit = parse_double(key, value);
  } else if (key == "z_max") {
    cfg.series.z_max = parse_double(key, value);
  } else if (key == "z_min") {
    cfg.series.z_min = parse_double(key, value);
  } else if (key == "z_switch") {
    cfg.series.z_switch = parse_double(key, value);
  } else if (key == "interp") {
    try {
      cfg.interp = parse_interpretation(value);
    } catch (const Error&) {
      bad_value(key, value, "jumarie or substitution");
    }
  } else if (key == "alpha_exponent") {
    cfg.alpha_exponent = parse_bool(key, value);
  } else if (key == "format") {
    if (value == "csv") {
      cfg.format = OutputFormat::csv;
    } else if (value == "structured" || value == "json") {
      cfg.format = OutputFormat::structured;
    } else {
      bad_value(key, value, "csv or structured");
    }
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else if (key == "model") {
    if (value == "logistic") {
      cfg.model = ModelKind::logistic;
    } else if (value == "si") {
      cfg.model = ModelKind::si;
    } else if (value == "sis") {
      cfg.model = ModelKind::sis;
    } else {
      bad_value(key, value, "logistic, si or sis");
    }
  } else if (key == "method") {
    if (value == "paper") {
      cfg.method = SolveMethod::paper;
    } else if (value == "west") {
      cfg.method = SolveMethod::west;
    } else if (value == "fabm") {
      cfg.method = SolveMethod::fabm;
    } else if (value == "classical") {
      cfg.method = SolveMethod::classical;
    } else {
      bad_value(key, value, "paper, west, fabm or classical");
    }
  } else if (key == "alpha") {
    cfg.alpha = parse_double(key, value);
  } else if (key == "k") {
    cfg.k = parse_double(key, value);
  } else if (key == "u0") {
    cfg.u0 = parse_double(key, value);
  } else if (key == "N") {
    cfg.N = parse_double(key, value);
  } else if (key == "beta") {
    cfg.beta = parse_double(key, value);
  } else if (key == "lambda") {
    cfg.lambda = parse_double(key, value);
  } else if (key == "I0") {
    cfg.I0 = parse_double(key, value);
  } else if (key == "t_end") {
    cfg.t_end = parse_double(key, value);
  } else if (key == "steps") {
    cfg.steps = parse_int(key, value);
  } else if (key == "corrector_passes") {
    cfg.corrector_passes = parse_int(key, value);
  } else {
    throw Error(ErrorKind::validation, "unknown config key '" + key + "'");
  }
}

void load_config_text(RunConfig& cfg, std::string_view text, std::string_view origin) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::validation,
                  std::string(origin) + ":" + std::to_string(lineno) + ": expected key = value");
    }
    try {
      set_config_value(cfg, s.substr(0, eq), s.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(origin) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::io, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  load_config_text(cfg, ss.str(), path);
}

void apply_environment(RunConfig& cfg, const std::function<const char*(const char*)>& getenv_fn) {
  for (const std::string& key : config_keys()) {
    std::string name = "FRACLOG_";
    for (char c : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    const char* v = getenv_fn ? getenv_fn(name.c_str()) : std::getenv(name.c_str());
    if (v != nullptr) set_config_value(cfg, key, v);
  }
}

std::string canonical_config(const RunConfig& cfg) {
  std::string s;
  auto put = [&](std::string_view k, const std::string& v) {
    s.append(k).append("=").append(v).append("\n");
  };
  put("tol", exact_text(cfg.series.tol));
  put("max_terms", std::to_string(cfg.series.max_terms));
  put("cancel_ratio_limit", exact_text(cfg.series.cancel_ratio_limit));
  put("z_max", exact_text(cfg.series.z_max));
  put("z_min", exact_text(cfg.series.z_min));
  put("z_switch", exact_text(cfg.series.z_switch));
  put("interp", std::string(to_string(cfg.interp)));
  put("alpha_exponent", cfg.alpha_exponent ? "true" : "false");
  put("format", std::string(to_string(cfg.format)));
  put("model", std::string(to_string(cfg.model)));
  put("method", std::string(to_string(cfg.method)));
  put("alpha", exact_text(cfg.alpha));
  put("k", exact_text(cfg.k));
  put("u0", exact_text(cfg.u0));
  put("N", exact_text(cfg.N));
  put("beta", exact_text(cfg.beta));
  put("lambda", exact_text(cfg.lambda));
  put("I0", exact_text(cfg.I0));
  put("t_end", exact_text(cfg.t_end));
  put("steps", std::to_string(cfg.steps));
  put("corrector_passes", std::to_string(cfg.corrector_passes));
  return s;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const RunConfig& cfg) {
  const std::uint64_t h = fnv1a64(canonical_config(cfg));
  char buf[17];
  for (int i = 0; i < 16; ++i) buf[i] = "0123456789abcdef"[(h >> (60 - 4 * i)) & 0xF];
  return std::string(buf, 16);
}

std::string format_number(double v, int decimals) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[128];
  const auto res = decimals >= 0 ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals)
                                 : std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  std::string s(buf, res.ptr);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void TableArtifact::validate() const {
  if (!row_labels.empty() && row_labels.size() != cells.size()) {
    throw Error(ErrorKind::validation, "table '" + name + "': row label count does not match rows");
  }
  for (const auto& row : cells) {
    if (row.size() != column_labels.size()) {
      throw Error(ErrorKind::validation, "table '" + name + "': row width does not match columns");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw Error(ErrorKind::validation, "table '" + name + "' has a non-finite cell");
    }
  }
}

std::vector<std::string> provenance_for(const RunConfig& cfg, std::string_view command) {
  const SeriesControl& s = cfg.series;
  return {
      "generator: fraclog " FRACLOG_VERSION,
      "command: " + std::string(command),
      "config_hash: fnv1a64:" + config_hash(cfg),
      "interpretation: " + std::string(to_string(cfg.interp)),
      "tolerances: tol=" + exact_text(s.tol) + " max_terms=" + std::to_string(s.max_terms) +
          " cancel_ratio_limit=" + exact_text(s.cancel_ratio_limit) + " z_max=" + exact_text(s.z_max) +
          " z_min=" + exact_text(s.z_min) + " z_switch=" + exact_text(s.z_switch),
  };
}

TableArtifact cmd_table1(const RunConfig& cfg) {
  cfg.validate();
  TableArtifact t;
  t.name = "table1";
  t.row_header = "row";
  t.provenance = provenance_for(cfg, "table1");
  for (double a : kAlphas) t.column_labels.push_back(grid_label(a));

  std::vector<LogBaseContext> ctx;
  for (double a : kAlphas) ctx.push_back(make_log_context(a, cfg.series));

  t.row_labels.push_back("E_alpha(1)");
  std::vector<double> base;
  for (const auto& c : ctx) base.push_back(c.base_value);
  t.cells.push_back(base);

  std::vector<double> xs;
  for (int i = 1; i <= 9; ++i) xs.push_back(i / 10.0);
  for (int i = 1; i <= 10; ++i) xs.push_back(i);
  for (double x : xs) {
    t.row_labels.push_back("log(" + grid_label(x) + ")");
    std::vector<double> row;
    for (const auto& c : ctx) row.push_back(ml_log(c, x));
    t.cells.push_back(row);
  }
  t.validate();
  return t;
}

TableArtifact cmd_table2(const RunConfig& cfg) {
  cfg.validate();
  TableArtifact t;
  t.name = "table2";
  t.provenance = provenance_for(cfg, "table2");
  t.column_labels = {"x1",         "x2",         "alpha",   "log(x1*x2)",         "log(x1/x2)",
                     "log(x1)",    "log(x2)",    "log(x1)+log(x2)", "log(x1)-log(x2)"};
  for (const auto& r : kTable2Rows) {
    const PropositionReport p = verify_proposition(r.alpha, r.x1, r.x2, cfg.series);
    t.cells.push_back({r.x1, r.x2, r.alpha, p.log_product, p.log_quotient, p.log_x1, p.log_x2, p.log_sum,
                       p.log_difference});
  }
  t.validate();
  return t;
}

TableArtifact cmd_figure1(const RunConfig& cfg) {
  cfg.validate();
  TableArtifact t;
  t.name = "figure1";
  t.provenance = provenance_for(cfg, "figure1");
  t.column_labels = {"x", "alpha", "log"};
  t.decimals = -1;
  for (double a : kAlphas) {
    const LogBaseContext c = make_log_context(a, cfg.series);
    for (int i = 1; i <= 200; ++i) {
      const double x = i / 20.0;
      t.cells.push_back({x, a, ml_log(c, x)});
    }
  }
  t.validate();
  return t;
}

TableArtifact cmd_solve(const RunConfig& cfg) {
  cfg.validate();
  const TimeGrid grid(cfg.t_end, cfg.steps);
  const int nodes = grid.node_count();
  TableArtifact t;
  t.name = "solve";
  t.decimals = -1;
  t.provenance = provenance_for(cfg, "solve");
  t.provenance.push_back("problem: " + problem_note(cfg));
  t.provenance.push_back("method: " + std::string(to_string(cfg.method)));

  if (cfg.method == SolveMethod::classical && cfg.alpha != 1.0) {
    throw Error(ErrorKind::validation,
                "method 'classical' solves the integer-order equation and requires alpha = 1, got alpha=" +
                    exact_text(cfg.alpha));
  }

  if (cfg.model == ModelKind::logistic) {
    const LogisticProblem p = logistic_problem(cfg);
    t.column_labels = {"t", "u"};
    std::vector<double> u(nodes);
    switch (cfg.method) {
      case SolveMethod::classical:
        for (int i = 0; i < nodes; ++i) u[i] = classical_logistic(p.k, p.u0, grid.node(i));
        break;
      case SolveMethod::paper:
        for (int i = 0; i < nodes; ++i) u[i] = paper_closed_form(p, cfg.interp, grid.node(i), cfg.series);
        break;
      case SolveMethod::west:
        for (int i = 0; i < nodes; ++i) u[i] = west_series(p, grid.node(i), cfg.series).value;
        break;
      case SolveMethod::fabm:
        u = fabm_solve(RhsSpec::logistic(p.k, true), p.alpha, p.u0, grid, fabm_options(cfg)).values;
        break;
    }
    for (int i = 0; i < nodes; ++i) t.cells.push_back({grid.node(i), u[i]});
  } else {
    const EpidemicProblem p = epidemic_problem(cfg);
    const EpidemicModel model = epidemic_of(cfg.model);
    const EpidemicOptions opts = epidemic_options(cfg);
    t.column_labels = {"t", "I", "S"};
    std::vector<double> infected(nodes);
    switch (cfg.method) {
      case SolveMethod::west:
        throw Error(ErrorKind::validation, "method 'west' is defined for the logistic model only, not '" +
                                               std::string(to_string(cfg.model)) + "'");
      case SolveMethod::classical: {
        const double cap = model == EpidemicModel::si ? p.N : p.endemic_level();
        epidemic_rhs(p, model, opts);  // rejects A <= 0
        for (int i = 0; i < nodes; ++i) {
          infected[i] = cap * classical_logistic(cap * p.beta_contact, p.I0 / cap, grid.node(i));
        }
        break;
      }
      case SolveMethod::paper:
        for (int i = 0; i < nodes; ++i) infected[i] = closed_form(p, model, cfg.interp, grid.node(i), opts).infected;
        break;
      case SolveMethod::fabm:
        infected = epidemic_fabm_reference(p, model, grid, opts, fabm_options(cfg)).values;
        break;
    }
    for (int i = 0; i < nodes; ++i) t.cells.push_back({grid.node(i), infected[i], p.N - infected[i]});
  }
  t.validate();
  return t;
}

std::vector<TableArtifact> cmd_compare(const RunConfig& cfg) {
  cfg.validate();
  const TimeGrid grid(cfg.t_end, cfg.steps);
  std::vector<std::string> names;
  std::vector<SolutionCurve> curves;
  std::vector<ResidualReport> residuals;
  std::vector<std::vector<double>> deviation;

  if (cfg.model == ModelKind::logistic) {
    const CandidateComparison cmp = compare_candidates(logistic_problem(cfg), grid, cfg.series, fabm_options(cfg));
    for (const auto& c : cmp.candidates) {
      names.push_back(c.name);
      curves.push_back(c.curve);
      residuals.push_back(c.residual);
    }
    deviation = cmp.deviation;
  } else {
    const EpidemicProblem p = epidemic_problem(cfg);
    const EpidemicModel model = epidemic_of(cfg.model);
    const EpidemicOptions opts = epidemic_options(cfg);
    const RhsSpec rhs = epidemic_rhs(p, model, opts);
    for (ArgInterpretation interp :
         {ArgInterpretation::jumarie_convolution, ArgInterpretation::differential_substitution}) {
      SolutionCurve c{grid, std::vector<double>(grid.node_count()), 0};
      for (int i = 0; i < grid.node_count(); ++i) c.values[i] = closed_form(p, model, interp, grid.node(i), opts).infected;
      names.push_back("paper_" + std::string(to_string(interp)));
      curves.push_back(std::move(c));
    }
    names.push_back("fabm");
    curves.push_back(epidemic_fabm_reference(p, model, grid, opts, fabm_options(cfg)));
    for (const auto& c : curves) residuals.push_back(residual_meter(c, rhs, p.alpha));
    deviation.assign(curves.size(), std::vector<double>(curves.size(), 0.0));
    for (std::size_t a = 0; a < curves.size(); ++a) {
      for (std::size_t b = 0; b < curves.size(); ++b) {
        for (int i = 0; i < grid.node_count(); ++i) {
          deviation[a][b] = std::max(deviation[a][b], std::fabs(curves[a].values[i] - curves[b].values[i]));
        }
      }
    }
  }

  std::vector<std::string> prov = provenance_for(cfg, "compare");
  prov.push_back("problem: " + problem_note(cfg));
  prov.push_back("residual: L1 Caputo residual, nodes t_0..t_4 excluded");

  TableArtifact summary;
  summary.name = "summary";
  summary.row_header = "candidate";
  summary.decimals = -1;
  summary.provenance = prov;
  summary.row_labels = names;
  summary.column_labels = {"max_residual", "l1_error_estimate"};
  for (const auto& n : names) summary.column_labels.push_back("deviation_" + n);
  for (std::size_t a = 0; a < names.size(); ++a) {
    std::vector<double> row = {residuals[a].max_residual, residuals[a].l1_error_estimate};
    row.insert(row.end(), deviation[a].begin(), deviation[a].end());
    summary.cells.push_back(std::move(row));
  }
  summary.validate();

  TableArtifact curve_table;
  curve_table.name = "curves";
  curve_table.decimals = -1;
  curve_table.provenance = prov;
  curve_table.column_labels = {"t"};
  curve_table.column_labels.insert(curve_table.column_labels.end(), names.begin(), names.end());
  for (int i = 0; i < grid.node_count(); ++i) {
    std::vector<double> row = {grid.node(i)};
    for (const auto& c : curves) row.push_back(c.values[i]);
    curve_table.cells.push_back(std::move(row));
  }
  curve_table.validate();
  return {summary, curve_table};
}

std::string render_csv(const TableArtifact& table) {
  table.validate();
  std::string s;
  for (const auto& p : table.provenance) s += "# " + p + "\n";
  const bool labels = !table.row_labels.empty();
  std::vector<std::string> header;
  if (labels) header.push_back(table.row_header);
  header.insert(header.end(), table.column_labels.begin(), table.column_labels.end());
  for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
  s += "\n";
  for (std::size_t r = 0; r < table.cells.size(); ++r) {
    bool first = true;
    if (labels) {
      s += table.row_labels[r];
      first = false;
    }
    for (double v : table.cells[r]) {
      if (!first) s += ",";
      s += cell_text(table, v);
      first = false;
    }
    s += "\n";
  }
  return s;
}

std::string render_structured(const std::vector<TableArtifact>& tables) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["tables"] = json::array();
  for (const auto& t : tables) {
    t.validate();
    json jt;
    jt["name"] = t.name;
    json prov = json::object();
    for (const auto& p : t.provenance) {
      const auto colon = p.find(": ");
      if (colon == std::string::npos) {
        prov[p] = "";
      } else {
        prov[p.substr(0, colon)] = p.substr(colon + 2);
      }
    }
    jt["provenance"] = prov;
    jt["columns"] = t.column_labels;
    if (!t.row_labels.empty()) {
      jt["row_header"] = t.row_header;
      jt["row_labels"] = t.row_labels;
    }
    jt["rows"] = t.cells;
    doc["tables"].push_back(std::move(jt));
  }
  return doc.dump(2) + "\n";
}

void write_artifacts(const std::vector<TableArtifact>& tables, const RunConfig& cfg) {
  if (tables.empty()) return;
  if (cfg.format == OutputFormat::structured) {
    const std::string text = render_structured(tables);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      write_file(cfg.out, text);
    }
    return;
  }
  if (cfg.out.empty()) {
    for (std::size_t i = 0; i < tables.size(); ++i) std::cout << (i ? "\n" : "") << render_csv(tables[i]);
    return;
  }
  write_file(cfg.out, render_csv(tables[0]));
  for (std::size_t i = 1; i < tables.size(); ++i) {
    write_file(stem_of(cfg.out) + "." + tables[i].name + ".csv", render_csv(tables[i]));
  }
}

std::vector<TableArtifact> run_command(std::string_view command, const RunConfig& cfg) {
  if (command == "table1") return {cmd_table1(cfg)};
  if (command == "table2") return {cmd_table2(cfg)};
  if (command == "figure1") return {cmd_figure1(cfg)};
  if (command == "solve") return {cmd_solve(cfg)};
  if (command == "compare") return cmd_compare(cfg);
  throw Error(ErrorKind::validation, "unknown command '" + std::string(command) + "'");
}

}  // namespace fraclog
