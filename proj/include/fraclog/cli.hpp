#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fraclog/epidemic.hpp"
#include "fraclog/logistic.hpp"
#include "fraclog/mlcore.hpp"

namespace fraclog {

enum class OutputFormat { csv, structured };
enum class ModelKind { logistic, si, sis };
enum class SolveMethod { paper, west, fabm, classical };

std::string_view to_string(OutputFormat f) noexcept;
std::string_view to_string(ModelKind m) noexcept;
std::string_view to_string(SolveMethod m) noexcept;

/// Everything one invocation needs. Layered as
/// defaults < config file < FRACLOG_* environment < command-line flags.
struct RunConfig {
  SeriesControl series{};
  ArgInterpretation interp = ArgInterpretation::jumarie_convolution;
  bool alpha_exponent = false;  ///< (C beta)^alpha instead of C beta for SI/SIS
  OutputFormat format = OutputFormat::csv;
  std::string out;  ///< empty: standard output

  ModelKind model = ModelKind::logistic;
  SolveMethod method = SolveMethod::paper;
  double alpha = 1.0;
  double k = 1.0;
  double u0 = 0.5;
  double N = 1000.0;
  double beta = 0.001;
  double lambda = 0.0;
  double I0 = 1.0;
  double t_end = 10.0;
  int steps = 1000;
  int corrector_passes = 1;

  /// Range checks on the tolerance and grid fields; model fields are checked
  /// by the model types when a command runs.
  void validate() const;
};

/// Keys accepted by set_config_value, config files and FRACLOG_<KEY> variables.
const std::vector<std::string>& config_keys();

/// Sets one field from its textual value. Unknown keys and unparsable values
/// raise Error(validation) naming the key.
void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value);

/// Reads a flat "key = value" document; '#' starts a comment line.
void load_config_file(RunConfig& cfg, const std::string& path);
void load_config_text(RunConfig& cfg, std::string_view text, std::string_view origin = "<config>");

/// Applies FRACLOG_<KEY> overrides. getenv is injectable for tests.
void apply_environment(RunConfig& cfg,
                       const std::function<const char*(const char*)>& getenv_fn = nullptr);

/// Canonical "key=value" lines for every key except the output path.
std::string canonical_config(const RunConfig& cfg);
std::uint64_t fnv1a64(std::string_view bytes) noexcept;
/// 16 lowercase hex digits of fnv1a64(canonical_config(cfg)).
std::string config_hash(const RunConfig& cfg);

/// Fixed-point rendering with `decimals` places, or 12 significant digits
/// when decimals < 0. Locale independent; negative zero prints without sign.
std::string format_number(double v, int decimals);

struct TableArtifact {
  std::string name;
  std::string row_header;               ///< header of the label column; unused without labels
  std::vector<std::string> row_labels;  ///< empty: no label column
  std::vector<std::string> column_labels;
  std::vector<std::vector<double>> cells;
  std::vector<std::string> provenance;  ///< "key: value" notes written before the data
  int decimals = 4;                     ///< < 0: 12 significant digits

  /// Dimensions agree with the labels and every cell is finite.
  void validate() const;
};

/// Provenance notes shared by every artifact: version, command, config hash,
/// interpretation and tolerances.
std::vector<std::string> provenance_for(const RunConfig& cfg, std::string_view command);

TableArtifact cmd_table1(const RunConfig& cfg);
TableArtifact cmd_table2(const RunConfig& cfg);
/// Long format (x, alpha, log) for x = 0.05, 0.10, ..., 10 and alpha = 0.1..1.
TableArtifact cmd_figure1(const RunConfig& cfg);
TableArtifact cmd_solve(const RunConfig& cfg);
/// Summary (per candidate residuals and pairwise deviations) followed by the
/// sampled candidate curves.
std::vector<TableArtifact> cmd_compare(const RunConfig& cfg);

std::string render_csv(const TableArtifact& table);
std::string render_structured(const std::vector<TableArtifact>& tables);

/// Writes the artifacts in cfg.format to cfg.out (or stdout when empty).
/// With CSV and several tables, the first goes to cfg.out and table i > 0 to
/// "<stem>.<name>.csv" beside it (to stdout all tables are written, separated
/// by a blank line). Raises Error(io) when a file cannot be written.
void write_artifacts(const std::vector<TableArtifact>& tables, const RunConfig& cfg);

/// Dispatches a subcommand by name; returns the artifacts it produced.
std::vector<TableArtifact> run_command(std::string_view command, const RunConfig& cfg);

}  // namespace fraclog
