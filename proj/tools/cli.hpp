#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualsys/models.hpp"
#include "dualsys/posterior.hpp"

namespace dualsys::cli {

enum ExitCode : int { kOk = 0, kBadConfig = 2, kDataError = 3, kNumericFailure = 4 };

/// Invalid combination of options; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written; maps to exit code 4.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Emit { posterior_csv, report_json, figure_data };

Emit parse_emit(const std::string& name);

struct RunConfig {
  std::filesystem::path data_path;
  Model model = Model::binomial;
  std::optional<std::int64_t> total_min;  ///< default: observed total
  std::optional<std::int64_t> total_max;  ///< default: 25000 simple, 5850 otherwise
  std::optional<int> p_points;            ///< combinomial only
  std::optional<double> nu_min;           ///< combinomial only
  std::optional<int> nu_points;           ///< combinomial only
  std::optional<int> letters_max;
  std::filesystem::path output_dir = ".";
  std::set<Emit> emit;
  bool record_runtime = false;  ///< adds runtime_ms to report.json (breaks byte-identity)
  Execution execution = Execution::parallel;
};

struct RunOutcome {
  RunConfig config;  ///< with defaults filled in
  NuisanceGrid grid;
  PosteriorDistribution posterior;
  QuantileReport report;
  double runtime_ms = 0.0;
};

/// Loads data, builds the model and computes the posterior. Throws
/// ConfigError, IngestError, EvaluationError or std::domain_error.
RunOutcome execute(const RunConfig& config);

/// Fixed-format report; identical outcomes give identical bytes unless
/// runtime recording is on.
std::string report_json(const RunOutcome& outcome);
/// `total,log_weight,prob` rows.
std::string posterior_csv(const PosteriorDistribution& dist);
/// `total,prob,cdf` rows for plotting.
std::string figure_csv(const PosteriorDistribution& dist);
/// Two-row quantile/probability table.
std::string decile_table(const QuantileReport& report);

/// `run`: executes, prints the table, writes requested outputs. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// CSV of com-binomial pmf rows, one panel per (p, nu) pair.
/// Throws ConfigError on an empty grid, OutputError on I/O failure.
void emit_figure3_panels(const std::vector<double>& p_values, const std::vector<double>& nu_values,
                         int m, const std::filesystem::path& out);
std::string figure3_csv(const std::vector<double>& p_values, const std::vector<double>& nu_values,
                        int m);

std::string demographics_json(const DemographicInputs& inputs);
void emit_demographics(const DemographicInputs& inputs, const std::filesystem::path& out);

/// Oracle agreement checks; prints one line per check. True if all pass.
bool self_check(const std::filesystem::path& data_path, std::ostream& out);

/// 12 significant digits.
std::string format_real(double value);

}  // namespace dualsys::cli
