#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>

#include "dualsys/capture_data.hpp"
#include "dualsys/combinomial.hpp"
#include "dualsys/evaluate.hpp"
#include "dualsys/oracle.hpp"

namespace dualsys::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::int64_t kSimpleTotalMax = 25000;
constexpr std::int64_t kLetterModelTotalMax = 5850;

// Round-trips through the 12-digit text form so that the JSON writer, which
// prints the shortest exact representation, never shows more digits.
double rounded(double value) { return std::strtod(format_real(value).c_str(), nullptr); }

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw OutputError("cannot open " + path.string() + " for writing");
  }
  out << contents;
  out.flush();
  if (!out) {
    throw OutputError("failed writing " + path.string());
  }
}

std::string level_key(double q) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.1f", q);
  return buf;
}

}  // namespace

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Emit parse_emit(const std::string& name) {
  if (name == "posterior_csv") return Emit::posterior_csv;
  if (name == "report_json") return Emit::report_json;
  if (name == "figure_data") return Emit::figure_data;
  throw ConfigError("unknown --emit value '" + name + "'");
}

RunOutcome execute(const RunConfig& input) {
  RunConfig config = input;
  if (config.model != Model::combinomial &&
      (config.p_points || config.nu_min || config.nu_points)) {
    throw ConfigError("--p-points, --nu-min and --nu-points apply to the combinomial model only");
  }
  NuisanceGrid grid;
  if (config.model == Model::combinomial) {
    grid.p_points = config.p_points.value_or(grid.p_points);
    grid.nu_min = config.nu_min.value_or(grid.nu_min);
    grid.nu_points = config.nu_points.value_or(grid.nu_points);
    try {
      grid.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    config.p_points = grid.p_points;
    config.nu_min = grid.nu_min;
    config.nu_points = grid.nu_points;
  }

  const auto started = std::chrono::steady_clock::now();
  const CaptureTable table = load_capture_table(config.data_path, config.letters_max);
  const std::int64_t observed = table.observed_total();
  const int m = table.m();
  config.letters_max = m;
  config.total_min = config.total_min.value_or(observed);
  config.total_max = config.total_max.value_or(
      config.model == Model::simple ? kSimpleTotalMax : kLetterModelTotalMax);
  const PriorSpec prior{*config.total_min, *config.total_max};
  try {
    prior.validate(observed);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const auto build = [&]() -> PosteriorDistribution {
    switch (config.model) {
      case Model::simple: {
        const ReducedTable reduced = reduce(table);
        return compute_posterior([&](std::int64_t n) { return loglik_simple(n, reduced); }, prior,
                                 observed, config.execution);
      }
      case Model::binomial: {
        const SummaryStats stats = summarize(table);
        return compute_posterior([&](std::int64_t n) { return loglik_binomial(n, stats, m); },
                                 prior, observed, config.execution);
      }
      case Model::combinomial: {
        const ComBinomialLikelihood loglik(summarize(table), m, grid);
        return compute_posterior([&](std::int64_t n) { return loglik(n); }, prior, observed,
                                 config.execution);
      }
    }
    throw ConfigError("unknown model");
  };
  PosteriorDistribution posterior = build();
  QuantileReport report = decile_report(posterior);
  const double elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  return RunOutcome{config, grid, std::move(posterior), report, elapsed};
}

std::string report_json(const RunOutcome& outcome) {
  const RunConfig& c = outcome.config;
  ordered_json doc;
  doc["model"] = std::string(to_string(c.model));
  doc["prior"] = {{"total_min", *c.total_min}, {"total_max", *c.total_max}};
  ordered_json deciles = ordered_json::object();
  for (std::size_t i = 0; i < kDecileLevels.size(); ++i) {
    deciles[level_key(kDecileLevels[i])] = outcome.report.deciles[i];
  }
  doc["deciles"] = deciles;
  doc["median"] = outcome.report.median;
  doc["mean"] = rounded(outcome.report.mean);

  ordered_json echo;
  echo["data"] = c.data_path.string();
  echo["model"] = std::string(to_string(c.model));
  echo["total_min"] = *c.total_min;
  echo["total_max"] = *c.total_max;
  echo["letters_max"] = *c.letters_max;
  if (c.model == Model::combinomial) {
    echo["p_points"] = outcome.grid.p_points;
    echo["nu_min"] = rounded(outcome.grid.nu_min);
    echo["nu_points"] = outcome.grid.nu_points;
  }
  doc["config"] = echo;
  if (c.record_runtime) {
    doc["runtime_ms"] = rounded(outcome.runtime_ms);
  }
  return doc.dump(2) + "\n";
}

std::string posterior_csv(const PosteriorDistribution& dist) {
  std::string out = "total,log_weight,prob\n";
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out += std::to_string(dist.total_at(i)) + ',' + format_real(dist.log_weights()[i]) + ',' +
           format_real(dist.probs()[i]) + '\n';
  }
  return out;
}

std::string figure_csv(const PosteriorDistribution& dist) {
  std::string out = "total,prob,cdf\n";
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out += std::to_string(dist.total_at(i)) + ',' + format_real(dist.probs()[i]) + ',' +
           format_real(dist.cdf()[i]) + '\n';
  }
  return out;
}

std::string decile_table(const QuantileReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "Quantile";
  for (auto t : report.deciles) out << std::right << std::setw(8) << t;
  out << '\n' << std::left << std::setw(12) << "Probability";
  for (double q : kDecileLevels) out << std::right << std::setw(8) << level_key(q);
  out << "\nmedian " << report.median << ", mean " << format_real(report.mean) << '\n';
  return out.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const RunOutcome outcome = execute(config);
    out << "model: " << to_string(outcome.config.model) << ", prior on total: ["
        << *outcome.config.total_min << ", " << *outcome.config.total_max << "]\n";
    out << decile_table(outcome.report);
    if (!config.emit.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(config.output_dir, ec);
      if (ec) throw OutputError("cannot create " + config.output_dir.string() + ": " + ec.message());
    }
    if (config.emit.contains(Emit::posterior_csv)) {
      write_file(config.output_dir / "posterior.csv", posterior_csv(outcome.posterior));
    }
    if (config.emit.contains(Emit::report_json)) {
      write_file(config.output_dir / "report.json", report_json(outcome));
    }
    if (config.emit.contains(Emit::figure_data)) {
      write_file(config.output_dir / "figure.csv", figure_csv(outcome.posterior));
    }
    return kOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const IngestError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
}

std::string figure3_csv(const std::vector<double>& p_values, const std::vector<double>& nu_values,
                        int m) {
  if (p_values.empty() || nu_values.empty()) {
    throw ConfigError("figure3 needs at least one p and one nu value");
  }
  std::string out = "panel_p,panel_nu,j,probability\n";
  for (double p : p_values) {
    for (double nu : nu_values) {
      std::vector<double> row;
      try {
        row = pmf_row(ComBinomialParams::from_p(m, p, nu));
      } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
      }
      for (int j = 0; j <= m; ++j) {
        out += format_real(p) + ',' + format_real(nu) + ',' + std::to_string(j) + ',' +
               format_real(row[j]) + '\n';
      }
    }
  }
  return out;
}

void emit_figure3_panels(const std::vector<double>& p_values, const std::vector<double>& nu_values,
                         int m, const std::filesystem::path& out) {
  write_file(out, figure3_csv(p_values, nu_values, m));
}

std::string demographics_json(const DemographicInputs& inputs) {
  DemographicRange range;
  try {
    range = demographic_range(inputs);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  ordered_json doc;
  doc["raw"] = {{"low", rounded(range.low)}, {"high", rounded(range.high)}};
  doc["rounded"] = {{"low", rounded(range.low_rounded)}, {"high", rounded(range.high_rounded)}};
  doc["rates_per_100k_per_year"] = {{"low", rounded(inputs.rate_low)},
                                    {"high", rounded(inputs.rate_high)}};
  ordered_json segments = ordered_json::array();
  for (const auto& seg : inputs.segments) {
    segments.push_back({{"population", rounded(seg.population)},
                        {"years", rounded(seg.years)},
                        {"person_years", rounded(seg.population * seg.years)}});
  }
  doc["segments"] = segments;
  doc["person_years"] = rounded(range.person_years);
  return doc.dump(2) + "\n";
}

void emit_demographics(const DemographicInputs& inputs, const std::filesystem::path& out) {
  write_file(out, demographics_json(inputs));
}

bool self_check(const std::filesystem::path& data_path, std::ostream& out) {
  bool all = true;
  auto report = [&](const std::string& name, double error, double tolerance) {
    const bool ok = error <= tolerance;
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << name << ": max error " << format_real(error)
        << " (tolerance " << format_real(tolerance) << ")\n";
  };

  const CaptureTable small =
      parse_capture_table("mentioned_other,letters,count\n0,1,1\n0,2,1\n1,0,2\n1,3,1\n");
  const ReducedTable reduced = reduce(small);
  const SummaryStats small_stats = summarize(small);
  const oracle::QuadratureSpec quad{2048, oracle::QuadratureRule::trapezoid};

  double simple_err = 0.0, binom_err = 0.0;
  for (std::int64_t n : {0, 5, 50}) {
    simple_err = std::max(simple_err, std::abs(oracle::integrate_simple_bruteforce(n, reduced, quad) -
                                               log_integrated_simple_full(n, reduced)));
    binom_err = std::max(binom_err,
                         std::abs(oracle::integrate_binomial_bruteforce(n, small_stats, 5, quad) -
                                  log_integrated_binomial_full(n, small_stats, 5)));
  }
  report("simple closed form vs 2-D quadrature", simple_err, 1e-6);
  report("binomial closed form vs 2-D quadrature", binom_err, 1e-6);

  try {
    const CaptureTable table = load_capture_table(data_path);
    const SummaryStats stats = summarize(table);
    const NuisanceGrid grid;
    const ComBinomialLikelihood production(stats, table.m(), grid);
    const oracle::QuadratureSpec p_quad{grid.p_points, oracle::QuadratureRule::midpoint};
    const oracle::QuadratureSpec nu_quad{grid.nu_points, oracle::QuadratureRule::trapezoid};
    auto brute = [&](std::int64_t n) {
      return oracle::integrate_combinomial_bruteforce(n, stats, table.m(), p_quad, nu_quad,
                                                      grid.nu_min);
    };
    double comb_err = 0.0;
    for (std::int64_t n : {0, 10, 100}) {
      comb_err = std::max(comb_err, std::abs((production(n + 1) - production(n)) -
                                             (brute(n + 1) - brute(n))));
    }
    report("com-binomial evaluator vs original-parameterization quadrature", comb_err, 1e-4);
  } catch (const IngestError& e) {
    out << "FAIL com-binomial check: " << e.what() << '\n';
    all = false;
  }
  return all;
}

}  // namespace dualsys::cli
