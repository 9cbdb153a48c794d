#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

#ifndef DUALSYS_DEFAULT_DATA
#define DUALSYS_DEFAULT_DATA "data/table1.csv"
#endif

namespace {

using namespace dualsys;

std::vector<PopulationSegment> parse_segments(const std::vector<std::string>& specs) {
  std::vector<PopulationSegment> out;
  for (const auto& spec : specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
      throw cli::ConfigError("segment '" + spec + "' is not POPULATION:YEARS");
    }
    try {
      out.push_back({std::stod(spec.substr(0, colon)), std::stod(spec.substr(colon + 1))});
    } catch (const std::exception&) {
      throw cli::ConfigError("segment '" + spec + "' is not POPULATION:YEARS");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-systems population size estimation from two overlapping record lists"};
  app.require_subcommand(1);

  cli::RunConfig config;
  std::string model_name = "binomial";
  std::vector<std::string> emit_names;
  bool serial = false;
  auto* run = app.add_subcommand("run", "Compute a posterior for the unknown total");
  run->add_option("--data", config.data_path, "Capture table CSV")->required();
  run->add_option("--model", model_name, "simple | binomial | combinomial")
      ->check(CLI::IsMember({"simple", "binomial", "combinomial"}));
  run->add_option("--total-min", config.total_min, "Prior lower bound on the total");
  run->add_option("--total-max", config.total_max, "Prior upper bound on the total");
  run->add_option("--p-points", config.p_points, "Com-binomial p grid size (default 400)");
  run->add_option("--nu-min", config.nu_min, "Com-binomial lower nu bound (default -5)");
  run->add_option("--nu-points", config.nu_points, "Com-binomial nu grid size (default 241)");
  run->add_option("--letters-max", config.letters_max, "Letters per event, m (default from data)");
  run->add_option("--output-dir", config.output_dir, "Directory for emitted files");
  run->add_option("--emit", emit_names, "posterior_csv, report_json, figure_data")->delimiter(',');
  run->add_flag("--record-runtime", config.record_runtime, "Include runtime_ms in report.json");
  run->add_flag("--serial", serial, "Use the serial reference kernel");

  std::vector<double> p_values{0.1, 0.5, 0.9};
  std::vector<double> nu_values{-2.0, 0.0, 1.0, 3.0};
  int m = 5;
  std::filesystem::path figure_out = "figure3.csv";
  auto* fig3 = app.add_subcommand("figure3", "Com-binomial pmf panels");
  fig3->add_option("--p", p_values, "p values")->delimiter(',');
  fig3->add_option("--nu", nu_values, "nu values")->delimiter(',');
  fig3->add_option("--m", m, "Trials per panel")->check(CLI::PositiveNumber);
  fig3->add_option("--out", figure_out, "Output CSV");

  std::vector<std::string> segments{"330000:50", "130000:219"};
  DemographicInputs demo{{}, 8.0, 13.0};
  std::filesystem::path demo_out = "demographics.json";
  auto* demog = app.add_subcommand("demographics", "Expected event count from population and rates");
  demog->add_option("--segment", segments, "POPULATION:YEARS, repeatable");
  demog->add_option("--rate-low", demo.rate_low, "Events per 100,000 per year, low");
  demog->add_option("--rate-high", demo.rate_high, "Events per 100,000 per year, high");
  demog->add_option("--out", demo_out, "Output JSON");

  std::filesystem::path check_data = DUALSYS_DEFAULT_DATA;
  auto* check = app.add_subcommand("self-check", "Compare closed forms with brute-force quadrature");
  check->add_option("--data", check_data, "Capture table CSV for the com-binomial check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kBadConfig;
  }

  try {
    if (*run) {
      config.model = parse_model(model_name);
      for (const auto& name : emit_names) config.emit.insert(cli::parse_emit(name));
      config.execution = serial ? Execution::serial : Execution::parallel;
      return cli::run(config, std::cout, std::cerr);
    }
    if (*fig3) {
      cli::emit_figure3_panels(p_values, nu_values, m, figure_out);
      std::cout << "wrote " << figure_out.string() << '\n';
      return cli::kOk;
    }
    if (*demog) {
      demo.segments = parse_segments(segments);
      cli::emit_demographics(demo, demo_out);
      const auto range = demographic_range(demo);
      std::cout << "range " << range.low_rounded << " to " << range.high_rounded << " (raw "
                << cli::format_real(range.low) << " to " << cli::format_real(range.high)
                << ")\n";
      return cli::kOk;
    }
    if (*check) {
      return cli::self_check(check_data, std::cout) ? cli::kOk : cli::kNumericFailure;
    }
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return cli::kNumericFailure;
  }
  return cli::kBadConfig;
}
