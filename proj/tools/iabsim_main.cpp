#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iabsim/montecarlo.hpp"
#include "iabsim/scenario.hpp"

namespace {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };
LogLevel g_log_level = LogLevel::Info;

void log_info(const std::string& msg) {
  if (g_log_level >= LogLevel::Info) std::cerr << "iabsim: " << msg << "\n";
}
void log_debug(const std::string& msg) {
  if (g_log_level >= LogLevel::Debug) std::cerr << "iabsim: " << msg << "\n";
}

std::vector<double> parse_value_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const char* begin = item.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      throw iabsim::ConfigError("--values: cannot parse number '" + item +
                                "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw iabsim::ConfigError("--values: empty list");
  return out;
}

std::vector<iabsim::Variant> parse_variant_list(const std::string& csv) {
  std::vector<iabsim::Variant> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = iabsim::variant_from_name(item);
    if (!v) {
      throw iabsim::ConfigError(
          "--variants: unknown variant '" + item +
          "' (expected direct_only|with_ris|with_ncr)");
    }
    out.push_back(*v);
  }
  if (out.empty()) throw iabsim::ConfigError("--variants: empty list");
  return out;
}

// Whole file appears atomically: the content lands under a temporary name
// and is renamed over the target only once fully written.
void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw iabsim::IoError("cannot open '" + tmp + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw iabsim::IoError("failed writing '" + tmp + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw iabsim::IoError("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

std::string format_row(double value, const char* variant,
                       const iabsim::CoverageEstimate& est) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.10g,%s,%.6f,%.6f,%.6f,%zu,%.6e\n", value,
                variant, est.rho_hat, est.ci_low, est.ci_high, est.trials,
                est.mean_rate_bps);
  return buf;
}

std::string render_table(
    const iabsim::Scenario& sc, const std::string& axis_label,
    const std::vector<iabsim::SweepRow>& rows,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  std::ostringstream out;
  out << "# iabsim " << iabsim::kVersion << "\n";
  out << "# seed " << sc.seed << "\n";
  out << "# sweep axis=" << axis_label << "\n";
  for (const auto& [key, value] : overrides) {
    out << "# override " << key << "=" << value << "\n";
  }
  out << "# config " << iabsim::manifest_json(sc) << "\n";
  out << "value,variant,rho_hat,ci_low,ci_high,trials,mean_rate_bps\n";
  for (const iabsim::SweepRow& row : rows) {
    out << format_row(row.value, iabsim::variant_name(row.variant),
                      row.estimate);
  }
  return out.str();
}

int run_main(int argc, char** argv) {
  CLI::App app{"Finite-region mmWave IAB coverage simulator"};
  app.get_formatter()->column_width(28);

  std::string config_path;
  std::string preset;
  std::string output;
  std::string sweep_axis;
  std::string values_csv;
  std::string variants_csv;
  std::string log_level = "info";
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  auto* config_opt =
      app.add_option("--config", config_path, "Scenario file (JSON)");
  auto* preset_opt = app.add_option(
      "--preset", preset, "Emit a scenario template (fig2|fig3|fig4|fig5)");
  auto* seed_opt = app.add_option("--seed", seed, "Override the master seed");
  auto* trials_opt =
      app.add_option("--trials", trials, "Override the trial count");
  auto* sweep_opt =
      app.add_option("--sweep", sweep_axis, "Override the sweep axis");
  auto* values_opt = app.add_option(
      "--values", values_csv, "Override sweep values (comma-separated)");
  auto* variants_opt = app.add_option(
      "--variants", variants_csv, "Override variants (comma-separated)");
  app.add_option("--output", output,
                 "Output path (results table; template with --preset)");
  app.add_option("--log-level", log_level, "quiet|info|debug");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "iabsim: " << e.what() << "\n";
    return 2;
  }

  if (log_level == "quiet") {
    g_log_level = LogLevel::Quiet;
  } else if (log_level == "info") {
    g_log_level = LogLevel::Info;
  } else if (log_level == "debug") {
    g_log_level = LogLevel::Debug;
  } else {
    std::cerr << "iabsim: --log-level: unknown level '" << log_level << "'\n";
    return 2;
  }

  if (preset_opt->count() > 0 && config_opt->count() > 0) {
    std::cerr << "iabsim: --preset and --config are mutually exclusive\n";
    return 2;
  }
  if (preset_opt->count() == 0 && config_opt->count() == 0) {
    std::cerr << "iabsim: one of --config or --preset is required\n";
    return 2;
  }

  if (preset_opt->count() > 0) {
    const std::string text = iabsim::preset_text(preset);
    if (output.empty()) {
      std::cout << text;
    } else {
      write_file_atomic(output, text);
      log_info("wrote template '" + output + "'");
    }
    return 0;
  }

  iabsim::Scenario sc = iabsim::parse_and_validate(config_path);
  std::vector<std::pair<std::string, std::string>> overrides;
  if (seed_opt->count() > 0) {
    sc.seed = seed;
    overrides.emplace_back("seed", std::to_string(seed));
  }
  if (trials_opt->count() > 0) {
    if (trials == 0) throw iabsim::ConfigError("--trials must be at least 1");
    sc.trials = static_cast<std::size_t>(trials);
    overrides.emplace_back("trials", std::to_string(trials));
  }
  if (sweep_opt->count() > 0) {
    const auto axis = iabsim::axis_from_name(sweep_axis);
    if (!axis) {
      throw iabsim::ConfigError("--sweep: unknown axis '" + sweep_axis + "'");
    }
    iabsim::SweepSpec spec;
    spec.axis = *axis;
    if (sc.sweep) spec.values = sc.sweep->values;
    sc.sweep = spec;
    overrides.emplace_back("sweep", sweep_axis);
  }
  if (values_opt->count() > 0) {
    if (!sc.sweep) {
      throw iabsim::ConfigError("--values requires a sweep axis");
    }
    sc.sweep->values = parse_value_list(values_csv);
    overrides.emplace_back("values", values_csv);
  }
  if (variants_opt->count() > 0) {
    sc.variants = parse_variant_list(variants_csv);
    overrides.emplace_back("variants", variants_csv);
  }
  if (!output.empty()) {
    sc.output_path = output;
    overrides.emplace_back("output", output);
  }
  if (sc.sweep && sc.sweep->values.empty()) {
    throw iabsim::ConfigError("sweep has no values");
  }
  // Re-validate values against the (possibly overridden) axis.
  if (sc.sweep) {
    for (double v : sc.sweep->values) {
      (void)iabsim::apply_axis(sc, sc.sweep->axis, v);
    }
  }
  if (sc.output_path.empty()) sc.output_path = "results.csv";

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<iabsim::SweepRow> rows;
  std::string axis_label = "none";
  if (sc.sweep) {
    axis_label = iabsim::axis_name(sc.sweep->axis);
    log_info("sweep " + axis_label + ", " +
             std::to_string(sc.sweep->values.size()) + " values, " +
             std::to_string(sc.variants.size()) + " variant(s), " +
             std::to_string(sc.trials) + " trials each");
    rows = iabsim::run_sweep(sc, sc.sweep->axis, sc.sweep->values);
  } else {
    log_info("single point, " + std::to_string(sc.variants.size()) +
             " variant(s), " + std::to_string(sc.trials) + " trials each");
    for (iabsim::Variant v : sc.variants) {
      rows.push_back({0.0, v, iabsim::estimate_coverage(sc, v)});
    }
  }
  for (const iabsim::SweepRow& row : rows) {
    log_debug(std::string(iabsim::variant_name(row.variant)) + " value " +
              std::to_string(row.value) + " rho_hat " +
              std::to_string(row.estimate.rho_hat));
  }

  write_file_atomic(sc.output_path,
                    render_table(sc, axis_label, rows, overrides));
  const auto t1 = std::chrono::steady_clock::now();
  const double secs =
      std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0)
          .count();
  // Wall time goes to the log, never into the results file, which must be
  // byte-identical across repeat runs.
  char timing[64];
  std::snprintf(timing, sizeof(timing), "%.2f s", secs);
  log_info("wrote '" + sc.output_path + "' (" + timing + ")");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const iabsim::ConfigError& e) {
    std::cerr << "iabsim: config error: " << e.what() << "\n";
    return 2;
  } catch (const iabsim::IoError& e) {
    std::cerr << "iabsim: i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "iabsim: internal error: " << e.what() << "\n";
    return 4;
  }
}
