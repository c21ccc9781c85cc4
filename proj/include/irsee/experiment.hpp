#pragma once

// Experiment runner behind the irs-ee command line tool: spec parsing
// (config file / flag strings), sweep execution, and deterministic CSV /
// JSON rendering.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "irsee/outage.hpp"

namespace irsee {

enum class Experiment {
  sweep_power_ee,
  sweep_power_rate,
  sweep_n,
  berry_esseen,
  optimize,
  required_n,
  validate,
};

enum class OutputFormat { csv, json };

std::string experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

/// dBm <-> watts. dBm exists only at this boundary; everything below the
/// experiment layer works in linear watts.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Parses "28dBm", "0.631W" or "10mW" into watts. `field` names the
/// offending option in error messages.
double parse_power(const std::string& text, const std::string& field);

/// Sweep specification "START:STOP:POINTS[:db]". For power sweeps the db
/// tag means dBm-spaced values; for element sweeps it means geometric
/// spacing rounded to integers.
struct SweepRange {
  double start = 0.0;
  double stop = 40.0;
  int points = 21;
  bool db = true;
};

struct ExperimentSpec {
  Experiment experiment = Experiment::sweep_power_ee;
  ChannelModel channel = Rayleigh{};
  SystemConfig system{};
  double eta_th = 2.0;
  std::optional<double> r_th;  // engaged: rate experiments / rate validation
  SweepRange sweep{};
  long trials = 100000;
  std::uint64_t seed = 1;
  std::string out_path;  // empty -> stdout
  OutputFormat format = OutputFormat::csv;
  double tol = 0.015;
  std::vector<double> op_targets = {1e-3, 1e-6, 1e-9};
  int n_max = 4096;
  double p_max_w = 10.0;
  double p_min_w = 1e-6;
};

bool operator==(const ExperimentSpec& a, const ExperimentSpec& b);

nlohmann::json spec_to_json(const ExperimentSpec& spec);
ExperimentSpec spec_from_json(const nlohmann::json& j);

/// Applies one "key = value" assignment (same keys as the CLI flags).
/// Throws ParseError with the field name on any malformed value.
void set_field(ExperimentSpec& spec, const std::string& key,
               const std::string& value);

/// Flat "key = value" text or a JSON document (a bare spec or a previously
/// emitted output file, whose "spec" member is used).
ExperimentSpec parse_config_file(const std::string& path);

/// One output row of a sweep experiment. Disengaged optionals render as
/// empty CSV cells / omitted JSON keys.
struct SweepRow {
  double sweep_var = 0.0;
  std::optional<double> op_gamma;
  std::optional<double> op_clt;
  std::optional<double> op_mc;
  std::optional<double> mc_stderr;
  std::optional<double> be_bound;
  std::optional<double> gap_sup;           // berry-esseen, JSON output only
  std::optional<double> gap_at_threshold;  // berry-esseen, JSON output only
};

struct RunOutcome {
  int exit_code = 0;
  std::string output;   // rendered file body
  std::string summary;  // one-line JSON summary (validate / optimize)
};

/// Executes the experiment and renders its output; does not touch the
/// filesystem. Deterministic for a fixed spec.
RunOutcome run(const ExperimentSpec& spec);

/// run() plus writing to spec.out_path (or stdout) and printing the summary
/// line. Returns the exit code.
int run_to_file(const ExperimentSpec& spec);

}  // namespace irsee
