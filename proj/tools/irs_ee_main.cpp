// irs-ee: sweep, validate and optimize the outage probability of energy
// efficiency for a finite-element IRS link.
//
// Exit codes: 0 success, 1 validation failure, 2 usage/parse error,
// 3 numerical error.

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irsee/experiment.hpp"

namespace {

struct FlagCapture {
  std::string key;
  std::string value;
  CLI::Option* option = nullptr;
};

void report_error(const std::string& type, const std::string& message) {
  nlohmann::json err;
  err["error"] = {{"type", type}, {"message", message}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outage probability of energy efficiency for an IRS-assisted link"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> flags = {
      {"channel", "Channel model: rician | rayleigh"},
      {"k1", "Rician shape factor of the Tx-IRS hop"},
      {"k2", "Rician shape factor of the IRS-Rx hop"},
      {"omega1", "Rician mean-square envelope power of the Tx-IRS hop"},
      {"omega2", "Rician mean-square envelope power of the IRS-Rx hop"},
      {"sigma", "Rayleigh per-link scale parameter"},
      {"n", "Number of reflecting elements"},
      {"p-tx", "Transmit power, unit-suffixed (e.g. 28dBm, 0.631W)"},
      {"p-circuit", "Static circuit power, unit-suffixed"},
      {"p-irs", "Surface static power, unit-suffixed"},
      {"n0", "Noise power, unit-suffixed"},
      {"eta-th", "Target energy efficiency, bits/Hz/joule"},
      {"r-th", "Target rate, bits/s/Hz"},
      {"sweep", "Sweep range START:STOP:POINTS[:db]"},
      {"trials", "Monte-Carlo trials (0 skips MC columns)"},
      {"seed", "Monte-Carlo seed"},
      {"out", "Output file path (default: stdout)"},
      {"format", "Output format: csv | json"},
      {"tol", "Validation tolerance on |analytic - MC|"},
      {"op-target", "Outage targets for required-n, comma separated"},
      {"n-max", "Element cap for required-n"},
      {"p-max", "Upper power bound for optimize, unit-suffixed"},
      {"p-min", "Lower power bound for optimize, unit-suffixed"},
  };

  const char* experiments[] = {"sweep-power-ee", "sweep-power-rate", "sweep-n",
                               "berry-esseen",   "optimize",         "required-n",
                               "validate"};

  struct SubState {
    CLI::App* sub = nullptr;
    std::string config_path;
    CLI::Option* config_opt = nullptr;
    std::vector<FlagCapture> captures;
  };
  // CLI11 options hold references into SubState; keep each one at a stable
  // heap address.
  std::vector<std::unique_ptr<SubState>> subs;
  subs.reserve(std::size(experiments));
  for (const char* name : experiments) {
    auto state = std::make_unique<SubState>();
    state->sub = app.add_subcommand(name, "");
    state->config_opt =
        state->sub->add_option("--config", state->config_path, "Config file");
    state->captures.reserve(flags.size());
    for (const auto& [key, help] : flags) {
      state->captures.push_back({key, "", nullptr});
      state->captures.back().option = state->sub->add_option(
          "--" + key, state->captures.back().value, help);
    }
    subs.push_back(std::move(state));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return 2;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i]->sub->parsed()) continue;
      irsee::ExperimentSpec spec;
      if (subs[i]->config_opt->count() > 0) {
        spec = irsee::parse_config_file(subs[i]->config_path);
      }
      spec.experiment = irsee::experiment_from_name(experiments[i]);
      // Flags override config-file values; the channel tag goes first so
      // channel parameters land in the right variant.
      for (const FlagCapture& c : subs[i]->captures) {
        if (c.key == "channel" && c.option->count() > 0) {
          irsee::set_field(spec, c.key, c.value);
        }
      }
      for (const FlagCapture& c : subs[i]->captures) {
        if (c.key != "channel" && c.option->count() > 0) {
          irsee::set_field(spec, c.key, c.value);
        }
      }
      return irsee::run_to_file(spec);
    }
    report_error("usage", "no experiment selected");
    return 2;
  } catch (const irsee::ParseError& e) {
    report_error("parse", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    report_error("domain", e.what());
    return 3;
  } catch (const std::overflow_error& e) {
    report_error("overflow", e.what());
    return 3;
  } catch (const std::exception& e) {
    report_error("numeric", e.what());
    return 3;
  }
}
