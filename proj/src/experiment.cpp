#include "irsee/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "irsee/convergence.hpp"
#include "irsee/mcsim.hpp"
#include "irsee/optimize.hpp"

namespace irsee {

using nlohmann::json;

namespace {

constexpr const char* kCsvHeader =
    "sweep_var,op_gamma,op_clt,op_mc,mc_stderr,be_bound";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& field) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("field '" + field + "': expected a number, got '" + text +
                     "'");
  }
}

long parse_integer(const std::string& text, const std::string& field) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("field '" + field + "': expected an integer, got '" +
                     text + "'");
  }
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& field) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size() || text.find('-') != std::string::npos) {
      throw std::invalid_argument("");
    }
    return v;
  } catch (const std::exception&) {
    throw ParseError("field '" + field +
                     "': expected a nonnegative integer, got '" + text + "'");
  }
}

}  // namespace

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::sweep_power_ee: return "sweep-power-ee";
    case Experiment::sweep_power_rate: return "sweep-power-rate";
    case Experiment::sweep_n: return "sweep-n";
    case Experiment::berry_esseen: return "berry-esseen";
    case Experiment::optimize: return "optimize";
    case Experiment::required_n: return "required-n";
    case Experiment::validate: return "validate";
  }
  throw std::logic_error("experiment_name: unreachable");
}

Experiment experiment_from_name(const std::string& name) {
  static const std::pair<const char*, Experiment> table[] = {
      {"sweep-power-ee", Experiment::sweep_power_ee},
      {"sweep-power-rate", Experiment::sweep_power_rate},
      {"sweep-n", Experiment::sweep_n},
      {"berry-esseen", Experiment::berry_esseen},
      {"optimize", Experiment::optimize},
      {"required-n", Experiment::required_n},
      {"validate", Experiment::validate},
  };
  for (const auto& [n, e] : table) {
    if (name == n) return e;
  }
  throw ParseError("field 'experiment': unknown experiment '" + name + "'");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) throw std::domain_error("watts_to_dbm: watts must be > 0");
  return 10.0 * std::log10(watts) + 30.0;
}

double parse_power(const std::string& text, const std::string& field) {
  const std::string t = trim(text);
  const std::string l = lower(t);
  const auto numeric_prefix = [&](std::size_t suffix_len) {
    return parse_number(trim(t.substr(0, t.size() - suffix_len)), field);
  };
  if (l.size() > 3 && l.compare(l.size() - 3, 3, "dbm") == 0) {
    return dbm_to_watts(numeric_prefix(3));
  }
  if (l.size() > 2 && l.compare(l.size() - 2, 2, "mw") == 0) {
    return 1e-3 * numeric_prefix(2);
  }
  if (l.size() > 1 && l.back() == 'w') {
    return numeric_prefix(1);
  }
  throw ParseError("field '" + field +
                   "': power needs a unit suffix 'W', 'mW' or 'dBm', got '" +
                   text + "'");
}

namespace {

SweepRange parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(trim(item));
  if (parts.size() != 3 && parts.size() != 4) {
    throw ParseError("field 'sweep': expected START:STOP:POINTS[:db], got '" +
                     text + "'");
  }
  SweepRange s;
  s.start = parse_number(parts[0], "sweep.start");
  s.stop = parse_number(parts[1], "sweep.stop");
  s.points = static_cast<int>(parse_integer(parts[2], "sweep.points"));
  s.db = parts.size() == 4;
  if (s.db && lower(parts[3]) != "db") {
    throw ParseError("field 'sweep': trailing tag must be 'db', got '" +
                     parts[3] + "'");
  }
  if (s.points < 1) throw ParseError("field 'sweep': points must be >= 1");
  return s;
}

std::string sweep_to_string(const SweepRange& s) {
  std::string out = fmt(s.start) + ":" + fmt(s.stop) + ":" +
                    std::to_string(s.points);
  if (s.db) out += ":db";
  return out;
}

Rician& as_rician(ExperimentSpec& spec, const std::string& field) {
  if (auto* r = std::get_if<Rician>(&spec.channel)) return *r;
  throw ParseError("field '" + field + "': requires channel = rician");
}

Rayleigh& as_rayleigh(ExperimentSpec& spec, const std::string& field) {
  if (auto* r = std::get_if<Rayleigh>(&spec.channel)) return *r;
  throw ParseError("field '" + field + "': requires channel = rayleigh");
}

}  // namespace

void set_field(ExperimentSpec& spec, const std::string& key,
               const std::string& value) {
  const std::string v = trim(value);
  if (key == "experiment") {
    spec.experiment = experiment_from_name(v);
  } else if (key == "channel") {
    const std::string name = lower(v);
    if (name == "rician") {
      if (!std::holds_alternative<Rician>(spec.channel)) spec.channel = Rician{};
    } else if (name == "rayleigh") {
      if (!std::holds_alternative<Rayleigh>(spec.channel)) {
        spec.channel = Rayleigh{};
      }
    } else {
      throw ParseError("field 'channel': expected rician or rayleigh, got '" +
                       v + "'");
    }
  } else if (key == "k1") {
    as_rician(spec, key).k1 = parse_number(v, key);
  } else if (key == "k2") {
    as_rician(spec, key).k2 = parse_number(v, key);
  } else if (key == "omega1") {
    as_rician(spec, key).omega1 = parse_number(v, key);
  } else if (key == "omega2") {
    as_rician(spec, key).omega2 = parse_number(v, key);
  } else if (key == "sigma") {
    as_rayleigh(spec, key).sigma = parse_number(v, key);
  } else if (key == "n") {
    spec.system.n_elements = static_cast<int>(parse_integer(v, key));
  } else if (key == "p-tx") {
    spec.system.p_tx = parse_power(v, key);
  } else if (key == "p-circuit") {
    spec.system.p_circuit = parse_power(v, key);
  } else if (key == "p-irs") {
    spec.system.p_irs = parse_power(v, key);
  } else if (key == "n0") {
    spec.system.n0 = parse_power(v, key);
  } else if (key == "eta-th") {
    spec.eta_th = parse_number(v, key);
  } else if (key == "r-th") {
    spec.r_th = parse_number(v, key);
  } else if (key == "sweep") {
    spec.sweep = parse_sweep(v);
  } else if (key == "trials") {
    spec.trials = parse_integer(v, key);
  } else if (key == "seed") {
    spec.seed = parse_unsigned(v, key);
  } else if (key == "out") {
    spec.out_path = v;
  } else if (key == "format") {
    const std::string name = lower(v);
    if (name == "csv") {
      spec.format = OutputFormat::csv;
    } else if (name == "json") {
      spec.format = OutputFormat::json;
    } else {
      throw ParseError("field 'format': expected csv or json, got '" + v + "'");
    }
  } else if (key == "tol") {
    spec.tol = parse_number(v, key);
  } else if (key == "op-target") {
    spec.op_targets.clear();
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      spec.op_targets.push_back(parse_number(trim(item), key));
    }
    if (spec.op_targets.empty()) {
      throw ParseError("field 'op-target': expected at least one value");
    }
  } else if (key == "n-max") {
    spec.n_max = static_cast<int>(parse_integer(v, key));
  } else if (key == "p-max") {
    spec.p_max_w = parse_power(v, key);
  } else if (key == "p-min") {
    spec.p_min_w = parse_power(v, key);
  } else {
    throw ParseError("unknown field '" + key + "'");
  }
}

json spec_to_json(const ExperimentSpec& spec) {
  json j;
  j["experiment"] = experiment_name(spec.experiment);
  if (const auto* r = std::get_if<Rician>(&spec.channel)) {
    j["channel"] = "rician";
    j["k1"] = r->k1;
    j["k2"] = r->k2;
    j["omega1"] = r->omega1;
    j["omega2"] = r->omega2;
  } else {
    j["channel"] = "rayleigh";
    j["sigma"] = std::get<Rayleigh>(spec.channel).sigma;
  }
  j["n"] = spec.system.n_elements;
  j["p-tx"] = spec.system.p_tx;
  j["p-circuit"] = spec.system.p_circuit;
  j["p-irs"] = spec.system.p_irs;
  j["n0"] = spec.system.n0;
  j["eta-th"] = spec.eta_th;
  if (spec.r_th) j["r-th"] = *spec.r_th;
  j["sweep"] = sweep_to_string(spec.sweep);
  j["trials"] = spec.trials;
  j["seed"] = spec.seed;
  j["out"] = spec.out_path;
  j["format"] = spec.format == OutputFormat::csv ? "csv" : "json";
  j["tol"] = spec.tol;
  j["op-target"] = spec.op_targets;
  j["n-max"] = spec.n_max;
  j["p-max"] = spec.p_max_w;
  j["p-min"] = spec.p_min_w;
  return j;
}

ExperimentSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("spec JSON: expected an object");
  ExperimentSpec spec;
  // The channel tag decides which parameter fields are admissible.
  if (j.contains("channel")) {
    set_field(spec, "channel", j.at("channel").get<std::string>());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "channel") continue;
    if (key == "op-target" && value.is_array()) {
      spec.op_targets = value.get<std::vector<double>>();
      if (spec.op_targets.empty()) {
        throw ParseError("field 'op-target': expected at least one value");
      }
      continue;
    }
    const bool power_key = key == "p-tx" || key == "p-circuit" ||
                           key == "p-irs" || key == "n0" || key == "p-max" ||
                           key == "p-min";
    if (value.is_string()) {
      set_field(spec, key, value.get<std::string>());
    } else if (value.is_boolean()) {
      set_field(spec, key, value.get<bool>() ? "1" : "0");
    } else if (value.is_number() && power_key) {
      set_field(spec, key, fmt(value.get<double>()) + "W");  // watts
    } else if (value.is_number_unsigned()) {
      set_field(spec, key, std::to_string(value.get<unsigned long long>()));
    } else if (value.is_number_integer()) {
      set_field(spec, key, std::to_string(value.get<long long>()));
    } else if (value.is_number()) {
      set_field(spec, key, fmt(value.get<double>()));
    } else {
      throw ParseError("field '" + key + "': unsupported JSON value type");
    }
  }
  return spec;
}

bool operator==(const ExperimentSpec& a, const ExperimentSpec& b) {
  return spec_to_json(a) == spec_to_json(b);
}

ExperimentSpec parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config file '" + path + "': cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
      throw ParseError("config file '" + path + "': invalid JSON");
    }
    return spec_from_json(j.contains("spec") ? j.at("spec") : j);
  }

  std::vector<std::pair<std::string, std::string>> kv;
  std::stringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config file '" + path + "' line " +
                       std::to_string(lineno) + ": expected key = value");
    }
    kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  // Apply the channel tag first so channel parameters land in the right
  // variant regardless of file order.
  ExperimentSpec spec;
  for (const auto& [k, v] : kv) {
    if (k == "channel") set_field(spec, k, v);
  }
  for (const auto& [k, v] : kv) {
    if (k != "channel") set_field(spec, k, v);
  }
  return spec;
}

namespace {

void validate_spec(const ExperimentSpec& spec) {
  validate(spec.channel);
  validate(spec.system, /*require_p_tx=*/true);
  if (spec.sweep.points < 1) throw ParseError("field 'sweep': points must be >= 1");
  if (spec.trials != 0 && spec.trials < 100) {
    throw ParseError("field 'trials': must be 0 (skip MC) or >= 100");
  }
  if (spec.n_max < 1) throw ParseError("field 'n-max': must be >= 1");
  if (!(spec.p_min_w > 0.0) || !(spec.p_min_w < spec.p_max_w)) {
    throw ParseError("fields 'p-min'/'p-max': need 0 < p-min < p-max");
  }
  if (spec.experiment == Experiment::validate && spec.trials == 0) {
    throw ParseError("validate: needs trials >= 100");
  }
}

std::vector<double> sweep_power_watts(const SweepRange& s,
                                      std::vector<double>& raw) {
  raw.resize(s.points);
  std::vector<double> watts(s.points);
  for (int i = 0; i < s.points; ++i) {
    const double v =
        s.points == 1
            ? s.start
            : s.start + (s.stop - s.start) * i / (s.points - 1.0);
    raw[i] = v;
    watts[i] = s.db ? dbm_to_watts(v) : v;
    if (!(watts[i] > 0.0)) {
      throw ParseError("field 'sweep': power values must be > 0 W");
    }
  }
  return watts;
}

std::vector<int> sweep_elements(const SweepRange& s) {
  std::vector<int> out(s.points);
  for (int i = 0; i < s.points; ++i) {
    double v;
    if (s.points == 1) {
      v = s.start;
    } else if (s.db) {
      if (!(s.start > 0.0) || !(s.stop > 0.0)) {
        throw ParseError("field 'sweep': geometric N sweep needs start, stop > 0");
      }
      v = std::exp(std::log(s.start) +
                   (std::log(s.stop) - std::log(s.start)) * i / (s.points - 1.0));
    } else {
      v = s.start + (s.stop - s.start) * i / (s.points - 1.0);
    }
    out[i] = static_cast<int>(std::lround(v));
    if (out[i] < 1) throw ParseError("field 'sweep': N values must be >= 1");
  }
  return out;
}

std::vector<SweepRow> power_sweep_rows(const ExperimentSpec& spec, bool rate) {
  std::vector<double> raw;
  const std::vector<double> watts = sweep_power_watts(spec.sweep, raw);
  const RateThreshold rth{spec.r_th.value_or(2.0)};
  const EeThreshold eta{spec.eta_th};

  // One draw of X serves the whole sweep: its law does not depend on p.
  Eigen::ArrayXd x;
  if (spec.trials > 0) {
    x = sample_products(spec.channel, spec.system.n_elements, spec.trials,
                        spec.seed);
  }

  std::vector<SweepRow> rows(watts.size());
  for (std::size_t i = 0; i < watts.size(); ++i) {
    SystemConfig cfg = spec.system;
    cfg.p_tx = watts[i];
    SweepRow& row = rows[i];
    row.sweep_var = raw[i];
    const QThreshold qt =
        rate ? rate_q_threshold(cfg, rth) : q_threshold(cfg, eta);
    row.op_gamma =
        detail::gamma_cdf(fit_gamma(spec.channel, cfg.n_elements), qt.sqrt_q);
    row.op_clt = detail::gaussian_cdf(
        fit_gaussian(spec.channel, cfg.n_elements), qt.sqrt_q);
    if (spec.trials > 0) {
      const McEstimate mc = fraction_below(x, qt.sqrt_q, spec.seed);
      row.op_mc = mc.estimate;
      row.mc_stderr = mc.std_error;
    }
  }
  return rows;
}

std::vector<SweepRow> element_sweep_rows(const ExperimentSpec& spec) {
  const std::vector<int> ns = sweep_elements(spec.sweep);
  const EeThreshold eta{spec.eta_th};
  const ProductMoments pm = product_moments(spec.channel);

  std::vector<SweepRow> rows(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    SystemConfig cfg = spec.system;
    cfg.n_elements = ns[i];
    SweepRow& row = rows[i];
    row.sweep_var = ns[i];
    row.op_gamma = op_ee_gamma(cfg, spec.channel, eta);
    row.op_clt = op_ee_clt(cfg, spec.channel, eta);
    row.be_bound = berry_esseen_bound(pm, ns[i]);
    if (spec.trials > 0) {
      const McEstimate mc =
          mc_op_ee(cfg, spec.channel, eta, spec.trials, spec.seed);
      row.op_mc = mc.estimate;
      row.mc_stderr = mc.std_error;
    }
  }
  return rows;
}

std::vector<SweepRow> berry_esseen_rows(const ExperimentSpec& spec) {
  const std::vector<int> ns = sweep_elements(spec.sweep);
  const EeThreshold eta{spec.eta_th};
  const auto reports =
      approximation_error_sweep(spec.system, spec.channel, ns, eta);

  std::vector<SweepRow> rows(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    SystemConfig cfg = spec.system;
    cfg.n_elements = ns[i];
    SweepRow& row = rows[i];
    row.sweep_var = ns[i];
    row.op_gamma = op_ee_gamma(cfg, spec.channel, eta);
    row.op_clt = op_ee_clt(cfg, spec.channel, eta);
    row.be_bound = reports[i].bound;
    row.gap_sup = reports[i].empirical_gap;
    row.gap_at_threshold = reports[i].gap_at_threshold;
    if (spec.trials > 0) {
      const McEstimate mc =
          mc_op_ee(cfg, spec.channel, eta, spec.trials, spec.seed);
      row.op_mc = mc.estimate;
      row.mc_stderr = mc.std_error;
    }
  }
  return rows;
}

void append_cell(std::string& line, const std::optional<double>& v) {
  line += ',';
  if (v) line += fmt(*v);
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const SweepRow& row : rows) {
    std::string line = fmt(row.sweep_var);
    append_cell(line, row.op_gamma);
    append_cell(line, row.op_clt);
    append_cell(line, row.op_mc);
    append_cell(line, row.mc_stderr);
    append_cell(line, row.be_bound);
    out += line;
    out += '\n';
  }
  return out;
}

json rows_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const SweepRow& row : rows) {
    json r;
    r["sweep_var"] = row.sweep_var;
    if (row.op_gamma) r["op_gamma"] = *row.op_gamma;
    if (row.op_clt) r["op_clt"] = *row.op_clt;
    if (row.op_mc) r["op_mc"] = *row.op_mc;
    if (row.mc_stderr) r["mc_stderr"] = *row.mc_stderr;
    if (row.be_bound) r["be_bound"] = *row.be_bound;
    if (row.gap_sup) r["gap_sup"] = *row.gap_sup;
    if (row.gap_at_threshold) r["gap_at_threshold"] = *row.gap_at_threshold;
    arr.push_back(std::move(r));
  }
  return arr;
}

RunOutcome render_rows(const ExperimentSpec& spec,
                       const std::vector<SweepRow>& rows, json summary = {}) {
  RunOutcome outcome;
  if (spec.format == OutputFormat::csv) {
    outcome.output = rows_to_csv(rows);
  } else {
    json j;
    j["spec"] = spec_to_json(spec);
    j["rows"] = rows_to_json(rows);
    if (!summary.is_null()) j["summary"] = summary;
    outcome.output = j.dump(2) + "\n";
  }
  if (!summary.is_null()) outcome.summary = summary.dump();
  return outcome;
}

RunOutcome run_optimize(const ExperimentSpec& spec) {
  OptimizationProblem problem{spec.system, spec.channel, EeThreshold{spec.eta_th},
                              spec.p_max_w, spec.p_min_w};
  const Optimum opt = minimize_op(problem);
  json j;
  j["p_star_dbm"] = watts_to_dbm(opt.p_star);
  j["p_star_w"] = opt.p_star;
  j["op_star"] = opt.op_star;
  j["iterations"] = opt.iterations;
  j["bracket_width"] = opt.bracket_width;
  j["at_boundary"] = opt.at_boundary;

  RunOutcome outcome;
  if (spec.format == OutputFormat::csv) {
    outcome.output =
        "p_star_dbm,p_star_w,op_star,iterations,bracket_width,at_boundary\n" +
        fmt(watts_to_dbm(opt.p_star)) + ',' + fmt(opt.p_star) + ',' +
        fmt(opt.op_star) + ',' + std::to_string(opt.iterations) + ',' +
        fmt(opt.bracket_width) + ',' + (opt.at_boundary ? "1" : "0") + "\n";
  } else {
    json doc;
    doc["spec"] = spec_to_json(spec);
    doc["optimum"] = j;
    outcome.output = doc.dump(2) + "\n";
  }
  outcome.summary = j.dump();
  return outcome;
}

RunOutcome run_required_n(const ExperimentSpec& spec) {
  json arr = json::array();
  std::string csv = "op_target,n_required\n";
  for (const double target : spec.op_targets) {
    const int n = required_elements(spec.system, spec.channel,
                                    EeThreshold{spec.eta_th},
                                    spec.system.p_tx, target, spec.n_max);
    csv += fmt(target) + ',' + std::to_string(n) + '\n';
    arr.push_back(json{{"op_target", target}, {"n_required", n}});
  }
  RunOutcome outcome;
  if (spec.format == OutputFormat::csv) {
    outcome.output = csv;
  } else {
    json doc;
    doc["spec"] = spec_to_json(spec);
    doc["required"] = arr;
    outcome.output = doc.dump(2) + "\n";
  }
  return outcome;
}

RunOutcome run_validate(const ExperimentSpec& spec) {
  const bool rate = spec.r_th.has_value();
  const std::vector<SweepRow> rows = power_sweep_rows(spec, rate);
  double max_diff = 0.0;
  for (const SweepRow& row : rows) {
    max_diff = std::max(max_diff, std::abs(*row.op_gamma - *row.op_mc));
  }
  const bool pass = max_diff <= spec.tol;
  json summary;
  summary["experiment"] = "validate";
  summary["metric"] = rate ? "op_rate" : "op_ee";
  summary["max_abs_diff"] = max_diff;
  summary["tol"] = spec.tol;
  summary["pass"] = pass;
  RunOutcome outcome = render_rows(spec, rows, summary);
  outcome.exit_code = pass ? 0 : 1;
  return outcome;
}

}  // namespace

RunOutcome run(const ExperimentSpec& spec) {
  validate_spec(spec);
  switch (spec.experiment) {
    case Experiment::sweep_power_ee:
      return render_rows(spec, power_sweep_rows(spec, false));
    case Experiment::sweep_power_rate:
      return render_rows(spec, power_sweep_rows(spec, true));
    case Experiment::sweep_n:
      return render_rows(spec, element_sweep_rows(spec));
    case Experiment::berry_esseen:
      return render_rows(spec, berry_esseen_rows(spec));
    case Experiment::optimize:
      return run_optimize(spec);
    case Experiment::required_n:
      return run_required_n(spec);
    case Experiment::validate:
      return run_validate(spec);
  }
  throw std::logic_error("run: unreachable");
}

int run_to_file(const ExperimentSpec& spec) {
  const RunOutcome outcome = run(spec);
  if (spec.out_path.empty()) {
    std::cout << outcome.output;
  } else {
    std::ofstream out(spec.out_path, std::ios::binary);
    if (!out) throw ParseError("field 'out': cannot open '" + spec.out_path + "'");
    out << outcome.output;
  }
  // The summary goes to stderr so piped/redirected row output stays clean.
  if (!outcome.summary.empty()) std::cerr << outcome.summary << "\n";
  return outcome.exit_code;
}

}  // namespace irsee
