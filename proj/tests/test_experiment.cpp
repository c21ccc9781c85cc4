#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "irsee/experiment.hpp"

using namespace irsee;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

ExperimentSpec u_shape_spec() {
  ExperimentSpec spec;
  spec.experiment = Experiment::sweep_power_ee;
  spec.channel = Rayleigh{};
  spec.system = {4, 1.0, 0.5, 0.5, 1.0};
  spec.eta_th = 1.0;
  spec.sweep = {18.0, 40.0, 23, true};
  spec.trials = 20000;
  spec.seed = 3;
  return spec;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("dBm and power-string parsing") {
  CHECK(std::abs(dbm_to_watts(28.0) - 0.6309573444801932) < 1e-15);
  CHECK(std::abs(dbm_to_watts(0.0) - 1e-3) < 1e-18);
  CHECK(std::abs(watts_to_dbm(dbm_to_watts(17.3)) - 17.3) < 1e-12);
  CHECK(std::abs(parse_power("28dBm", "p-tx") - 0.6309573444801932) < 1e-15);
  CHECK(parse_power("0.631W", "p-tx") == 0.631);
  CHECK(std::abs(parse_power("10mW", "p-tx") - 0.01) < 1e-18);
  CHECK(parse_power(" 2.5 W ", "p-tx") == 2.5);
}

TEST_CASE("power strings without a unit are rejected with the field name") {
  try {
    parse_power("28", "p-tx");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("p-tx") != std::string::npos);
    CHECK(msg.find("dBm") != std::string::npos);
  }
}

TEST_CASE("sweep string parsing") {
  ExperimentSpec spec;
  set_field(spec, "sweep", "0:40:21:db");
  CHECK(spec.sweep.start == 0.0);
  CHECK(spec.sweep.stop == 40.0);
  CHECK(spec.sweep.points == 21);
  CHECK(spec.sweep.db);
  set_field(spec, "sweep", "1:64:64");
  CHECK_FALSE(spec.sweep.db);
  CHECK_THROWS_AS(set_field(spec, "sweep", "1:2"), ParseError);
  CHECK_THROWS_AS(set_field(spec, "sweep", "1:2:3:linear"), ParseError);
  CHECK_THROWS_AS(set_field(spec, "sweep", "1:2:0"), ParseError);
}

TEST_CASE("unknown fields and wrong-variant fields are named in errors") {
  ExperimentSpec spec;
  CHECK_THROWS_AS(set_field(spec, "bogus", "1"), ParseError);
  try {
    set_field(spec, "k1", "2.0");  // channel is rayleigh by default
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("k1") != std::string::npos);
  }
  set_field(spec, "channel", "rician");
  CHECK_NOTHROW(set_field(spec, "k1", "2.0"));
}

TEST_CASE("config file parsing with comments and flag overrides") {
  const std::string path = "test_config.cfg";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "channel = rician\n"
        << "k1 = 2.0\n"
        << "k2 = 1.5\n"
        << "p-tx = 28dBm   # inline comment\n"
        << "trials = 5000\n";
  }
  ExperimentSpec spec = parse_config_file(path);
  const auto& ric = std::get<Rician>(spec.channel);
  CHECK(ric.k1 == 2.0);
  CHECK(ric.k2 == 1.5);
  CHECK(std::abs(spec.system.p_tx - 0.6309573444801932) < 1e-15);
  CHECK(spec.trials == 5000);
  // A flag applied afterwards overrides the file value.
  set_field(spec, "trials", "900");
  CHECK(spec.trials == 900);
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_config_file("does_not_exist.cfg"), ParseError);
}

TEST_CASE("config file order does not matter for channel parameters") {
  const std::string path = "test_config_order.cfg";
  {
    std::ofstream out(path);
    out << "k1 = 3.0\nchannel = rician\n";
  }
  const ExperimentSpec spec = parse_config_file(path);
  CHECK(std::get<Rician>(spec.channel).k1 == 3.0);
  std::remove(path.c_str());
}

TEST_CASE("JSON spec round trip is exact") {
  ExperimentSpec spec;
  spec.experiment = Experiment::required_n;
  spec.channel = Rician{1.25, 0.5, 2.0, 1.0};
  spec.system = {16, 0.6309573444801932, 0.01, 0.01, 2.0};
  spec.eta_th = 2.0;
  spec.r_th = 1.75;
  spec.sweep = {2.0, 64.0, 6, true};
  spec.trials = 12345;
  spec.seed = 987654321;
  spec.format = OutputFormat::json;
  spec.tol = 0.01;
  spec.op_targets = {1e-2, 1e-5};
  spec.n_max = 128;
  spec.p_max_w = 3.5;
  spec.p_min_w = 1e-5;

  const ExperimentSpec back = spec_from_json(spec_to_json(spec));
  CHECK(back == spec);
}

TEST_CASE("emitted JSON output reparses to the identical spec") {
  ExperimentSpec spec = u_shape_spec();
  spec.trials = 500;
  spec.format = OutputFormat::json;
  spec.out_path = "test_roundtrip.json";
  CHECK(run_to_file(spec) == 0);
  const ExperimentSpec back = parse_config_file("test_roundtrip.json");
  CHECK(back == spec);
  std::remove("test_roundtrip.json");
}

TEST_CASE("CSV header is bit-exact and row count equals sweep points") {
  ExperimentSpec spec = u_shape_spec();
  spec.trials = 1000;
  const RunOutcome outcome = run(spec);
  const auto lines = lines_of(outcome.output);
  REQUIRE(lines.size() == 24u);  // header + 23 points
  CHECK(lines[0] == "sweep_var,op_gamma,op_clt,op_mc,mc_stderr,be_bound");
  // Power sweeps have no Berry-Esseen column: trailing cell is empty.
  const auto cells = split_csv(lines[1]);
  REQUIRE(cells.size() == 6u);
  CHECK(cells[5] == "");
  CHECK_FALSE(cells[1].empty());
  CHECK_FALSE(cells[3].empty());
}

TEST_CASE("MC columns are omitted when trials is zero") {
  ExperimentSpec spec = u_shape_spec();
  spec.trials = 0;
  const RunOutcome outcome = run(spec);
  const auto cells = split_csv(lines_of(outcome.output)[1]);
  REQUIRE(cells.size() == 6u);
  CHECK_FALSE(cells[1].empty());  // op_gamma
  CHECK_FALSE(cells[2].empty());  // op_clt
  CHECK(cells[3] == "");          // op_mc
  CHECK(cells[4] == "");          // mc_stderr
}

TEST_CASE("EE outage sweep is U-shaped with an interior minimum") {
  const RunOutcome outcome = run(u_shape_spec());
  const auto lines = lines_of(outcome.output);
  std::vector<double> op;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    op.push_back(std::stod(split_csv(lines[i])[1]));
  }
  const auto best = std::min_element(op.begin(), op.end());
  CHECK(best != op.begin());
  CHECK(best != op.end() - 1);
  CHECK(*best < op.front());
  CHECK(*best < op.back());
}

TEST_CASE("rate outage sweep decreases monotonically") {
  ExperimentSpec spec = u_shape_spec();
  spec.experiment = Experiment::sweep_power_rate;
  spec.r_th = 2.0;
  spec.trials = 0;
  const RunOutcome outcome = run(spec);
  const auto lines = lines_of(outcome.output);
  double prev = 1.1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double op = std::stod(split_csv(lines[i])[1]);
    CHECK(op < prev);
    prev = op;
  }
}

TEST_CASE("element sweep decreases in N and is lower for stronger LOS") {
  ExperimentSpec spec;
  spec.experiment = Experiment::sweep_n;
  spec.system = {4, 0.8, 0.5, 0.5, 1.0};
  spec.eta_th = 1.0;
  spec.sweep = {2.0, 32.0, 5, true};  // geometric: 2,4,8,16,32
  spec.trials = 0;

  std::vector<std::vector<double>> op_by_k;
  for (const double k : {0.0, 1.0, 3.0}) {
    spec.channel = Rician{k, k, 1.0, 1.0};
    const auto lines = lines_of(run(spec).output);
    std::vector<double> column;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto cells = split_csv(lines[i]);
      column.push_back(std::stod(cells[1]));
      CHECK_FALSE(cells[5].empty());  // be_bound present for N sweeps
    }
    REQUIRE(column.size() == 5u);
    CHECK(std::is_sorted(column.rbegin(), column.rend()));  // decreasing in N
    op_by_k.push_back(column);
  }
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(op_by_k[1][i] < op_by_k[0][i]);
    CHECK(op_by_k[2][i] < op_by_k[1][i]);
  }
}

TEST_CASE("berry-esseen experiment reports both gap flavours in JSON") {
  ExperimentSpec spec;
  spec.experiment = Experiment::berry_esseen;
  spec.system = {4, 1.0, 0.5, 0.5, 1.0};
  spec.eta_th = 2.0;
  spec.sweep = {4.0, 16.0, 3, true};
  spec.trials = 0;
  spec.format = OutputFormat::json;
  const RunOutcome outcome = run(spec);
  const json doc = json::parse(outcome.output);
  REQUIRE(doc.at("rows").size() == 3u);
  double prev_gap = 1.0;
  for (const auto& row : doc.at("rows")) {
    CHECK(row.contains("be_bound"));
    CHECK(row.contains("gap_sup"));
    CHECK(row.contains("gap_at_threshold"));
    const double gap = row.at("gap_sup").get<double>();
    CHECK(gap <= prev_gap + 1e-3);
    prev_gap = gap;
  }
  // CSV format keeps the fixed header for the same experiment.
  spec.format = OutputFormat::csv;
  const auto lines = lines_of(run(spec).output);
  CHECK(lines[0] == "sweep_var,op_gamma,op_clt,op_mc,mc_stderr,be_bound");
}

TEST_CASE("validate experiment passes and fails with the tolerance") {
  ExperimentSpec spec = u_shape_spec();
  spec.experiment = Experiment::validate;
  spec.trials = 20000;
  spec.tol = 0.05;
  const RunOutcome pass = run(spec);
  CHECK(pass.exit_code == 0);
  const json summary = json::parse(pass.summary);
  CHECK(summary.at("pass").get<bool>());
  CHECK(summary.at("max_abs_diff").get<double>() < 0.05);
  CHECK(summary.at("metric") == "op_ee");

  spec.tol = 1e-9;
  const RunOutcome fail = run(spec);
  CHECK(fail.exit_code == 1);
  CHECK_FALSE(json::parse(fail.summary).at("pass").get<bool>());
}

TEST_CASE("optimize experiment emits the optimum in both formats") {
  ExperimentSpec spec = u_shape_spec();
  spec.experiment = Experiment::optimize;
  spec.p_max_w = 30.0;
  const RunOutcome outcome = run(spec);
  const auto lines = lines_of(outcome.output);
  CHECK(lines[0] ==
        "p_star_dbm,p_star_w,op_star,iterations,bracket_width,at_boundary");
  const auto cells = split_csv(lines[1]);
  const double p_star_w = std::stod(cells[1]);
  CHECK(p_star_w > 0.5);
  CHECK(p_star_w < 3.0);
  CHECK(std::abs(std::stod(cells[0]) - watts_to_dbm(p_star_w)) < 1e-9);
  CHECK(cells[5] == "0");

  spec.format = OutputFormat::json;
  const json doc = json::parse(run(spec).output);
  CHECK(doc.at("optimum").at("p_star_w").get<double>() == p_star_w);
}

TEST_CASE("required-n experiment") {
  ExperimentSpec spec;
  spec.experiment = Experiment::required_n;
  spec.channel = Rician{1.0, 1.0, 2.0, 2.0};
  spec.system = {1, 0.6309573444801932, 0.01, 0.01, 2.0};
  spec.eta_th = 2.0;
  spec.op_targets = {1e-3, 1e-6};
  const auto lines = lines_of(run(spec).output);
  REQUIRE(lines.size() == 3u);
  CHECK(lines[0] == "op_target,n_required");
  const int n1 = std::stoi(split_csv(lines[1])[1]);
  const int n2 = std::stoi(split_csv(lines[2])[1]);
  CHECK(n1 >= 1);
  CHECK(n2 >= n1);
}

TEST_CASE("reruns are byte-identical") {
  ExperimentSpec spec = u_shape_spec();
  spec.trials = 5000;
  const RunOutcome a = run(spec);
  const RunOutcome b = run(spec);
  CHECK(a.output == b.output);

  spec.format = OutputFormat::json;
  CHECK(run(spec).output == run(spec).output);

  spec.format = OutputFormat::csv;
  spec.out_path = "test_det_a.csv";
  CHECK(run_to_file(spec) == 0);
  spec.out_path = "test_det_b.csv";
  CHECK(run_to_file(spec) == 0);
  CHECK(slurp("test_det_a.csv") == slurp("test_det_b.csv"));
  CHECK_FALSE(slurp("test_det_a.csv").empty());
  std::remove("test_det_a.csv");
  std::remove("test_det_b.csv");
}

TEST_CASE("spec validation failures are parse errors") {
  ExperimentSpec spec = u_shape_spec();
  spec.trials = 50;
  CHECK_THROWS_AS(run(spec), ParseError);
  spec.trials = 1000;
  spec.p_min_w = 2.0;
  spec.p_max_w = 1.0;
  CHECK_THROWS_AS(run(spec), ParseError);
}

}  // TEST_SUITE
