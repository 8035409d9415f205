// Copyright 2026 The BSPE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bspe/bspe.hpp"
#include "bspe/harness/checks.hpp"
#include "bspe/harness/generators.hpp"
#include "bspe/harness/io.hpp"
#include "bspe/harness/simulate.hpp"
#include "bspe/harness/verify.hpp"

namespace {

using bspe::harness::Json;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

bspe::harness::ProfileFile load(const std::string& path, std::optional<std::size_t> k) {
  auto file = bspe::harness::read_profile_file(path);
  if (k) file.units = k;
  if (!file.units) throw std::runtime_error(path + ": no \"units\" in file and no --k given");
  return file;
}

struct SimulateArgs {
  std::string values;
  std::optional<std::size_t> k;
  double p = 0.26;
  std::size_t trials = 100000;
  std::uint64_t seed = 42;
  std::string out;
  std::string csv;
  unsigned workers = 1;
};

int simulate(const SimulateArgs& a) {
  const auto file = load(a.values, a.k);
  bspe::harness::SimConfig config{file.profile, *file.units, a.p, a.trials, a.seed, {}, a.workers};
  const auto revenues = bspe::harness::trial_revenues(config);
  const auto summary = bspe::harness::summarize<bspe::Money::rep>(revenues);
  const auto report =
      bspe::harness::evaluate_bounds(file.profile, bspe::Environment(*file.units), a.p, summary, a.seed);

  if (!a.csv.empty()) {
    std::ostringstream csv;
    csv << "trial,revenue\n";
    for (std::size_t t = 0; t < revenues.size(); ++t) csv << t << ',' << revenues[t] << '\n';
    emit(csv.str(), a.csv);
  }
  Json doc = report;
  Json summary_doc{{"mean", summary.mean},       {"stddev", summary.stddev}, {"stderr", summary.std_error},
                   {"bounds", doc["bounds"]},    {"pass", doc["pass"]},      {"seed", a.seed},
                   {"trials", summary.trials},   {"p", a.p},                 {"units", *file.units},
                   {"factors", doc["factors"]}, {"all_pass", report.pass}};
  emit(summary_doc.dump(2) + "\n", a.out);
  return report.pass ? 0 : 1;
}

struct SweepArgs {
  double p_min = 0.05;
  double p_max = 0.38;
  std::size_t steps = 34;
  std::string values;
  std::optional<std::size_t> k;
  std::size_t trials = 0;
  std::uint64_t seed = 42;
  std::string out;
};

int sweep(const SweepArgs& a) {
  if (a.steps < 1 || !(a.p_min <= a.p_max)) throw std::runtime_error("sweep-p: need steps >= 1 and p-min <= p-max");
  std::optional<bspe::harness::ProfileFile> file;
  if (!a.values.empty()) file = load(a.values, a.k);
  const bool simulate = file && a.trials > 0;

  std::ostringstream csv;
  csv << std::setprecision(10) << "p,r1,r2,ratio" << (simulate ? ",mean,stderr" : "") << '\n';
  for (std::size_t i = 0; i <= a.steps; ++i) {
    const double p = a.steps == 0 ? a.p_min : a.p_min + (a.p_max - a.p_min) * double(i) / double(a.steps);
    const auto f = bspe::analysis::factors(p);
    csv << p << ',' << f.r1 << ',' << f.r2 << ',' << f.ratio;
    if (simulate) {
      const auto s = bspe::harness::run_trials({file->profile, *file->units, p, a.trials, a.seed});
      csv << ',' << s.mean << ',' << s.std_error;
    }
    csv << '\n';
  }
  emit(csv.str(), a.out);
  return 0;
}

int minimize(double lo, double hi, double tol, const std::string& out) {
  const auto m = bspe::analysis::minimize_ratio(lo, hi, tol);
  const auto f = bspe::analysis::factors(m.p);
  Json doc{{"lo", lo},         {"hi", hi},       {"tol", tol},
           {"p_star", m.p},    {"ratio_star", m.ratio}, {"r1", f.r1},
           {"r2", f.r2},       {"single_basin", m.single_basin}, {"r1_root", bspe::analysis::r1_root()}};
  emit(doc.dump(2) + "\n", out);
  return 0;
}

int verify(const std::string& suite, const bspe::harness::VerifyOptions& opt, const std::string& out) {
  const Json report = bspe::harness::run_verify(suite, opt);
  emit(report.dump(2) + "\n", out);
  const bool pass = report["pass"].get<bool>();
  std::cerr << "verify " << suite << ": " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biased sampling profit extraction auction: simulation and verification"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo revenue of the auction on a profile file");
  simulate_cmd->add_option("--values", sim.values, "Profile JSON {\"values\": [...], \"units\": k}")->required();
  simulate_cmd->add_option("--k", sim.k, "Units (overrides the file)")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--p", sim.p, "Sampling bias in (0, 0.5)")->capture_default_str();
  simulate_cmd->add_option("--trials", sim.trials, "Trial count")->capture_default_str()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
  simulate_cmd->add_option("--out", sim.out, "JSON summary path (default stdout)");
  simulate_cmd->add_option("--csv", sim.csv, "Raw per-trial CSV path");
  simulate_cmd->add_option("--workers", sim.workers, "Worker threads")->capture_default_str();

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep-p", "Approximation factors (and optionally revenue) over a p grid");
  sweep_cmd->add_option("--p-min", sw.p_min)->capture_default_str();
  sweep_cmd->add_option("--p-max", sw.p_max)->capture_default_str();
  sweep_cmd->add_option("--steps", sw.steps)->capture_default_str();
  sweep_cmd->add_option("--values", sw.values, "Profile JSON to simulate at each p");
  sweep_cmd->add_option("--k", sw.k);
  sweep_cmd->add_option("--trials", sw.trials, "Trials per grid point (0: formulas only)")->capture_default_str();
  sweep_cmd->add_option("--seed", sw.seed)->capture_default_str();
  sweep_cmd->add_option("--out", sw.out, "CSV path (default stdout)");

  double lo = 0.05, hi = 0.38, tol = 1e-6;
  std::string min_out;
  auto* min_cmd = app.add_subcommand("minimize-ratio", "Minimize the approximation ratio over p");
  min_cmd->add_option("--tol", tol)->capture_default_str();
  min_cmd->add_option("--lo", lo)->capture_default_str();
  min_cmd->add_option("--hi", hi)->capture_default_str();
  min_cmd->add_option("--out", min_out);

  std::string suite = "all", verify_out;
  bspe::harness::VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites; exit 0 iff all pass");
  verify_cmd->add_option("suite", suite, "ruin | sampling | extractor | ic | bounds | all")
      ->check(CLI::IsMember({"ruin", "sampling", "extractor", "ic", "bounds", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--seed", vopt.seed)->capture_default_str();
  verify_cmd->add_option("--trials", vopt.trials, "Monte Carlo trials per profile")->capture_default_str();
  verify_cmd->add_option("--ruin-trials", vopt.ruin_trials)->capture_default_str();
  verify_cmd->add_option("--ic-instances", vopt.ic_instances)->capture_default_str();
  verify_cmd->add_option("--extractor-instances", vopt.extractor_instances)->capture_default_str();
  verify_cmd->add_option("--p", vopt.p)->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "JSON report path (default stdout)");

  std::string kind, gen_out;
  std::size_t n = 0;
  bspe::Money::rep scale = 100;
  std::uint64_t gen_seed = 0;
  std::optional<std::size_t> gen_units;
  auto* gen_cmd = app.add_subcommand("generate", "Write a generated profile as JSON");
  gen_cmd->add_option("--kind", kind, "equal_revenue | uniform | bimodal | constant")->required();
  gen_cmd->add_option("--n", n)->required();
  gen_cmd->add_option("--scale", scale)->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed)->capture_default_str();
  gen_cmd->add_option("--units", gen_units, "Units to record in the file");
  gen_cmd->add_option("--out", gen_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate_cmd) return simulate(sim);
    if (*sweep_cmd) return sweep(sw);
    if (*min_cmd) return minimize(lo, hi, tol, min_out);
    if (*verify_cmd) return verify(suite, vopt, verify_out);
    if (*gen_cmd) {
      const auto profile = bspe::harness::generate_profile(kind, n, gen_seed, scale);
      emit(bspe::harness::profile_json(profile, gen_units) + "\n", gen_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
