// Copyright 2026 The gqc authors
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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gqc/cli.hpp"

namespace {

using gqc::cli::ExperimentConfig;

// JSON config mirrors the flag set; flags set on the command line win.
void load_config(const std::string& path, ExperimentConfig* cfg) {
  std::ifstream in(path);
  if (!in) throw gqc::Error("cannot read config file '" + path + "'");
  nlohmann::json j;
  in >> j;
  if (j.contains("family")) cfg->family = gqc::cli::parse_family(j["family"].get<std::string>());
  if (j.contains("y")) cfg->y = j["y"].get<double>();
  if (j.contains("theta_bar")) cfg->theta_bar = j["theta_bar"].get<double>();
  if (j.contains("N")) cfg->noise = j["N"].get<double>();
  if (j.contains("tc")) cfg->t_c_list = j["tc"].get<std::vector<double>>();
  if (j.contains("t_max")) cfg->t_max = j["t_max"].get<double>();
  if (j.contains("t_steps")) cfg->t_steps = j["t_steps"].get<int>();
  if (j.contains("oracle")) cfg->oracle = j["oracle"].get<bool>();
  if (j.contains("oracle_dim")) cfg->oracle_dim = j["oracle_dim"].get<int>();
  if (j.contains("seed")) cfg->seed = j["seed"].get<std::uint64_t>();
}

int with_output(const std::string& out_path, const std::function<int(std::ostream&)>& fn) {
  if (out_path.empty()) return fn(std::cout);
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Fisher information of decaying Gaussian states under time-local control"};
  app.require_subcommand(1);

  // qfi-curve
  auto* curve = app.add_subcommand("qfi-curve", "Emit closed-form QFI curves as CSV");
  std::string config_path, family_name = "angle", out_path;
  ExperimentConfig cfg;
  curve->add_option("--config", config_path, "JSON config file (flags override)");
  curve->add_option("--family", family_name, "angle|strength");
  curve->add_option("--y", cfg.y, "initial squeezing y >= 1");
  curve->add_option("--theta-bar", cfg.theta_bar, "true squeezing angle (angle family)");
  curve->add_option("--big-n", cfg.noise, "channel noise N = 2*nbar + 1 >= 1");
  curve->add_option("--tc", cfg.t_c_list, "control times (repeatable)");
  curve->add_option("--t-max", cfg.t_max, "end of the time grid");
  curve->add_option("--t-steps", cfg.t_steps, "grid points (>= 2)");
  curve->add_flag("--oracle", cfg.oracle, "cross-check the tc=0 curve against the Fock oracle");
  curve->add_option("--oracle-dim", cfg.oracle_dim, "Fock truncation for the cross-check");
  curve->add_option("--seed", cfg.seed, "seed recorded for reproducibility");
  curve->add_option("--out", out_path, "output CSV path (default stdout)");

  // optimize
  auto* opt = app.add_subcommand("optimize", "Numeric vs analytic optimal control");
  std::string opt_family = "angle";
  double opt_y = 3.0, opt_theta = 0.0, opt_nu = 1.0, opt_noise = 1.0;
  opt->add_option("--family", opt_family, "angle|strength")->required();
  opt->add_option("--y", opt_y, "initial squeezing y >= 1")->required();
  opt->add_option("--theta-bar", opt_theta, "true squeezing angle (angle family)");
  opt->add_option("--nu", opt_nu, "symplectic eigenvalue >= 1");
  opt->add_option("--big-n", opt_noise, "channel noise N >= 1");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  std::string suite = "all";
  std::uint64_t verify_seed = 1;
  int samples = 500;
  verify->add_option("--suite", suite, "dynamics|qfi-derivative|oracle|all");
  verify->add_option("--seed", verify_seed, "RNG seed");
  verify->add_option("--samples", samples, "sample count for the randomized suites");

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "Emit a figure panel's curve bundle");
  std::string figure, panel, rep_out;
  rep->add_option("--figure", figure, "fig2|fig3")->required();
  rep->add_option("--panel", panel, "upper|lower")->required();
  rep->add_option("--out", rep_out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (curve->parsed()) {
      ExperimentConfig merged;
      if (!config_path.empty()) load_config(config_path, &merged);
      // Flags only override fields the user actually passed.
      if (curve->count("--family") || config_path.empty())
        merged.family = gqc::cli::parse_family(family_name);
      if (curve->count("--y")) merged.y = cfg.y;
      if (curve->count("--theta-bar")) merged.theta_bar = cfg.theta_bar;
      if (curve->count("--big-n")) merged.noise = cfg.noise;
      if (curve->count("--tc")) merged.t_c_list = cfg.t_c_list;
      if (curve->count("--t-max")) merged.t_max = cfg.t_max;
      if (curve->count("--t-steps")) merged.t_steps = cfg.t_steps;
      if (curve->count("--oracle")) merged.oracle = cfg.oracle;
      if (curve->count("--oracle-dim")) merged.oracle_dim = cfg.oracle_dim;
      if (curve->count("--seed")) merged.seed = cfg.seed;
      return with_output(out_path,
                         [&](std::ostream& os) { return run_qfi_curve(merged, os, std::cerr); });
    }
    if (opt->parsed()) {
      return gqc::cli::run_optimize(gqc::cli::parse_family(opt_family), opt_y, opt_theta, opt_nu,
                                    opt_noise, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      return gqc::cli::run_verify(suite, verify_seed, samples, std::cout, std::cerr);
    }
    if (rep->parsed()) {
      return gqc::cli::run_reproduce(figure, panel, rep_out, std::cout, std::cerr);
    }
  } catch (const gqc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
