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

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gqc/control.hpp"

// Experiment driver behind the command-line tool. Exit codes follow the
// tool's contract: 0 success, 1 verification failure, 2 usage/config error.
namespace gqc::cli {

struct ExperimentConfig {
  FamilyKind family = FamilyKind::angle;
  double y = 3.0;
  double theta_bar = 0.0;
  double noise = 1.0;
  std::vector<double> t_c_list;
  double t_max = 1.0;
  int t_steps = 201;
  bool oracle = false;
  int oracle_dim = 60;
  std::uint64_t seed = 1;
};

/// Formats a double with 17 significant digits (lossless round-trip).
std::string format_value(double v);

/// Worker count: GQC_THREADS when set, hardware concurrency otherwise.
int worker_count();

/// Runs fn(i) for i in [0, n) on the configured workers; results must be
/// written to index-addressed slots so the reduction order stays fixed.
void parallel_for(int n, const std::function<void(int)>& fn);

FamilyKind parse_family(const std::string& name);

/// `qfi-curve`: closed-form QFI curves as CSV `t,tc,qfi`, one block per t_c
/// (the uncontrolled curve labeled tc=inf last). With cfg.oracle, the t_c=0
/// curve is cross-checked against the Fock oracle at three probe times.
int run_qfi_curve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// `optimize`: numeric optimum versus the analytic one for a fresh family.
int run_optimize(FamilyKind family, double y, double theta_bar, double nu, double noise,
                 std::ostream& out, std::ostream& err);

/// `verify`: deterministic invariant suites; exit 0 iff all checks pass.
int run_verify(const std::string& suite, std::uint64_t seed, int samples, std::ostream& out,
               std::ostream& err);

/// `reproduce`: emits the full curve bundle of one figure panel.
int run_reproduce(const std::string& figure, const std::string& panel, const std::string& out_path,
                  std::ostream& out, std::ostream& err);

}  // namespace gqc::cli
