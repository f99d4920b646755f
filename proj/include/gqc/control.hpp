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

#include <optional>
#include <span>
#include <vector>

#include "gqc/qfi.hpp"

namespace gqc {

/// A single delayed-control experiment: a pure squeezed-vacuum family decays
/// in the channel and one instantaneous control is applied at t_c. The
/// optimal control depends on the (unknown) true angle theta_bar, so it
/// presumes a prior estimate; no adaptive loop is provided.
struct ControlProtocol {
  FamilyKind family = FamilyKind::angle;
  double y = 1.0;
  double theta_bar = 0.0;  // angle family only
  double noise = 1.0;
  double t_c = 0.0;
  /// If unset, the analytic optimum (the CM whitener) computed at t_c.
  std::optional<SymplecticControl> control;
};

struct OptimizeResult {
  SymplecticControl control;
  double rate = 0.0;
};

struct CurvePoint {
  double t = 0.0;
  double qfi = 0.0;
};

struct SingleControlCheck {
  bool single_control_optimal = false;
  double identity_rate = 0.0;
  double reoptimized_rate = 0.0;
  double rate_gain = 0.0;
  SymplecticControl best;
};

/// QFI rate after applying the control covariantly (no evolution). Does not
/// depend on the control's final rotation chi.
double controlled_rate(const StateFamily& f, const SymplecticControl& c, const ThermalChannel& ch);

/// The control that maps the family's CM to nu * identity, which minimizes
/// Tr[sigma^-1] (to 2/nu) among all symplectic actions.
SymplecticControl analytic_optimal_control(const StateFamily& f);

/// Maximizes controlled_rate over (phi in [0, pi), log z in [-3, 3]) with
/// chi = 0: coarse grid then coordinate descent with golden-section line
/// searches, stopping when the rate improves by less than refine_tol.
OptimizeResult optimize_control(const StateFamily& f, const ThermalChannel& ch,
                                int grid_resolution = 64, double refine_tol = 1e-10);

/// Symplectic eigenvalue of a pure squeezed vacuum (squeezing y) evolved for
/// t_c in the channel.
double nu_c(double y, double noise, double t_c);

/// Closed-form QFI-vs-time of the delayed-control angle protocol (initial
/// pure squeezed vacuum). t_c = +infinity gives the uncontrolled curve.
double controlled_qfi_angle(double y, double noise, double t_c, double t);

/// Strength counterpart: the angle formula without its (1/y^2 - y^2)^2
/// prefactor. Exact for t_c = 0 and at t = 0; for a delayed control the
/// evolved strength family picks up a purity contribution that this closed
/// form does not carry (see simulate_protocol, which computes the full QFI).
double controlled_qfi_strength(double y, double noise, double t_c, double t);

/// Runs the protocol through the Gaussian machinery (build family, evolve to
/// t_c, apply the control, evolve onward) and evaluates gaussian_qfi at each
/// grid time.
std::vector<CurvePoint> simulate_protocol(const ControlProtocol& p, std::span<const double> t_grid);

/// Evolves the controlled protocol to t_probe > t_c and re-optimizes: the
/// check passes when the identity control is still optimal (rate gain below
/// `tolerance`), and returns the witness rates either way.
SingleControlCheck single_control_suffices_check(const ControlProtocol& p, double t_probe,
                                                 double tolerance = 1e-9);

}  // namespace gqc
