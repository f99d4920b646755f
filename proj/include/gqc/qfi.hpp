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

#include "gqc/thermal.hpp"

namespace gqc {

/// QFI of a single-mode Gaussian family, split into its three contributions:
///   qfi = term_cov + term_purity + term_mean
///       = 1/2 Tr[(sigma^-1 sigma')^2] / (1 + mu^2)
///         + 2 mu'^2 / (1 - mu^4)
///         + 2 r'^T sigma^-1 r'
/// with mu' = -(mu/2) Tr[sigma^-1 sigma'].
struct QfiReport {
  double qfi = 0.0;
  double term_cov = 0.0;
  double term_purity = 0.0;
  double term_mean = 0.0;

  /// Cramer-Rao bound on the estimate's standard deviation after n
  /// measurements: 1 / sqrt(n * qfi). Throws NoInformation for qfi <= 0.
  double crb_stddev(long n) const;
};

/// Squeezing-angle estimation family at the true angle theta_bar:
/// sigma = nu R diag(y^2, 1/y^2) R^T, sigma' = nu (1/y^2 - y^2) R sigma_x R^T,
/// zero first moments. Tr[sigma^-1 sigma'] vanishes identically, and keeps
/// vanishing along the thermal flow and under any symplectic control.
StateFamily angle_family(double y, double nu, double theta_bar);

/// Squeezing-strength estimation family in the chart Y^2 = e^{r sigma_z}:
/// sigma = nu e^{r sigma_z}, sigma' = nu e^{r sigma_z} sigma_z, zero first
/// moments. Tr[sigma^-1 sigma'] vanishes at construction (not along the
/// flow).
StateFamily strength_family(double r_param, double nu);

/// QFI of a Gaussian family. For pure states the purity term is defined as 0
/// when Tr[sigma^-1 sigma'] vanishes; otherwise SingularPurityTerm is
/// thrown (the formula diverges there).
QfiReport gaussian_qfi(const StateFamily& f);

/// Exact time-derivative of the QFI under the thermal attenuator. Agrees
/// with the centered finite difference of gaussian_qfi along evolve_family.
/// Pure-state singularities are handled as in gaussian_qfi.
double qfi_rate(const StateFamily& f, const ThermalChannel& ch);

/// Rate of a controlled angle family, reduced to its invariants:
///   -(1/y^2 - y^2)^2 (2 nu^2 + N nu^4 Tr[sigma^-1]) / (nu^2 + 1)^2.
/// (y, nu) are the family's normal-form parameters, which the covariant
/// control action leaves unchanged; only Tr[sigma^-1] depends on the
/// control, with minimum 2/nu at the whitened CM.
double reduced_rate_angle(double y, double nu, double noise, double sigma_inv_trace);

/// Same reduction without the (1/y^2 - y^2)^2 prefactor.
double reduced_rate_strength(double nu, double noise, double sigma_inv_trace);

/// Quantum Cramer-Rao bound 1 / sqrt(n * qfi).
double crb(double qfi, long n);

}  // namespace gqc
