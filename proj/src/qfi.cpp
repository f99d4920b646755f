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

#include "gqc/qfi.hpp"

#include <cmath>
#include <string>

namespace gqc {

namespace {

// |Tr[sigma^-1 sigma']| below this counts as identically zero when deciding
// the pure-state 0/0 limit of the purity terms.
constexpr double kPureTraceTol = 1e-9;

void require_family(const StateFamily& f) {
  require_valid_cm(f.state.cov);
  const double scale = std::max(1.0, f.d_cov.cwiseAbs().maxCoeff());
  if (std::abs(f.d_cov(0, 1) - f.d_cov(1, 0)) > tol::kSymmetry * scale) {
    throw InvalidMatrix("family tangent sigma' must be symmetric");
  }
}

}  // namespace

double QfiReport::crb_stddev(long n) const { return crb(qfi, n); }

StateFamily angle_family(double y, double nu, double theta_bar) {
  StateFamily f;
  f.label = FamilyKind::angle;
  f.state.cov = cm_from_normal_form({nu, y, theta_bar});
  Mat2 pauli_x;
  pauli_x << 0.0, 1.0, 1.0, 0.0;
  const Mat2 r = rotation(theta_bar);
  f.d_cov = nu * (1.0 / (y * y) - y * y) * r * pauli_x * r.transpose();
  f.d_cov = 0.5 * (f.d_cov + f.d_cov.transpose().eval());
  return f;
}

StateFamily strength_family(double r_param, double nu) {
  StateFamily f;
  f.label = FamilyKind::strength;
  Mat2 cov = Mat2::Zero();
  cov(0, 0) = nu * std::exp(r_param);
  cov(1, 1) = nu * std::exp(-r_param);
  f.state.cov = cov;
  Mat2 tangent = Mat2::Zero();
  tangent(0, 0) = cov(0, 0);
  tangent(1, 1) = -cov(1, 1);
  f.d_cov = tangent;
  if (r_param < 0.0) throw UnphysicalState("strength family requires r >= 0");
  require_valid_cm(f.state.cov);
  return f;
}

QfiReport gaussian_qfi(const StateFamily& f) {
  require_family(f);

  const Mat2& sigma = f.state.cov;
  const Mat2 sigma_inv = sigma.inverse();
  const Mat2 a = sigma_inv * f.d_cov;
  const double mu = purity(sigma);
  const double tr_a = a.trace();
  const double tr_a2 = (a * a).trace();

  QfiReport rep;
  rep.term_cov = 0.5 * tr_a2 / (1.0 + mu * mu);
  if (mu >= 1.0 - tol::kPure) {
    if (std::abs(tr_a) > kPureTraceTol) {
      throw SingularPurityTerm(
          "pure state with Tr[sigma^-1 sigma'] = " + std::to_string(tr_a) +
          ": the purity term of the QFI diverges");
    }
    rep.term_purity = 0.0;
  } else {
    const double dmu = -0.5 * mu * tr_a;
    rep.term_purity = 2.0 * dmu * dmu / (1.0 - mu * mu * mu * mu);
  }
  rep.term_mean = 2.0 * f.d_mean.dot(sigma_inv * f.d_mean);
  rep.qfi = rep.term_cov + rep.term_purity + rep.term_mean;
  return rep;
}

double qfi_rate(const StateFamily& f, const ThermalChannel& ch) {
  require_family(f);
  if (!(ch.noise >= 1.0)) throw UnphysicalState("thermal channel requires N >= 1");

  const double noise = ch.noise;
  const Mat2& sigma = f.state.cov;
  const Mat2 sigma_inv = sigma.inverse();
  const Mat2 a = sigma_inv * f.d_cov;
  const double mu = purity(sigma);
  const double mu2 = mu * mu;
  const double mu4 = mu2 * mu2;
  const double tr_inv = sigma_inv.trace();
  const double tr_a = a.trace();
  const double tr_a2 = (a * a).trace();
  const double tr_a2_inv = (a * a * sigma_inv).trace();
  const double tr_inv2_d = (sigma_inv * sigma_inv * f.d_cov).trace();
  const double drive = noise * tr_inv - 2.0;

  double rate = mu2 * tr_a2 * drive / (2.0 * (1.0 + mu2) * (1.0 + mu2));
  rate -= noise * tr_a2_inv / (1.0 + mu2);

  if (mu >= 1.0 - tol::kPure) {
    if (std::abs(tr_a) > kPureTraceTol) {
      throw SingularPurityTerm(
          "pure state with Tr[sigma^-1 sigma'] = " + std::to_string(tr_a) +
          ": the purity terms of the QFI rate diverge");
    }
    // Tr[sigma^-1 sigma'] == 0: both (1 - mu^4)^-1 terms vanish identically.
  } else {
    rate -= mu2 * tr_a * (drive * tr_a + 2.0 * noise * tr_inv2_d) / (2.0 * (1.0 - mu4));
    rate += mu4 * mu2 / ((1.0 - mu4) * (1.0 - mu4)) * tr_a * tr_a * (2.0 - noise * tr_inv);
  }

  rate -= 2.0 * noise * f.d_mean.dot(sigma_inv * sigma_inv * f.d_mean);
  return rate;
}

double reduced_rate_angle(double y, double nu, double noise, double sigma_inv_trace) {
  const double c = 1.0 / (y * y) - y * y;
  return c * c * reduced_rate_strength(nu, noise, sigma_inv_trace);
}

double reduced_rate_strength(double nu, double noise, double sigma_inv_trace) {
  const double nu2 = nu * nu;
  return -(2.0 * nu2 + noise * nu2 * nu2 * sigma_inv_trace) / ((nu2 + 1.0) * (nu2 + 1.0));
}

double crb(double qfi, long n) {
  if (!(qfi > 0.0)) {
    throw NoInformation("Cramer-Rao bound undefined for qfi = " + std::to_string(qfi));
  }
  if (n < 1) throw NoInformation("sample size must be >= 1");
  return 1.0 / std::sqrt(static_cast<double>(n) * qfi);
}

}  // namespace gqc
