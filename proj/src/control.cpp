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

#include "gqc/control.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

namespace gqc {

namespace {

void require_protocol(const ControlProtocol& p) {
  if (p.family == FamilyKind::custom) {
    throw InvalidControl("protocols are defined for the angle and strength families");
  }
  if (!(p.y >= 1.0)) throw UnphysicalState("protocol requires y >= 1");
  if (!(p.noise >= 1.0)) throw UnphysicalState("protocol requires N >= 1");
  if (!(p.t_c >= 0.0)) throw InvalidTime("control time must be >= 0");
}

StateFamily initial_family(const ControlProtocol& p) {
  // Pure squeezed vacuum; the strength chart uses y^2 = e^r.
  return p.family == FamilyKind::angle ? angle_family(p.y, 1.0, p.theta_bar)
                                       : strength_family(2.0 * std::log(p.y), 1.0);
}

// Maximizes a smooth 1-d function by golden-section search.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double* best_arg) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && (b - a) > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  if (fc >= fd) {
    *best_arg = c;
    return fc;
  }
  *best_arg = d;
  return fd;
}

}  // namespace

double controlled_rate(const StateFamily& f, const SymplecticControl& c,
                       const ThermalChannel& ch) {
  return qfi_rate(transform_family(f, compose_control(c)), ch);
}

SymplecticControl analytic_optimal_control(const StateFamily& f) {
  const NormalForm nf = normal_form(f.state.cov);
  return {wrap_angle(-nf.theta), 1.0 / nf.y, 0.0};
}

OptimizeResult optimize_control(const StateFamily& f, const ThermalChannel& ch,
                                int grid_resolution, double refine_tol) {
  const int n = std::max(grid_resolution, 4);
  const auto rate_at = [&](double phi, double log_z) {
    return controlled_rate(f, {phi, std::exp(log_z), 0.0}, ch);
  };

  // Coarse grid guards against the pi-periodic landscape's equivalent optima.
  constexpr double kLogZMin = -3.0, kLogZMax = 3.0;
  double best_phi = 0.0, best_lz = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double phi = std::numbers::pi * i / n;
    for (int j = 0; j < n; ++j) {
      const double lz = kLogZMin + (kLogZMax - kLogZMin) * j / (n - 1);
      const double r = rate_at(phi, lz);
      if (r > best) {
        best = r;
        best_phi = phi;
        best_lz = lz;
      }
    }
  }

  // Local zoom: 9x9 grids with shrinking spans around the incumbent. Handles
  // the phi/log-z coupling that plain coordinate descent converges through
  // slowly.
  double span_phi = std::numbers::pi / n;
  double span_lz = (kLogZMax - kLogZMin) / (n - 1);
  for (int level = 0; level < 48; ++level) {
    const double before = best;
    const double center_phi = best_phi;
    const double center_lz = best_lz;
    for (int di = -4; di <= 4; ++di) {
      for (int dj = -4; dj <= 4; ++dj) {
        if (di == 0 && dj == 0) continue;
        const double phi = center_phi + di * span_phi / 4.0;
        const double lz = std::clamp(center_lz + dj * span_lz / 4.0, 2.0 * kLogZMin,
                                     2.0 * kLogZMax);
        const double r = rate_at(phi, lz);
        if (r > best) {
          best = r;
          best_phi = phi;
          best_lz = lz;
        }
      }
    }
    span_phi *= 0.6;
    span_lz *= 0.6;
    if (level >= 24 && best - before < refine_tol * std::max(1.0, std::abs(best))) break;
  }

  // Golden-section polish along each coordinate.
  for (int sweep = 0; sweep < 2; ++sweep) {
    double arg = 0.0;
    double r = golden_max([&](double lz) { return rate_at(best_phi, lz); },
                          best_lz - 4.0 * span_lz, best_lz + 4.0 * span_lz, &arg);
    if (r > best) {
      best = r;
      best_lz = arg;
    }
    r = golden_max([&](double phi) { return rate_at(phi, best_lz); }, best_phi - 4.0 * span_phi,
                   best_phi + 4.0 * span_phi, &arg);
    if (r > best) {
      best = r;
      best_phi = arg;
    }
  }

  return {{wrap_angle(best_phi), std::exp(best_lz), 0.0}, best};
}

double nu_c(double y, double noise, double t_c) {
  const double e = std::exp(-t_c);
  const double a = e * y * y + (1.0 - e) * noise;
  const double b = e / (y * y) + (1.0 - e) * noise;
  return std::sqrt(a * b);
}

double controlled_qfi_strength(double y, double noise, double t_c, double t) {
  const double decay = std::exp(-2.0 * t);
  if (t < t_c) {
    const double e = std::exp(-t);
    const double a = e * y * y + (1.0 - e) * noise;
    const double b = e / (y * y) + (1.0 - e) * noise;
    return decay / (a * b + 1.0);
  }
  const double g = noise + std::exp(-(t - t_c)) * (nu_c(y, noise, t_c) - noise);
  return decay / (g * g + 1.0);
}

double controlled_qfi_angle(double y, double noise, double t_c, double t) {
  const double c = 1.0 / (y * y) - y * y;
  return c * c * controlled_qfi_strength(y, noise, t_c, t);
}

std::vector<CurvePoint> simulate_protocol(const ControlProtocol& p,
                                          std::span<const double> t_grid) {
  require_protocol(p);
  const ThermalChannel ch{p.noise};
  const StateFamily at_start = initial_family(p);

  StateFamily at_control;
  SymplecticControl control;
  bool controlled_path_ready = false;
  const auto ensure_controlled_path = [&] {
    if (controlled_path_ready) return;
    const StateFamily evolved = evolve_family(at_start, p.t_c, ch);
    control = p.control.value_or(analytic_optimal_control(evolved));
    at_control = transform_family(evolved, compose_control(control));
    controlled_path_ready = true;
  };

  std::vector<CurvePoint> curve;
  curve.reserve(t_grid.size());
  for (const double t : t_grid) {
    if (t < p.t_c) {
      curve.push_back({t, gaussian_qfi(evolve_family(at_start, t, ch)).qfi});
    } else {
      ensure_controlled_path();
      curve.push_back({t, gaussian_qfi(evolve_family(at_control, t - p.t_c, ch)).qfi});
    }
  }
  return curve;
}

SingleControlCheck single_control_suffices_check(const ControlProtocol& p, double t_probe,
                                                 double tolerance) {
  require_protocol(p);
  if (!(t_probe >= p.t_c)) throw InvalidTime("probe time must not precede the control time");

  const ThermalChannel ch{p.noise};
  StateFamily f = evolve_family(initial_family(p), p.t_c, ch);
  const SymplecticControl control = p.control.value_or(analytic_optimal_control(f));
  f = evolve_family(transform_family(f, compose_control(control)), t_probe - p.t_c, ch);

  SingleControlCheck out;
  out.identity_rate = qfi_rate(f, ch);
  const OptimizeResult re = optimize_control(f, ch);
  out.reoptimized_rate = std::max(re.rate, out.identity_rate);
  out.best = re.rate > out.identity_rate ? re.control : SymplecticControl{};
  out.rate_gain = out.reoptimized_rate - out.identity_rate;
  out.single_control_optimal = out.rate_gain <= tolerance;
  return out;
}

}  // namespace gqc
