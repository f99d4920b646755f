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

#include "gqc/thermal.hpp"

#include <cmath>
#include <string>

namespace gqc {

namespace {

void require_channel(const ThermalChannel& ch) {
  if (!(ch.noise >= 1.0)) {
    throw UnphysicalState("thermal channel requires N = 2*nbar + 1 >= 1, got " +
                          std::to_string(ch.noise));
  }
}

void require_time(double t) {
  if (!(t >= 0.0)) throw InvalidTime("evolution time must be >= 0, got " + std::to_string(t));
}

}  // namespace

Mat2 evolve_cm(const Mat2& sigma, double t, const ThermalChannel& ch) {
  require_channel(ch);
  require_time(t);
  if (t == 0.0) return sigma;
  const Mat2 fixed_point = ch.noise * Mat2::Identity();
  return fixed_point + std::exp(-t) * (sigma - fixed_point);
}

Vec2 evolve_mean(const Vec2& r, double t, const ThermalChannel& ch) {
  require_channel(ch);
  require_time(t);
  return std::exp(-0.5 * t) * r;
}

StateFamily evolve_family(const StateFamily& f, double t, const ThermalChannel& ch) {
  StateFamily out = f;
  out.state.cov = evolve_cm(f.state.cov, t, ch);
  out.state.mean = evolve_mean(f.state.mean, t, ch);
  out.d_cov = std::exp(-t) * f.d_cov;
  out.d_mean = std::exp(-0.5 * t) * f.d_mean;
  return out;
}

std::pair<Mat2, Vec2> ode_integrate(const Mat2& sigma, const Vec2& r, double t,
                                    const ThermalChannel& ch, double dt) {
  require_channel(ch);
  require_time(t);
  if (!(dt > 0.0)) throw InvalidStep("integrator step must be positive, got " + std::to_string(dt));

  const Mat2 drive = ch.noise * Mat2::Identity();
  const auto cm_rhs = [&drive](const Mat2& s) -> Mat2 { return -s + drive; };
  const auto mean_rhs = [](const Vec2& v) -> Vec2 { return -0.5 * v; };

  Mat2 s = sigma;
  Vec2 v = r;
  double remaining = t;
  while (remaining > 0.0) {
    const double h = std::min(dt, remaining);
    const Mat2 k1 = cm_rhs(s);
    const Mat2 k2 = cm_rhs(s + 0.5 * h * k1);
    const Mat2 k3 = cm_rhs(s + 0.5 * h * k2);
    const Mat2 k4 = cm_rhs(s + h * k3);
    s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const Vec2 m1 = mean_rhs(v);
    const Vec2 m2 = mean_rhs(v + 0.5 * h * m1);
    const Vec2 m3 = mean_rhs(v + 0.5 * h * m2);
    const Vec2 m4 = mean_rhs(v + h * m3);
    v += (h / 6.0) * (m1 + 2.0 * m2 + 2.0 * m3 + m4);

    remaining -= h;
  }
  return {s, v};
}

StateFamily transform_family(const StateFamily& f, const Mat2& s) {
  require_symplectic(s);
  StateFamily out = f;
  out.state = apply_symplectic(f.state, s);
  out.d_cov = 0.5 * (s * f.d_cov * s.transpose() + (s * f.d_cov * s.transpose()).transpose());
  out.d_mean = s * f.d_mean;
  return out;
}

StateFamily apply_control_then_evolve(const StateFamily& f, const SymplecticControl& c,
                                      double t_after, const ThermalChannel& ch) {
  return evolve_family(transform_family(f, compose_control(c)), t_after, ch);
}

}  // namespace gqc
