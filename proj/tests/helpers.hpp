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

#include <random>

#include "gqc/qfi.hpp"

namespace gqc::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline SymplecticControl random_control(std::mt19937_64& rng, double max_log_z = 1.0) {
  return {uniform(rng, 0.0, 2.0 * std::numbers::pi), std::exp(uniform(rng, -max_log_z, max_log_z)),
          uniform(rng, 0.0, 2.0 * std::numbers::pi)};
}

inline Mat2 random_cm(std::mt19937_64& rng, double max_nu = 3.0, double max_y = 2.5) {
  return cm_from_normal_form({uniform(rng, 1.0, max_nu), uniform(rng, 1.0, max_y),
                              uniform(rng, 0.0, 2.0 * std::numbers::pi)});
}

// Mixed state with a generic symmetric tangent and first-moment tangent:
// exercises every term of the QFI and its rate. The default purity cap keeps
// finite-difference oracles out of the stiff near-pure regime, where the
// purity terms' higher time-derivatives blow up as (1 - mu^4)^-k.
inline StateFamily random_mixed_family(std::mt19937_64& rng, double min_nu = 1.15,
                                       double max_nu = 2.5) {
  StateFamily f;
  f.state.cov = cm_from_normal_form({uniform(rng, min_nu, max_nu), uniform(rng, 1.0, 2.5),
                                     uniform(rng, 0.0, 2.0 * std::numbers::pi)});
  Mat2 d;
  const double off = uniform(rng, -2.0, 2.0);
  d << uniform(rng, -2.0, 2.0), off, off, uniform(rng, -2.0, 2.0);
  f.d_cov = d;
  f.d_mean = Vec2(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
  return f;
}

// Backward-evolution helper for centered differences around t = 0; kept in
// test code so the production path stays forward-only.
inline StateFamily evolve_family_signed(const StateFamily& f, double t, const ThermalChannel& ch) {
  StateFamily out = f;
  const Mat2 fixed_point = ch.noise * Mat2::Identity();
  out.state.cov = fixed_point + std::exp(-t) * (f.state.cov - fixed_point);
  out.state.mean = std::exp(-0.5 * t) * f.state.mean;
  out.d_cov = std::exp(-t) * f.d_cov;
  out.d_mean = std::exp(-0.5 * t) * f.d_mean;
  return out;
}

}  // namespace gqc::testing
