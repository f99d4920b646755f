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

#include <utility>

#include "gqc/symplectic.hpp"

namespace gqc {

/// Markovian thermal attenuator. `noise` is N = 2*nbar + 1 >= 1; all times
/// are dimensionless (units of the inverse loss rate).
struct ThermalChannel {
  double noise = 1.0;
};

/// Which estimation family a tangent belongs to.
enum class FamilyKind { angle, strength, custom };

/// A Gaussian state together with its parameter-tangent (sigma', r') taken
/// at the true parameter value.
struct StateFamily {
  GaussianState state;
  Mat2 d_cov = Mat2::Zero();
  Vec2 d_mean = Vec2::Zero();
  FamilyKind label = FamilyKind::custom;
};

/// Closed-form solution of sigma_dot = -sigma + N*1:
/// e^{-t} sigma + (1 - e^{-t}) N * 1. N*1 is an exact fixed point.
Mat2 evolve_cm(const Mat2& sigma, double t, const ThermalChannel& ch);

/// Closed-form solution of r_dot = -r/2: e^{-t/2} r.
Vec2 evolve_mean(const Vec2& r, double t, const ThermalChannel& ch);

/// Evolves state and tangent: sigma' -> e^{-t} sigma', r' -> e^{-t/2} r'.
StateFamily evolve_family(const StateFamily& f, double t, const ThermalChannel& ch);

/// RK4 integration of the moment equations; test oracle for the closed
/// forms, fourth-order accurate in dt.
std::pair<Mat2, Vec2> ode_integrate(const Mat2& sigma, const Vec2& r, double t,
                                    const ThermalChannel& ch, double dt = 1e-3);

/// Covariant action of a symplectic on a family: sigma -> S sigma S^T,
/// sigma' -> S sigma' S^T, r -> S r, r' -> S r'.
StateFamily transform_family(const StateFamily& f, const Mat2& s);

/// Applies the control instantaneously (covariantly on state and tangent),
/// then evolves for t_after. The QFI is unchanged across the instant of the
/// control.
StateFamily apply_control_then_evolve(const StateFamily& f, const SymplecticControl& c,
                                      double t_after, const ThermalChannel& ch);

}  // namespace gqc
