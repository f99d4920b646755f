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

#include <Eigen/Dense>

#include "gqc/errors.hpp"

namespace gqc {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

namespace tol {
/// Required symmetry of covariance matrices and tangents.
inline constexpr double kSymmetry = 1e-12;
/// Accepted defect of S Omega S^T = Omega.
inline constexpr double kSymplectic = 1e-9;
/// Det sigma >= 1 - kCmDet is accepted and clamped to the physical boundary
/// (absorbs drift from ODE integration).
inline constexpr double kCmDet = 1e-9;
/// States with purity >= 1 - kPure are treated as pure.
inline constexpr double kPure = 1e-12;
}  // namespace tol

/// One bosonic mode: first-moment vector and 2x2 covariance matrix,
/// dimensionless quadratures with vacuum = identity.
struct GaussianState {
  Vec2 mean = Vec2::Zero();
  Mat2 cov = Mat2::Identity();
};

/// Instantaneous Gaussian unitary in Euler form. `phi` is the rotation
/// applied to the state first, then the squeezer diag(z, 1/z), then the
/// rotation `chi` (which no figure of merit in this library depends on).
struct SymplecticControl {
  double phi = 0.0;
  double z = 1.0;
  double chi = 0.0;
};

/// Normal form of a single-mode CM: sigma = nu R_theta diag(y^2, 1/y^2)
/// R_{-theta} with nu >= 1 and the canonical branch y >= 1.
struct NormalForm {
  double nu = 1.0;
  double y = 1.0;
  double theta = 0.0;
};

/// The single-mode symplectic form Omega = [[0, 1], [-1, 0]].
Mat2 symplectic_form();

/// Wraps an angle into [0, 2*pi).
double wrap_angle(double a);

/// R_theta = [[cos, sin], [-sin, cos]]; satisfies R Omega = Omega R and
/// R R^T = 1.
Mat2 rotation(double theta);

/// Max-abs defect of S Omega S^T = Omega.
double symplectic_defect(const Mat2& s);

/// Throws InvalidMatrix unless `s` is symplectic within tol::kSymplectic.
void require_symplectic(const Mat2& s);

/// Throws UnphysicalState/InvalidMatrix unless `sigma` is a valid CM
/// (symmetric, positive trace, Det >= 1 - tol::kCmDet).
void require_valid_cm(const Mat2& sigma);

/// S = R_chi * diag(z, 1/z) * R_phi. Throws InvalidControl for z <= 0.
Mat2 compose_control(const SymplecticControl& c);

/// Inverse of compose_control on the canonical branch z >= 1; at z = 1 the
/// rotation is assigned to phi and chi = 0. Throws InvalidMatrix for
/// non-symplectic input.
SymplecticControl decompose_symplectic(const Mat2& s);

/// sigma = nu R_theta diag(y^2, 1/y^2) R_{-theta}.
Mat2 cm_from_normal_form(const NormalForm& nf);

/// Williamson-style normal form of a valid single-mode CM; canonical branch
/// y >= 1, theta in [0, pi), theta = 0 when y = 1.
NormalForm normal_form(const Mat2& sigma);

/// sigma -> S sigma S^T, r -> S r.
GaussianState apply_symplectic(const GaussianState& state, const Mat2& s);

/// mu = 1 / sqrt(Det sigma), in (0, 1].
double purity(const Mat2& sigma);

}  // namespace gqc
