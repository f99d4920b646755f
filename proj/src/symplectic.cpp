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

#include "gqc/symplectic.hpp"

#include <cmath>
#include <numbers>

namespace gqc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Mat2 symmetrized(const Mat2& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

Mat2 symplectic_form() {
  Mat2 omega;
  omega << 0.0, 1.0, -1.0, 0.0;
  return omega;
}

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

Mat2 rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat2 r;
  r << c, s, -s, c;
  return r;
}

double symplectic_defect(const Mat2& s) {
  const Mat2 omega = symplectic_form();
  return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff();
}

void require_symplectic(const Mat2& s) {
  if (!s.allFinite() || symplectic_defect(s) > tol::kSymplectic) {
    throw InvalidMatrix("matrix is not symplectic: |S Omega S^T - Omega| = " +
                        std::to_string(symplectic_defect(s)));
  }
}

void require_valid_cm(const Mat2& sigma) {
  if (!sigma.allFinite()) throw InvalidMatrix("covariance matrix has non-finite entries");
  if (std::abs(sigma(0, 1) - sigma(1, 0)) > tol::kSymmetry) {
    throw InvalidMatrix("covariance matrix is not symmetric");
  }
  if (sigma.trace() <= 0.0) throw UnphysicalState("covariance matrix has non-positive trace");
  if (sigma.determinant() < 1.0 - tol::kCmDet) {
    throw UnphysicalState("covariance matrix violates the uncertainty relation: Det sigma = " +
                          std::to_string(sigma.determinant()));
  }
}

Mat2 compose_control(const SymplecticControl& c) {
  if (!(c.z > 0.0) || !std::isfinite(c.z)) {
    throw InvalidControl("control squeezing must be positive, got z = " + std::to_string(c.z));
  }
  Mat2 squeeze = Mat2::Zero();
  squeeze(0, 0) = c.z;
  squeeze(1, 1) = 1.0 / c.z;
  return rotation(c.chi) * squeeze * rotation(c.phi);
}

SymplecticControl decompose_symplectic(const Mat2& s) {
  require_symplectic(s);

  // S^T S = R_{-phi} diag(z^2, 1/z^2) R_phi kills the chi rotation.
  const Mat2 gram = symmetrized(s.transpose() * s);
  const double half_tr = 0.5 * gram.trace();
  const double disc = std::sqrt(std::max(half_tr * half_tr - 1.0, 0.0));
  const double z = std::sqrt(std::max(half_tr + disc, 1.0));

  SymplecticControl out;
  out.z = z;
  if (z - 1.0 < 1e-12) {
    // Pure rotation: the split is arbitrary, canonical choice chi = 0.
    out.z = 1.0;
    out.phi = wrap_angle(std::atan2(s(0, 1), s(0, 0)));
    out.chi = 0.0;
    return out;
  }

  // Eigenvector of S^T S for z^2 is (cos phi, sin phi); pick the
  // better-conditioned residual column.
  const double lam = z * z;
  Vec2 v1(gram(0, 1), lam - gram(0, 0));
  Vec2 v2(lam - gram(1, 1), gram(0, 1));
  const Vec2 v = (v1.norm() >= v2.norm()) ? v1 : v2;
  out.phi = wrap_angle(std::atan2(v(1), v(0)));

  Mat2 unsqueeze = Mat2::Zero();
  unsqueeze(0, 0) = 1.0 / z;
  unsqueeze(1, 1) = z;
  const Mat2 rchi = s * rotation(-out.phi) * unsqueeze;
  out.chi = wrap_angle(std::atan2(rchi(0, 1), rchi(0, 0)));
  return out;
}

Mat2 cm_from_normal_form(const NormalForm& nf) {
  if (nf.nu < 1.0 - tol::kCmDet) {
    throw UnphysicalState("symplectic eigenvalue must be >= 1, got nu = " + std::to_string(nf.nu));
  }
  if (!(nf.y > 0.0)) throw UnphysicalState("normal-form squeezing must be positive");
  const double nu = std::max(nf.nu, 1.0);
  Mat2 diag = Mat2::Zero();
  diag(0, 0) = nf.y * nf.y;
  diag(1, 1) = 1.0 / (nf.y * nf.y);
  return symmetrized(nu * rotation(nf.theta) * diag * rotation(-nf.theta));
}

NormalForm normal_form(const Mat2& sigma) {
  require_valid_cm(sigma);

  NormalForm nf;
  nf.nu = std::sqrt(std::max(sigma.determinant(), 1.0));
  const Mat2 base = symmetrized(sigma) / nf.nu;  // symmetric, Det = 1

  const double mean = 0.5 * base.trace();
  const double off = base(0, 1);
  const double disc = std::hypot(0.5 * (base(0, 0) - base(1, 1)), off);
  const double lam = mean + disc;
  nf.y = std::sqrt(std::max(lam, 1.0));
  if (disc < 1e-14) {
    nf.y = 1.0;
    nf.theta = 0.0;
    return nf;
  }

  // Eigenvector for y^2 is R_theta e1 = (cos theta, -sin theta).
  Vec2 v1(off, lam - base(0, 0));
  Vec2 v2(lam - base(1, 1), off);
  const Vec2 u = (v1.norm() >= v2.norm()) ? v1 : v2;
  double theta = std::atan2(-u(1), u(0));
  // theta and theta + pi give the same CM; canonical branch [0, pi).
  theta = std::fmod(theta, std::numbers::pi);
  if (theta < 0.0) theta += std::numbers::pi;
  nf.theta = theta;
  return nf;
}

GaussianState apply_symplectic(const GaussianState& state, const Mat2& s) {
  require_symplectic(s);
  GaussianState out;
  out.mean = s * state.mean;
  out.cov = symmetrized(s * state.cov * s.transpose());
  return out;
}

double purity(const Mat2& sigma) {
  require_valid_cm(sigma);
  return 1.0 / std::sqrt(std::max(sigma.determinant(), 1.0));
}

}  // namespace gqc
