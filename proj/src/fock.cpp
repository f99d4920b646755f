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

#include "gqc/fock.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace gqc::fock {

namespace {

using Eigen::MatrixXcd;
using std::complex;

constexpr int kMaxDim = 512;
constexpr double kTailGuard = 1e-6;

MatrixXcd hermitized(const MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }

// Thermal state of symplectic eigenvalue nu: geometric populations with
// nbar = (nu - 1)/2. Not renormalized after truncation; the lost mass is
// covered by the tail guard.
MatrixXcd thermal_diagonal(double nu, int dim) {
  MatrixXcd rho = MatrixXcd::Zero(dim, dim);
  const double nbar = 0.5 * (nu - 1.0);
  if (nbar < 1e-15) {
    rho(0, 0) = 1.0;
    return rho;
  }
  const double ratio = nbar / (nbar + 1.0);
  double p = 1.0 / (nbar + 1.0);
  for (int n = 0; n < dim; ++n) {
    rho(n, n) = p;
    p *= ratio;
  }
  return rho;
}

// Fock matrix of S(zeta) = exp((zeta a^2 - zeta a^dag^2)/2), real zeta, via
// the parity recurrence. Unlike exponentiating a truncated generator, the
// amplitudes are exact under truncation, which the fidelity oracle needs:
// generator-exponential states are off by ~1e-8 in overlap at dim 60 and
// that error is amplified by the 1/eps^2 of the fidelity QFI.
MatrixXcd squeeze_fock(double zeta, int dim) {
  const double t = std::tanh(zeta);
  const double sech = 1.0 / std::cosh(zeta);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<double> root(dim);
  for (int n = 0; n < dim; ++n) root[n] = std::sqrt(double(n));

  s(0, 0) = std::sqrt(sech);
  for (int m = 2; m < dim; m += 2) s(m, 0) = -t * root[m - 1] / root[m] * s(m - 2, 0);
  for (int n = 1; n < dim; ++n) {
    for (int m = (n % 2); m < dim; m += 2) {
      double v = 0.0;
      if (n >= 2) v += t * root[n - 1] / root[n] * s(m, n - 2);
      if (m >= 1) v += sech * root[m] / root[n] * s(m - 1, n - 1);
      s(m, n) = v;
    }
  }
  return s.cast<complex<double>>();
}

// Phase-space rotation by theta: diag(e^{-i theta (n + 1/2)}).
MatrixXcd rotation_fock(double theta, int dim) {
  MatrixXcd u = MatrixXcd::Zero(dim, dim);
  const complex<double> i(0.0, 1.0);
  for (int n = 0; n < dim; ++n) u(n, n) = std::exp(-i * theta * (n + 0.5));
  return u;
}

// rho_dot for the thermal attenuator, written elementwise: every operator
// involved (a, a^dag, n) only shifts or scales indices, so the right-hand
// side costs O(dim^2) with no matrix products.
void lindblad_rhs(const MatrixXcd& rho, double nbar, MatrixXcd* out) {
  const int dim = static_cast<int>(rho.rows());
  const double down = nbar + 1.0;
  const double up = nbar;
  out->resize(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      complex<double> v = -0.5 * (down * (m + n) + up * (m + n + 2)) * rho(m, n);
      if (m + 1 < dim && n + 1 < dim) {
        v += down * std::sqrt(double(m + 1) * double(n + 1)) * rho(m + 1, n + 1);
      }
      if (m > 0 && n > 0) {
        v += up * std::sqrt(double(m) * double(n)) * rho(m - 1, n - 1);
      }
      (*out)(m, n) = v;
    }
  }
}

}  // namespace

MatrixXcd annihilation(int dim) {
  MatrixXcd a = MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

std::pair<MatrixXcd, MatrixXcd> quadratures(int dim) {
  const MatrixXcd a = annihilation(dim);
  const MatrixXcd ad = a.adjoint();
  const complex<double> i(0.0, 1.0);
  return {(a + ad) / std::sqrt(2.0), (a - ad) / (i * std::sqrt(2.0))};
}

double tail_mass(const FockDensityMatrix& rho) {
  const int dim = rho.dim();
  // at least two levels so parity-sparse states cannot slip through
  const int start = dim - std::max(dim / 10, 2);
  double mass = 0.0;
  for (int n = start; n < dim; ++n) mass += rho.mat(n, n).real();
  return mass;
}

void require_density_matrix(const FockDensityMatrix& rho) {
  if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidState("density matrix is not Hermitian");
  }
  const double tr = rho.mat.trace().real();
  if (std::abs(tr - 1.0) > 1e-8) {
    throw InvalidState("density matrix trace " + std::to_string(tr) + " outside [1 - 1e-8, 1]");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hermitized(rho.mat), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw InvalidState("density matrix has eigenvalue " +
                       std::to_string(es.eigenvalues().minCoeff()));
  }
}

Eigen::MatrixXcd unitary_from_generator(const Mat2& a, int dim) {
  // H = -Omega A is symmetric for A in sp(2, R); the quadratic Hamiltonian
  // (1/2) r^T H r generates r -> e^{Omega H} r = e^A r in the Heisenberg
  // picture, hence sigma -> e^A sigma e^{A^T} on states.
  const Mat2 h = -symplectic_form() * a;
  auto [x, p] = quadratures(dim);
  const MatrixXcd ham =
      0.5 * (h(0, 0) * x * x + h(0, 1) * x * p + h(1, 0) * p * x + h(1, 1) * p * p);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hermitized(ham));
  const complex<double> i(0.0, 1.0);
  const Eigen::VectorXcd phases = (-i * es.eigenvalues().cast<complex<double>>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd control_unitary(const SymplecticControl& c, int dim) {
  if (!(c.z > 0.0)) throw InvalidControl("control squeezing must be positive");
  // diag(z, 1/z) corresponds to S(-ln z) in the squeeze-operator convention
  // of squeeze_fock.
  return rotation_fock(c.chi, dim) * squeeze_fock(-std::log(c.z), dim) *
         rotation_fock(c.phi, dim);
}

FockDensityMatrix gaussian_to_fock(const GaussianState& state, int dim, bool enforce_box) {
  if (state.mean.cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidState("the Fock oracle handles zero-mean states only");
  }
  const NormalForm nf = normal_form(state.cov);
  if (enforce_box && (nf.y > 2.5 || nf.nu > 2.0)) {
    throw TruncationTooSmall("state outside the supported box (y <= 2.5, nu <= 2): y = " +
                             std::to_string(nf.y) + ", nu = " + std::to_string(nf.nu));
  }

  // Rotate-and-squeeze the thermal diagonal: R_theta diag(y, 1/y) maps
  // nu * identity to the target CM exactly, and both factors have exact
  // truncated Fock amplitudes.
  for (int d = dim; d <= kMaxDim; d *= 2) {
    const MatrixXcd u =
        rotation_fock(nf.theta, d) * squeeze_fock(-std::log(nf.y), d);
    FockDensityMatrix rho{hermitized(u * thermal_diagonal(nf.nu, d) * u.adjoint())};
    if (tail_mass(rho) <= kTailGuard) return rho;
  }
  throw TruncationTooSmall("tail-mass guard still tripped at dim = " + std::to_string(kMaxDim));
}

std::pair<Vec2, Mat2> cm_from_density(const FockDensityMatrix& rho) {
  require_density_matrix(rho);
  auto [x, p] = quadratures(rho.dim());

  Vec2 mean;
  mean(0) = (rho.mat * x).trace().real();
  mean(1) = (rho.mat * p).trace().real();

  Mat2 cov;
  cov(0, 0) = (rho.mat * (x * x + x * x)).trace().real() - 2.0 * mean(0) * mean(0);
  cov(1, 1) = (rho.mat * (p * p + p * p)).trace().real() - 2.0 * mean(1) * mean(1);
  cov(0, 1) = (rho.mat * (x * p + p * x)).trace().real() - 2.0 * mean(0) * mean(1);
  cov(1, 0) = cov(0, 1);
  return {mean, cov};
}

FockDensityMatrix lindblad_evolve(const FockDensityMatrix& rho, double t, const ThermalChannel& ch,
                                  double dt) {
  if (!(ch.noise >= 1.0)) throw UnphysicalState("thermal channel requires N >= 1");
  if (!(t >= 0.0)) throw InvalidTime("evolution time must be >= 0");
  if (!(dt > 0.0)) throw InvalidStep("integrator step must be positive");

  const double nbar = 0.5 * (ch.noise - 1.0);
  MatrixXcd state = rho.mat;
  MatrixXcd k1, k2, k3, k4;
  double remaining = t;
  while (remaining > 0.0) {
    const double h = std::min(dt, remaining);
    lindblad_rhs(state, nbar, &k1);
    lindblad_rhs(state + 0.5 * h * k1, nbar, &k2);
    lindblad_rhs(state + 0.5 * h * k2, nbar, &k3);
    lindblad_rhs(state + h * k3, nbar, &k4);
    state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    remaining -= h;
  }

  FockDensityMatrix out{hermitized(state)};
  if (tail_mass(out) > kTailGuard) {
    throw TruncationTooSmall("tail-mass guard tripped during evolution; raise the dimension");
  }
  return out;
}

double fidelity(const FockDensityMatrix& rho, const FockDensityMatrix& tau) {
  if (rho.dim() != tau.dim()) throw InvalidState("fidelity requires equal truncations");

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es_rho(hermitized(rho.mat));
  if (es_rho.eigenvalues().minCoeff() < -1e-9 || !es_rho.eigenvalues().allFinite()) {
    throw InvalidState("first fidelity argument is not PSD within tolerance");
  }
  const MatrixXcd sqrt_rho = es_rho.eigenvectors() *
                             es_rho.eigenvalues().array().max(0.0).sqrt().matrix().asDiagonal() *
                             es_rho.eigenvectors().adjoint();

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es_mid(hermitized(sqrt_rho * tau.mat * sqrt_rho),
                                                  Eigen::EigenvaluesOnly);
  if (es_mid.eigenvalues().minCoeff() < -1e-9) {
    throw InvalidState("second fidelity argument is not PSD within tolerance");
  }
  return es_mid.eigenvalues().array().max(0.0).sqrt().sum();
}

double fidelity_qfi(const std::function<FockDensityMatrix(double)>& family_builder,
                    double theta_bar, double eps) {
  // eps much below 1e-2 pushes 1 - F into the eigensolver noise floor for
  // weakly informative mixed states; the Richardson step handles the
  // truncation side.
  if (!(eps > 0.0)) throw InvalidStep("fidelity_qfi requires eps > 0");
  const FockDensityMatrix at_truth = family_builder(theta_bar);
  const auto estimate = [&](double e) {
    return 8.0 * (1.0 - fidelity(at_truth, family_builder(theta_bar + e))) / (e * e);
  };
  // Two-point Richardson kills the O(eps) error of the one-sided estimate.
  return 2.0 * estimate(0.5 * eps) - estimate(eps);
}

}  // namespace gqc::fock
