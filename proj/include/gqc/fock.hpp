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

#include <functional>
#include <utility>

#include <Eigen/Dense>

#include "gqc/thermal.hpp"

// Brute-force verification layer, independent of the Gaussian closed forms:
// truncated Fock-space density matrices, direct Lindblad integration, and
// fidelity-based QFI.
namespace gqc::fock {

/// Truncated Fock-space density matrix (Hermitian, unit trace, PSD up to
/// roundoff). The top 10% of levels must stay below 1e-6 total population
/// for the truncation to count as adequate.
struct FockDensityMatrix {
  Eigen::MatrixXcd mat;

  int dim() const { return static_cast<int>(mat.rows()); }
};

/// Annihilation operator on the truncated space.
Eigen::MatrixXcd annihilation(int dim);

/// Quadrature matrices x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)).
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> quadratures(int dim);

/// Population of the top 10% of Fock levels.
double tail_mass(const FockDensityMatrix& rho);

/// Throws InvalidState if `rho` is not Hermitian (1e-10), has trace outside
/// [1 - 1e-8, 1 + 1e-8], or an eigenvalue below -1e-9.
void require_density_matrix(const FockDensityMatrix& rho);

/// Unitary representing the symplectic e^A on the truncated space:
/// exp(-i/2 r^T H r) with H = -Omega A, so that moments map as
/// sigma -> e^A sigma e^{A^T}.
Eigen::MatrixXcd unitary_from_generator(const Mat2& a, int dim);

/// Fock-space unitary of a SymplecticControl (product of the three Euler
/// factors, phi applied first).
Eigen::MatrixXcd control_unitary(const SymplecticControl& c, int dim);

/// Rotated-squeezed thermal state with the moments of `state` (zero mean
/// required). The squeezer is scaled to reproduce the target CM exactly
/// rather than through any operator-ordering convention. The truncation is
/// doubled (up to 512) whenever the tail-mass guard trips; with enforce_box,
/// normal-form parameters outside y <= 2.5, nu <= 2 are rejected instead.
FockDensityMatrix gaussian_to_fock(const GaussianState& state, int dim = 60,
                                   bool enforce_box = true);

/// First and second moments of a density matrix, in the vacuum-is-identity
/// convention used throughout.
std::pair<Vec2, Mat2> cm_from_density(const FockDensityMatrix& rho);

/// RK4 integration of the thermal Lindbladian
///   rho_dot = (nbar+1) D[a] rho + nbar D[a^dag] rho,
/// D[o] rho = o rho o^dag - 1/2 {o^dag o, rho}, with N = 2*nbar + 1.
FockDensityMatrix lindblad_evolve(const FockDensityMatrix& rho, double t, const ThermalChannel& ch,
                                  double dt = 5e-3);

/// Uhlmann fidelity F = || sqrt(rho) sqrt(tau) ||_1 via Hermitian
/// eigendecompositions; eigenvalues are clamped at zero before the square
/// roots.
double fidelity(const FockDensityMatrix& rho, const FockDensityMatrix& tau);

/// Fidelity-based QFI at theta_bar: 8 (1 - F[rho(theta_bar),
/// rho(theta_bar + eps)]) / eps^2, two-point Richardson over {eps, eps/2}.
/// The default eps keeps 1 - F safely above the fidelity noise floor
/// (smaller steps lose more to cancellation than they gain in truncation).
double fidelity_qfi(const std::function<FockDensityMatrix(double)>& family_builder,
                    double theta_bar, double eps = 1e-2);

}  // namespace gqc::fock
