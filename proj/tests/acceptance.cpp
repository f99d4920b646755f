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

// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "gqc/control.hpp"
#include "gqc/fock.hpp"

using namespace gqc;
using gqc::testing::random_control;
using gqc::testing::random_mixed_family;
using gqc::testing::uniform;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int index, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", index, name.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void criterion_1_anchors() {
  const double angle_dev = std::abs(controlled_qfi_angle(3.0, 1.0, 0.0, 0.0) - 3200.0 / 81.0);
  double strength_dev = 0.0;
  for (const double y : {1.0, 2.0, 3.0, 10.0}) {
    for (const double noise : {1.0, 2.0}) {
      for (const double tc : {0.0, 0.2, kInf}) {
        strength_dev =
            std::max(strength_dev, std::abs(controlled_qfi_strength(y, noise, tc, 0.0) - 0.5));
      }
    }
  }
  report(1, "closed-form anchors (3200/81 and 1/2 at t = 0)",
         angle_dev <= 1e-12 && strength_dev <= 1e-12,
         "angle dev " + fmt(angle_dev) + ", strength dev " + fmt(strength_dev));
}

void criterion_2_rate_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260810);
  constexpr double kDelta = 1e-5;
  double worst = 0.0;
  double max_purity = 0.0;
  for (int i = 0; i < 500; ++i) {
    const StateFamily f = random_mixed_family(rng);
    const ThermalChannel ch{uniform(rng, 1.0, 4.0)};
    max_purity = std::max(max_purity, purity(f.state.cov));
    const double hi = gaussian_qfi(gqc::testing::evolve_family_signed(f, kDelta, ch)).qfi;
    const double lo = gaussian_qfi(gqc::testing::evolve_family_signed(f, -kDelta, ch)).qfi;
    const double rate = qfi_rate(f, ch);
    worst = std::max(worst, std::abs(rate - (hi - lo) / (2.0 * kDelta)) / std::abs(rate));
  }
  const double elapsed = seconds_since(start);
  report(2, "rate formula vs centered finite difference (500 seeded families)",
         worst <= 1e-6 && max_purity <= 0.99 && elapsed <= 5.0,
         "max rel err " + fmt(worst) + " (tol 1e-6), max purity " + fmt(max_purity) +
             " (cap 0.99), " + fmt(elapsed) + " s (budget 5 s)");
}

void criterion_3_optimizer() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(3);
  double worst_gap = 0.0;
  double worst_chi = 0.0;
  for (int i = 0; i < 100; ++i) {
    const bool angle = i < 50;
    const double y = uniform(rng, 1.0, 5.0);
    const double nu = uniform(rng, 1.0, 2.0);
    const double noise = uniform(rng, 1.0, 3.0);
    const ThermalChannel ch{noise};
    const StateFamily f = angle
                              ? angle_family(y, nu, uniform(rng, 0.0, 2.0 * std::numbers::pi))
                              : strength_family(2.0 * std::log(y), nu);
    const OptimizeResult opt = optimize_control(f, ch);
    const double analytic = angle ? reduced_rate_angle(y, nu, noise, 2.0 / nu)
                                  : reduced_rate_strength(nu, noise, 2.0 / nu);
    worst_gap = std::max(worst_gap, std::abs(opt.rate - analytic));

    for (int k = 0; k < 8; ++k) {
      const SymplecticControl rotated{opt.control.phi, opt.control.z,
                                      2.0 * std::numbers::pi * k / 8.0};
      worst_chi = std::max(worst_chi, std::abs(controlled_rate(f, rotated, ch) - opt.rate));
    }
  }
  const double elapsed = seconds_since(start);
  report(3, "optimizer recovers the analytic optimum (50 angle + 50 strength)",
         worst_gap <= 1e-8 && worst_chi <= 1e-10 && elapsed <= 30.0,
         "max rate gap " + fmt(worst_gap) + " (tol 1e-8), max chi spread " + fmt(worst_chi) +
             " (tol 1e-10), " + fmt(elapsed) + " s (budget 30 s)");
}

void criterion_4_single_control() {
  std::mt19937_64 rng(4);
  double worst_gain = 0.0;
  for (int i = 0; i < 20; ++i) {
    ControlProtocol p;
    if (i < 12) {
      p = {FamilyKind::angle, uniform(rng, 1.5, 4.0), uniform(rng, 0.0, 2.0 * std::numbers::pi),
           uniform(rng, 1.0, 2.5), uniform(rng, 0.0, 0.5), std::nullopt};
    } else {
      // the strength family keeps its structure under the flow only from a
      // t_c = 0 control (see the delayed-control tests for the general case)
      p = {FamilyKind::strength, uniform(rng, 1.5, 4.0), 0.0, uniform(rng, 1.0, 2.5), 0.0,
           std::nullopt};
    }
    const double probe = p.t_c + uniform(rng, 0.1, 1.0);
    worst_gain = std::max(worst_gain, single_control_suffices_check(p, probe).rate_gain);
  }
  report(4, "single optimal control stays optimal (20 seeded protocols)", worst_gain <= 1e-9,
         "max re-optimization gain " + fmt(worst_gain) + " (tol 1e-9)");
}

void criterion_5_dynamics_oracle() {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Mat2 sigma = gqc::testing::random_cm(rng);
    const Vec2 r(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
    const ThermalChannel ch{uniform(rng, 1.0, 5.0)};
    const double t = uniform(rng, 0.0, 3.0);
    const auto [s, v] = ode_integrate(sigma, r, t, ch, 1e-3);
    worst = std::max(worst, (s - evolve_cm(sigma, t, ch)).cwiseAbs().maxCoeff());
    worst = std::max(worst, (v - evolve_mean(r, t, ch)).cwiseAbs().maxCoeff());
  }
  report(5, "closed-form dynamics vs RK4 (200 seeded cases)", worst <= 1e-8,
         "max abs err " + fmt(worst) + " (tol 1e-8)");
}

void criterion_6_fock_oracle() {
  const auto start = std::chrono::steady_clock::now();
  constexpr int kDim = 60;
  double worst_cm = 0.0;
  double worst_qfi = 0.0;
  for (const double y : {1.2, 1.5, 2.0}) {
    for (const double nu : {1.0, 1.2}) {
      for (const double noise : {1.0, 2.0}) {
        const ThermalChannel ch{noise};
        for (const FamilyKind kind : {FamilyKind::angle, FamilyKind::strength}) {
          const double theta_bar = kind == FamilyKind::angle ? 0.4 : 2.0 * std::log(y);
          const auto member = [&](double theta) {
            return kind == FamilyKind::angle ? angle_family(y, nu, theta)
                                             : strength_family(theta, nu);
          };
          for (const double t : {0.0, 0.3, 0.6}) {
            const StateFamily truth = evolve_family(member(theta_bar), t, ch);
            const auto [mean, cov] = fock::cm_from_density(fock::lindblad_evolve(
                fock::gaussian_to_fock(member(theta_bar).state, kDim), t, ch));
            worst_cm = std::max(worst_cm, (cov - truth.state.cov).cwiseAbs().maxCoeff());

            const double brute = fock::fidelity_qfi(
                [&](double theta) {
                  return fock::lindblad_evolve(
                      fock::gaussian_to_fock(member(theta).state, kDim), t, ch);
                },
                theta_bar);
            const double exact = gaussian_qfi(truth).qfi;
            worst_qfi = std::max(worst_qfi, std::abs(brute - exact) / exact);
          }
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  report(6, "Fock oracle equivalence (both families, dim 60)",
         worst_cm <= 1e-5 && worst_qfi <= 1e-3 && elapsed <= 120.0,
         "max CM err " + fmt(worst_cm) + " (tol 1e-5), max QFI rel err " + fmt(worst_qfi) +
             " (tol 1e-3), " + fmt(elapsed) + " s (budget 120 s)");
}

struct PanelResult {
  double continuity = 0.0;
  bool dominance = true;
  bool decay = true;
  double sim_dev = 0.0;
};

PanelResult check_panel(FamilyKind family, double y, double noise) {
  PanelResult res;
  std::vector<double> tcs;
  for (int k = 0; k <= 10; ++k) tcs.push_back(0.05 * k);

  std::vector<double> grid(201);
  for (int i = 0; i < 201; ++i) grid[i] = i / 200.0;

  const auto closed = [&](double tc, double t) {
    return family == FamilyKind::angle ? controlled_qfi_angle(y, noise, tc, t)
                                       : controlled_qfi_strength(y, noise, tc, t);
  };

  // (a) continuity of each curve at its control time
  for (const double tc : tcs) {
    res.continuity = std::max(res.continuity, std::abs(closed(tc, tc) - closed(kInf, tc)));
  }

  // (b) pointwise dominance in t_c, uncontrolled minimal; (c) decay in t
  std::vector<std::vector<double>> curves;
  for (const double tc : tcs) {
    std::vector<double> c;
    for (const double t : grid) c.push_back(closed(tc, t));
    curves.push_back(std::move(c));
  }
  std::vector<double> uncontrolled;
  for (const double t : grid) uncontrolled.push_back(closed(kInf, t));
  for (size_t a = 0; a < curves.size(); ++a) {
    for (size_t i = 0; i < grid.size(); ++i) {
      if (a + 1 < curves.size() && curves[a][i] < curves[a + 1][i] - 1e-12) res.dominance = false;
      if (curves[a][i] < uncontrolled[i] - 1e-12) res.dominance = false;
      if (i > 0 && curves[a][i] > curves[a][i - 1] + 1e-12) res.decay = false;
      if (i > 0 && uncontrolled[i] > uncontrolled[i - 1] + 1e-12) res.decay = false;
    }
  }

  // (d) simulate_protocol against the closed form on the full grid
  for (size_t a = 0; a < tcs.size(); ++a) {
    const ControlProtocol p{family, y, 0.3, noise, tcs[a], std::nullopt};
    const auto sim = simulate_protocol(p, grid);
    for (size_t i = 0; i < grid.size(); ++i) {
      res.sim_dev = std::max(res.sim_dev, std::abs(sim[i].qfi - curves[a][i]));
    }
  }
  return res;
}

void criterion_7_figures() {
  const PanelResult fig2 = check_panel(FamilyKind::angle, 3.0, 1.0);
  const PanelResult fig3 = check_panel(FamilyKind::strength, 10.0, 2.0);
  const bool ok = fig2.continuity <= 1e-12 && fig2.dominance && fig2.decay &&
                  fig2.sim_dev <= 1e-10 && fig3.continuity <= 1e-12 && fig3.dominance &&
                  fig3.decay && fig3.sim_dev <= 1e-10;
  report(7, "figure reproduction (curve-bundle properties)", ok,
         "fig2 upper: continuity " + fmt(fig2.continuity) + ", dominance " +
             (fig2.dominance ? "ok" : "VIOLATED") + ", decay " + (fig2.decay ? "ok" : "VIOLATED") +
             ", |simulate - closed| " + fmt(fig2.sim_dev) + "; fig3 lower: continuity " +
             fmt(fig3.continuity) + ", dominance " + (fig3.dominance ? "ok" : "VIOLATED") +
             ", decay " + (fig3.decay ? "ok" : "VIOLATED") + ", |simulate - closed| " +
             fmt(fig3.sim_dev) +
             (fig3.sim_dev > 1e-10
                  ? " -- the delayed/uncontrolled strength curves omit the purity-term "
                    "information the evolved family acquires; the simulated (true) QFI is "
                    "larger (see README, Known limits)"
                  : ""));
}

void criterion_8_unitary_invariance() {
  std::mt19937_64 rng(8);
  double worst_qfi = 0.0;
  double worst_mean = 0.0;
  for (int i = 0; i < 500; ++i) {
    const StateFamily f = random_mixed_family(rng);
    const Mat2 s = compose_control(random_control(rng));
    const StateFamily moved = transform_family(f, s);
    worst_qfi = std::max(worst_qfi, std::abs(gaussian_qfi(moved).qfi - gaussian_qfi(f).qfi));
    worst_mean = std::max(
        worst_mean, std::abs(gaussian_qfi(moved).term_mean - gaussian_qfi(f).term_mean));
  }
  report(8, "unitary invariance of the QFI and of its first-moment term (500 actions)",
         worst_qfi <= 1e-10 && worst_mean <= 1e-10,
         "max QFI dev " + fmt(worst_qfi) + ", max mean-term dev " + fmt(worst_mean) +
             " (tol 1e-10)");
}

}  // namespace

int main() {
  criterion_1_anchors();
  criterion_2_rate_equivalence();
  criterion_3_optimizer();
  criterion_4_single_control();
  criterion_5_dynamics_oracle();
  criterion_6_fock_oracle();
  criterion_7_figures();
  criterion_8_unitary_invariance();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
