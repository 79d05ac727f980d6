// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <variant>
#include <vector>

#include "edgegap/quad.hpp"

namespace edgegap::transcendents {

/// Discretization knobs shared by every Fredholm and transcendent evaluation.
struct Settings {
  int quad_order = quad::kDefaultOrder;
  double truncation = quad::kDefaultTruncation;
};

struct Soft {};
struct Hard {
  double a;
};
using Regime = std::variant<Soft, Hard>;

struct MuValue {
  double s;
  double xi;
  double value;
};

struct TranscendentTrace {
  Regime regime;
  double xi;
  std::vector<double> grid;
  std::vector<double> values;     // q(t; xi) or q~(t; a; xi)
  std::vector<double> residuals;  // ODE defect, 0 where the stencil does not fit
  std::vector<double> mu;         // mu(t) soft: int_t^inf q; hard: (1/2) int_0^t q/sqrt
};

// The transcendents are endpoint values of resolvents, e.g.
// q(s; xi) = [(I - xi K^soft_(s,inf))^{-1} sqrt(xi) Ai](s); the ODEs only
// validate. xi in [0, 2].
double q_soft(double s, double xi, const Settings& settings = {});
double q_hard(double s, double a, double xi, const Settings& settings = {});

/// mu(s; xi) = int_s^inf q(t; xi) dt.
MuValue mu_soft(double s, double xi, const Settings& settings = {});
/// mu~(s; a; xi) = (1/2) int_0^s q~(t; a; xi) t^{-1/2} dt.
MuValue mu_hard(double s, double a, double xi, const Settings& settings = {});

/// int_s^inf (t - s) q(t; xi)^2 dt, the exponent of the Painleve form of E_2^soft.
double soft_log_gap_exponent(double s, double xi, const Settings& settings = {});
/// (1/4) int_0^s log(s/t) q~(t; a; xi)^2 dt, the hard-edge analogue.
double hard_log_gap_exponent(double s, double a, double xi, const Settings& settings = {});

constexpr double kStencilStep = 1e-2;

/// |q'' - t q - 2 q^3| at t, q'' from a five-point stencil.
double painleve2_residual(double t, double xi, const Settings& settings = {},
                          double h = kStencilStep);

/// Defect of t (q^2 - 1)(t q')' = q (t q')^2 + (t - a^2) q / 4 + t q^3 (q^2 - 2) / 4.
double hard_residual(double t, double a, double xi, const Settings& settings = {},
                     double h = kStencilStep);

/// Samples q (and mu, residuals) on an increasing grid.
TranscendentTrace trace(const Regime& regime, double xi, std::span<const double> grid,
                        const Settings& settings = {});

/// u_eps and q_eps from their closed forms in mu; see coupled_system_check.
struct CoupledState {
  double u_eps;
  double q_eps;
};
CoupledState coupled_state(const Regime& regime, double mu, double xi);

/// Maximum defect over the grid of
///   soft: u' = -q q_eps,             q_eps' = q (1 - u)
///   hard: sqrt(s) u' = q q_eps / 4,  sqrt(s) q_eps' = -q (1 - u)
/// with derivatives by five-point stencils in s. xi in [0, 1].
double coupled_system_check(const Regime& regime, double xi, std::span<const double> s_grid,
                            const Settings& settings = {}, double h = kStencilStep);

}  // namespace edgegap::transcendents
