// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "doctest.h"
#include "edgegap/error.hpp"
#include "edgegap/fredholm.hpp"
#include "edgegap/quad.hpp"
#include "edgegap/specfun.hpp"
#include "edgegap/transcendents.hpp"

using namespace edgegap;
using namespace edgegap::transcendents;

namespace {

double df_ratio_soft(double s, double xi) {
  const auto v = fredholm::v_soft(s);
  const auto rule = fredholm::discretize(v);
  return fredholm::fredholm_det(v, std::sqrt(xi), rule) / fredholm::fredholm_det(v, -std::sqrt(xi), rule);
}

double df_ratio_hard(double s, double a, double xi) {
  const auto v = fredholm::v_hard(s, a);
  const auto rule = fredholm::discretize(v);
  return fredholm::fredholm_det(v, std::sqrt(xi), rule) / fredholm::fredholm_det(v, -std::sqrt(xi), rule);
}

}  // namespace

TEST_CASE("q_soft") {
  CHECK(q_soft(-1.0, 0.0) == 0.0);
  CHECK(std::abs(q_soft(6.0, 1.0) / specfun::airy_ai(6.0) - 1.0) < 1e-6);
  CHECK(painleve2_residual(-2.0, 1.0) < 1e-6);
  for (double xi : {0.25, 0.5, 1.0}) {
    CHECK(std::abs(q_soft(6.0, xi) / (std::sqrt(xi) * specfun::airy_ai(6.0)) - 1.0) < 1e-4);
    CHECK(q_soft(0.0, xi) > 0.0);
  }
  // Hastings-McLeod: q ~ sqrt(-s/2) as s -> -inf.
  CHECK(std::abs(q_soft(-8.0, 1.0) / std::sqrt(4.0) - 1.0) < 0.02);
  CHECK_THROWS_AS(q_soft(0.0, 2.5), DomainError);
  CHECK_THROWS_AS(q_soft(0.0, -0.1), DomainError);
}

TEST_CASE("Painleve II residual over the box") {
  for (double xi : {0.25, 0.5, 1.0}) {
    double worst = 0.0;
    for (double t = -6.0; t <= 4.0 + 1e-9; t += 0.25) worst = std::max(worst, painleve2_residual(t, xi));
    CHECK(worst < 1e-5);
  }
}

TEST_CASE("q_hard") {
  CHECK(q_hard(2.0, 1.0, 0.0) == 0.0);
  CHECK(std::abs(q_hard(1e-4, 0.0, 1.0) - 1.0) < 1e-3);
  CHECK(hard_residual(4.0, 0.0, 1.0) < 1e-5);
  for (double a : {0.0, 1.0, 2.0})
    for (double xi : {0.5, 1.0}) {
      const double t = 1e-4;
      const double ratio = q_hard(t, a, xi) * std::pow(2.0, a) * specfun::gamma_fn(1.0 + a) / (std::sqrt(xi) * std::pow(t, a / 2.0));
      CHECK(std::abs(ratio - 1.0) < 1e-3);
    }
  CHECK_THROWS_AS(q_hard(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(q_hard(1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(hard_residual(0.015, 0.0, 1.0), DomainError);
}

TEST_CASE("hard residual over the box") {
  for (double a : {0.0, 1.0, 2.0})
    for (double xi : {0.5, 1.0}) {
      double worst = 0.0;
      for (double t : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 35.0, 50.0}) worst = std::max(worst, hard_residual(t, a, xi));
      CHECK(worst < 1e-4);
    }
}

TEST_CASE("mu_soft") {
  // The tail at s = 8 is ~ int_8^inf Ai = 1.67e-8, not below 1e-8.
  CHECK(std::abs(mu_soft(8.0, 1.0).value - quad::composite_integral(specfun::airy_ai, 8.0, 40.0)) < 1e-12);
  CHECK(std::abs(mu_soft(8.0, 1.0).value) < 2e-8);
  CHECK(std::abs(mu_soft(8.0, 0.3).value) < 1e-8);
  CHECK(mu_soft(0.0, 0.0).value == 0.0);
  CHECK(std::abs(std::exp(-mu_soft(0.0, 1.0).value) - df_ratio_soft(0.0, 1.0)) < 1e-6);
  for (double s : {-4.0, -2.0, 0.0, 2.0})
    for (double xi : {0.25, 0.5, 1.0}) {
      const auto mu = mu_soft(s, xi);
      CHECK(mu.s == s);
      CHECK(mu.xi == xi);
      CHECK(mu.value >= 0.0);
      CHECK(std::abs(std::exp(-mu.value) - df_ratio_soft(s, xi)) < 1e-6);
    }
  double prev = 1e300;
  for (double s = -6.0; s <= 6.0; s += 0.5) {
    const double v = mu_soft(s, 1.0).value;
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("mu_hard") {
  CHECK(std::abs(mu_hard(1e-8, 0.0, 1.0).value) < 1e-3);
  CHECK(std::abs(mu_hard(1e-8, 1.0, 1.0).value) < 1e-8);
  CHECK(mu_hard(2.0, 1.0, 0.0).value == 0.0);
  CHECK(std::abs(std::exp(-mu_hard(1.0, 0.0, 1.0).value) - df_ratio_hard(1.0, 0.0, 1.0)) < 1e-6);
  for (double a : {0.0, 1.0, 2.0})
    for (double s : {0.5, 2.0, 10.0})
      for (double xi : {0.25, 0.5, 1.0}) {
        const double v = mu_hard(s, a, xi).value;
        CHECK(v >= 0.0);
        CHECK(std::abs(std::exp(-v) - df_ratio_hard(s, a, xi)) < 1e-6);
      }
  double prev = -1.0;
  for (double s = 0.25; s <= 40.0; s *= 1.5) {
    const double v = mu_hard(s, 1.0, 1.0).value;
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("log-gap exponents reproduce the determinant") {
  for (double s : {-3.0, 0.0, 2.0}) {
    const auto op = fredholm::k_soft(s);
    CHECK(std::abs(std::exp(-soft_log_gap_exponent(s, 0.7)) - fredholm::fredholm_det(op, 0.7, fredholm::discretize(op))) < 1e-8);
  }
  for (double s : {0.5, 6.0}) {
    const auto op = fredholm::k_hard(s, 1.5);
    CHECK(std::abs(std::exp(-hard_log_gap_exponent(s, 1.5, 0.7)) - fredholm::fredholm_det(op, 0.7, fredholm::discretize(op))) < 1e-8);
  }
}

TEST_CASE("trace") {
  std::vector<double> grid;
  for (double t = -6.0; t <= 4.0 + 1e-9; t += 0.5) grid.push_back(t);
  const auto tr = trace(Soft{}, 1.0, grid);
  REQUIRE(tr.values.size() == grid.size());
  double worst = 0.0;
  for (double r : tr.residuals) worst = std::max(worst, r);
  CHECK(worst < 1e-5);
  CHECK(std::abs(tr.values.back() / specfun::airy_ai(4.0) - 1.0) < 1e-2);
  for (std::size_t i = 0; i < grid.size(); i += 5) CHECK(std::abs(tr.mu[i] - mu_soft(grid[i], 1.0).value) < 1e-9);

  const auto zero = trace(Soft{}, 0.0, grid);
  for (double q : zero.values) CHECK(q == 0.0);

  const std::vector<double> hgrid{1e-4, 0.01, 0.5, 3.0, 12.0};
  const auto ht = trace(Hard{0.0}, 1.0, hgrid);
  CHECK(std::abs(ht.values.front() - 1.0) < 1e-3);
  CHECK(ht.residuals[0] == 0.0);
  for (std::size_t i = 0; i < hgrid.size(); ++i) CHECK(std::abs(ht.mu[i] - mu_hard(hgrid[i], 0.0, 1.0).value) < 1e-9);

  CHECK_THROWS_AS(trace(Soft{}, 1.0, std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(trace(Soft{}, 1.0, std::vector<double>{1.0, 0.0}), DomainError);
}

TEST_CASE("coupled systems") {
  const std::vector<double> soft_grid{-2.0, -1.0, 0.0, 1.0, 2.0, 3.0, 4.0};
  CHECK(coupled_system_check(Soft{}, 0.0, soft_grid) == 0.0);
  CHECK(coupled_system_check(Soft{}, 1.0, soft_grid) < 1e-5);
  CHECK(coupled_system_check(Soft{}, 0.5, soft_grid) < 1e-5);
  const std::vector<double> hard_grid{0.5, 1.0, 4.0, 10.0};
  CHECK(coupled_system_check(Hard{1.0}, 1.0, hard_grid) < 1e-5);
  CHECK(coupled_system_check(Hard{0.0}, 0.5, hard_grid) < 1e-5);
  const auto far = coupled_state(Soft{}, mu_soft(8.0, 0.6).value, 0.6);
  CHECK(std::abs(far.u_eps) < 1e-6);
  CHECK(std::abs(far.q_eps - std::sqrt(0.6)) < 1e-6);
  const auto zero = coupled_state(Hard{2.0}, 0.0, 0.0);
  CHECK(zero.u_eps == 0.0);
  CHECK(zero.q_eps == 0.0);
  CHECK_THROWS_AS(coupled_system_check(Soft{}, 1.5, soft_grid), DomainError);
}
