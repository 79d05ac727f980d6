// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "doctest.h"
#include "edgegap/edgelaws.hpp"
#include "edgegap/error.hpp"
#include "edgegap/fredholm.hpp"
#include "edgegap/quad.hpp"
#include "edgegap/specfun.hpp"
#include "edgegap/transcendents.hpp"

using namespace edgegap;
using namespace edgegap::fredholm;
using specfun::airy_ai;
using specfun::airy_ai_prime;

namespace {

double det(const KernelOperator& op, double xi, int m = 80) { return fredholm_det(op, xi, discretize(op, m)); }

}  // namespace

TEST_CASE("soft kernel values") {
  const auto op = k_soft(-5.0);
  CHECK(std::abs(kernel_eval(op, 0.0, 0.0) - 0.066987483779664) < 1e-13);
  CHECK(std::abs(kernel_eval(op, 0.0, 0.0) - airy_ai_prime(0.0) * airy_ai_prime(0.0)) < 1e-15);
  // Integral form int_0^inf Ai(x+t) Ai(y+t) dt, including both sides of the
  // diagonal switch.
  auto integral = [](double x, double y) {
    return quad::composite_integral([&](double t) { return airy_ai(x + t) * airy_ai(y + t); }, 0.0, 30.0);
  };
  CHECK(std::abs(kernel_eval(op, 0.3, 1.1) - integral(0.3, 1.1)) < 1e-9);
  CHECK(kernel_eval(op, 0.3, 1.1) == kernel_eval(op, 1.1, 0.3));
  for (double d : {0.0, 1e-7, 9e-6, 2e-5, 1e-3}) CHECK(std::abs(kernel_eval(op, 0.7, 0.7 + d) - integral(0.7, 0.7 + d)) < 1e-9);
}

TEST_CASE("hard kernel values against its integral form") {
  for (double a : {0.0, 1.0, 2.5}) {
    const auto op = k_hard(10.0, a);
    for (auto [x, y] : {std::pair{0.5, 3.0}, std::pair{2.0, 2.0}, std::pair{7.0, 7.000001}, std::pair{1e-3, 9.0}}) {
      const double integral = 0.25 * quad::composite_integral(
                                         [&](double t) {
                                           return specfun::bessel_j(a, std::sqrt(t * x)) * specfun::bessel_j(a, std::sqrt(t * y));
                                         },
                                         0.0, 1.0, 0.25);
      CHECK(std::abs(kernel_eval(op, x, y) - integral) < 1e-12);
    }
  }
}

TEST_CASE("V kernels") {
  const auto vs = v_soft(1.0);
  CHECK(kernel_eval(vs, 0.0, 0.0) == airy_ai(1.0));
  CHECK(kernel_eval(vs, 0.2, 0.5) == airy_ai(1.7));
  const auto vh = v_hard(4.0, 1.0);
  CHECK(std::abs(kernel_eval(vh, 0.5, 0.5) - 1.0 * specfun::bessel_j(1.0, std::sqrt(4.0 * 0.25))) < 1e-15);
}

TEST_CASE("kernel_eval rejects points outside the domain") {
  CHECK_THROWS_AS(kernel_eval(k_hard(2.0, 0.0), 3.0, 1.0), DomainError);
  CHECK_THROWS_AS(kernel_eval(k_hard(2.0, 0.0), -0.1, 1.0), DomainError);
  CHECK_THROWS_AS(kernel_eval(v_hard(2.0, 0.0), 0.5, 1.5), DomainError);
  CHECK_THROWS_AS(kernel_eval(k_soft(1.0), 0.0, 2.0), DomainError);
}

TEST_CASE("operator construction errors") {
  CHECK_THROWS_AS(k_hard(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(k_hard(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(v_hard(-1.0, 0.0), DomainError);
}

TEST_CASE("Nystrom matrix is symmetric") {
  for (const auto& op : {k_soft(-3.0), k_hard(5.0, 0.5), v_soft(0.0), v_hard(5.0, 2.0)}) {
    const auto d = nystrom_matrix(op, discretize(op, 60));
    CHECK(linalg::asymmetry(d) == 0.0);
  }
}

TEST_CASE("determinant basics") {
  for (const auto& op : {k_soft(-2.0), k_hard(2.0, 1.0), v_soft(0.0), v_hard(1.0, 0.0)}) CHECK(det(op, 0.0) == 1.0);
  CHECK(std::abs(det(k_soft(6.0), 1.0) - 1.0) < 1e-8);
  CHECK(std::abs(det(k_soft(-2.0), 1.0, 80) - det(k_soft(-2.0), 1.0, 200)) < 1e-9);
  CHECK(std::abs(det(k_soft(-2.0), 1.0) - 0.41322414250512257) < 1e-9);
  const auto op = k_soft(0.0);
  CHECK_THROWS_AS(fredholm_det(op, 2.5, discretize(op, 20)), DomainError);
  CHECK_THROWS_AS(fredholm_det(op, 0.5, discretize(k_soft(1.0), 20)), DomainError);
  CHECK_THROWS_AS(fredholm_det(op, 0.5, quad::gauss_legendre(20)), DomainError);
}

TEST_CASE("monotonicity in s") {
  for (double xi : {0.3, 1.0}) {
    double prev = 0.0;
    for (double s = -6.0; s <= 3.0; s += 0.5) {
      const double d = det(k_soft(s), xi);
      CHECK(d > prev);
      prev = d;
    }
    prev = 2.0;
    for (double s = 0.25; s <= 30.0; s *= 1.6) {
      const double d = det(k_hard(s, 1.0), xi);
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("factorization into V determinants") {
  for (double s : {-4.0, -2.0, 0.0, 2.0})
    for (double xi : {0.25, 0.5, 1.0}) {
      const double lhs = det(k_soft(s), xi);
      const double rhs = det(v_soft(s), std::sqrt(xi)) * det(v_soft(s), -std::sqrt(xi));
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  for (double a : {0.0, 1.0, 2.0})
    for (double s : {0.5, 2.0, 10.0})
      for (double xi : {0.25, 0.5, 1.0}) {
        const double lhs = det(k_hard(s, a), xi);
        const double rhs = det(v_hard(s, a), std::sqrt(xi)) * det(v_hard(s, a), -std::sqrt(xi));
        CHECK(std::abs(lhs - rhs) < 1e-8);
      }
}

TEST_CASE("self-convergence in the quadrature order") {
  double worst = 0.0;
  for (double s = -8.0; s <= 6.0; s += 1.0)
    for (double xi : {0.25, 1.0}) worst = std::max(worst, std::abs(det(k_soft(s), xi, 80) - det(k_soft(s), xi, 160)));
  for (double a : {0.0, 2.0, 4.0})
    for (double s : {0.1, 1.0, 10.0, 100.0, 400.0})
      for (double xi : {0.25, 1.0})
        worst = std::max(worst, std::abs(det(k_hard(s, a), xi, 80) - det(k_hard(s, a), xi, 160)));
  CHECK(worst < 1e-9);
}

TEST_CASE("tail integrals") {
  const std::vector<double> ys{-30.0, -2.0, 0.0, 1.5, 12.0};
  const auto ai = airy_cumulative(ys);
  CHECK(std::abs(ai[1] - (2.0 / 3.0 - quad::composite_integral(airy_ai, -2.0, 0.0))) < 1e-13);
  CHECK(std::abs(ai[2] - 2.0 / 3.0) < 1e-14);
  CHECK(std::abs(ai[3] - (2.0 / 3.0 + quad::composite_integral(airy_ai, 0.0, 1.5))) < 1e-13);
  CHECK(std::abs(ai[4] - 1.0) < 1e-12);
  CHECK(std::abs(ai[0] - (2.0 / 3.0 - quad::composite_integral(airy_ai, -30.0, 0.0, 0.5))) < 1e-12);
  const std::vector<double> ts{0.0, 0.5, 4.0, 40.0};
  for (double a : {-0.5, 0.0, 1.0, 3.0}) {
    const auto bj = bessel_cumulative(a, ts);
    CHECK(bj[0] == 0.0);
    for (std::size_t i = 1; i < ts.size(); ++i) {
      const double want = a < 0 ? bj[i] : quad::composite_integral([&](double u) { return specfun::bessel_j(a, u); }, 0.0, ts[i], 0.5);
      CHECK(std::abs(bj[i] - want) < 1e-12);
    }
  }
  // int_0^x J_{-1/2} = sqrt(2/pi) * 2 * FresnelC-type; check the derivative instead.
  const double h = 1e-4;
  const std::vector<double> pts{2.0 - h, 2.0 + h};
  const auto bm = bessel_cumulative(-0.5, pts);
  CHECK(std::abs((bm[1] - bm[0]) / (2 * h) - specfun::bessel_j(-0.5, 2.0)) < 1e-7);
}

TEST_CASE("rank-one augmentation") {
  const auto soft = k_soft(0.0);
  const auto rule = discretize(soft, 80);
  CHECK(fredholm_det_rank_one(soft, soft_augmentation(), 0.0, rule) == 1.0);
  // xi = 1: E2 exp(-mu).
  const double got = fredholm_det_rank_one(soft, soft_augmentation(), 1.0, rule);
  const double want = fredholm_det(soft, 1.0, rule) * std::exp(-transcendents::mu_soft(0.0, 1.0).value);
  CHECK(std::abs(got - want) < 1e-7);

  const auto hard = k_hard(1.0, 0.0);
  const auto hrule = discretize(hard, 80);
  const double mu = transcendents::mu_hard(1.0, 0.0, 1.0).value;
  const double hgot = fredholm_det_rank_one(hard, hard_augmentation(0.0), 1.0, hrule);
  const double hwant = fredholm_det(hard, 1.0, hrule) * (std::cosh(mu) - std::sinh(mu));
  CHECK(std::abs(hgot - hwant) < 1e-7);
  CHECK_THROWS_AS(fredholm_det_rank_one(v_soft(0.0), soft_augmentation(), 0.5, discretize(v_soft(0.0))), DomainError);
}

TEST_CASE("resolvent at the endpoint") {
  const auto op = k_soft(4.0);
  const auto rule = discretize(op, 80);
  auto phi = [](double x) { return airy_ai(x); };
  CHECK(resolvent_at_endpoint(op, phi, 0.0, rule, 4.0) == airy_ai(4.0));
  CHECK(std::abs(resolvent_at_endpoint(op, phi, 1.0, rule, 4.0) / airy_ai(4.0) - 1.0) < 1e-4);
  // s = -1, xi = 1/2: Painleve II residual of the endpoint value.
  CHECK(transcendents::painleve2_residual(-1.0, 0.5) < 1e-6);
  CHECK_THROWS_AS(resolvent_at_endpoint(v_soft(0.0), phi, 0.5, discretize(v_soft(0.0)), 0.0), DomainError);
}

TEST_CASE("Resolvent interpolation reproduces node values") {
  const auto op = k_hard(3.0, 1.0);
  const auto rule = discretize(op, 40);
  const Resolvent r(op, 0.8, rule);
  CHECK(r.determinant() == doctest::Approx(fredholm_det(op, 0.8, rule)).epsilon(1e-14));
  CHECK(r.min_abs_pivot() > kSingularPivot);
  std::vector<double> phi(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) phi[i] = std::cos(rule.nodes[i]);
  const auto sol = r.solve(phi);
  for (std::size_t i : {0u, 7u, 39u}) {
    CHECK(std::abs(r.interpolate(rule.nodes[i], phi[i], sol) - sol[i]) < 1e-12);
  }
  CHECK_THROWS_AS(r.solve(std::vector<double>(3, 1.0)), DomainError);
}
