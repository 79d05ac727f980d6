// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "edgegap/error.hpp"
#include "edgegap/quad.hpp"
#include "edgegap/specfun.hpp"

using namespace edgegap::quad;
using edgegap::DomainError;

TEST_CASE("two-point rule") {
  const auto r = gauss_legendre(2);
  REQUIRE(r.size() == 2);
  CHECK(r.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(r.integrate([](double x) { return x * x; }) - 2.0 / 3.0) < 1e-15);
}

TEST_CASE("rule invariants for every order") {
  for (int m : {2, 3, 7, 40, 80, 160, 511, 512}) {
    const auto r = gauss_legendre(m);
    CHECK(r.size() == static_cast<std::size_t>(m));
    CHECK(std::abs(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) - 2.0) < 1e-13);
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(r.weights[i] > 0.0);
      CHECK(r.nodes[i] > -1.0);
      CHECK(r.nodes[i] < 1.0);
      if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
    }
  }
}

TEST_CASE("polynomial exactness to degree 2m - 1") {
  for (int m : {3, 8, 20}) {
    const auto r = gauss_legendre(m);
    for (int d = 0; d <= 2 * m - 1; ++d) {
      const double got = r.integrate([d](double x) { return std::pow(x, d); });
      const double want = d % 2 ? 0.0 : 2.0 / (d + 1);
      CHECK(std::abs(got - want) < 1e-13);
    }
  }
}

TEST_CASE("exponential integral") {
  const auto r = gauss_legendre(20);
  CHECK(std::abs(r.integrate([](double x) { return std::exp(x); }) - (std::exp(1.0) - std::exp(-1.0))) < 1e-14);
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(gauss_legendre(1), DomainError);
  CHECK_THROWS_AS(gauss_legendre(513), DomainError);
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("affine map onto (0, 2)") {
  const auto ref = gauss_legendre(9);
  const auto r = map_rule(ref, Finite{0.0, 2.0});
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(r.nodes[i] == doctest::Approx(1.0 + ref.nodes[i]).epsilon(1e-15));
    CHECK(r.weights[i] == doctest::Approx(ref.weights[i]).epsilon(1e-15));
  }
  const auto r2 = map_rule(ref, Finite{-3.0, 4.5});
  CHECK(std::abs(std::accumulate(r2.weights.begin(), r2.weights.end(), 0.0) - 7.5) < 1e-13);
  for (double x : r2.nodes) {
    CHECK(x > -3.0);
    CHECK(x < 4.5);
  }
}

TEST_CASE("truncated semi-infinite map integrates Ai") {
  const auto r = map_rule(gauss_legendre(60), SemiInfinite{0.0, 25.0});
  CHECK(std::abs(r.integrate(edgegap::specfun::airy_ai) - 1.0 / 3.0) < 1e-10);
  for (double x : r.nodes) {
    CHECK(x > 0.0);
    CHECK(x < 25.0);
  }
}

TEST_CASE("semi-infinite tail from s = -4 against a refined trapezoid oracle") {
  const auto r = map_rule(gauss_legendre(80), SemiInfinite{-4.0, 30.0});
  const double got = r.integrate(edgegap::specfun::airy_ai);
  // Richardson-extrapolated trapezoid rule on (-4, 26).
  auto trap = [](int n) {
    const double h = 30.0 / n;
    double sum = 0.5 * (edgegap::specfun::airy_ai(-4.0) + edgegap::specfun::airy_ai(26.0));
    for (int i = 1; i < n; ++i) sum += edgegap::specfun::airy_ai(-4.0 + i * h);
    return sum * h;
  };
  const double t1 = trap(4000), t2 = trap(8000);
  const double oracle = t2 + (t2 - t1) / 3.0;
  CHECK(std::abs(got - oracle) < 1e-9);
}

TEST_CASE("square-root map") {
  const auto r = map_rule(gauss_legendre(40), SquareRoot{0.0, 4.0});
  CHECK(std::abs(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) - 4.0) < 1e-13);
  // int_0^4 x^{-1/2} dx = 4, smooth after the substitution.
  CHECK(std::abs(r.integrate([](double x) { return 1.0 / std::sqrt(x); }) - 4.0) < 1e-13);
  for (double x : r.nodes) {
    CHECK(x > 0.0);
    CHECK(x < 4.0);
  }
}

TEST_CASE("map errors") {
  const auto ref = gauss_legendre(4);
  CHECK_THROWS_AS(map_rule(ref, Finite{1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(map_rule(ref, Finite{2.0, 1.0}), DomainError);
  CHECK_THROWS_AS(map_rule(ref, SemiInfinite{0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(map_rule(ref, SemiInfinite{std::numeric_limits<double>::infinity(), 1.0}), DomainError);
  CHECK_THROWS_AS(map_rule(ref, SquareRoot{0.0, 0.0}), DomainError);
  const auto mapped = map_rule(ref, Finite{0.0, 1.0});
  CHECK_THROWS_AS(map_rule(mapped, Finite{0.0, 1.0}), DomainError);
}

TEST_CASE("soft truncation length") {
  CHECK(soft_truncation(0.0) == 25.0);
  CHECK(soft_truncation(-20.0) == 32.0);
  CHECK(soft_truncation(-13.0) == 25.0);
  CHECK(soft_truncation(5.0, 30.0) == 30.0);
}

TEST_CASE("cached rules are shared and equal to fresh ones") {
  const auto& a = cached_gauss_legendre(33);
  const auto& b = cached_gauss_legendre(33);
  CHECK(&a == &b);
  CHECK(a.nodes == gauss_legendre(33).nodes);
}

TEST_CASE("composite integral") {
  CHECK(std::abs(composite_integral([](double x) { return std::cos(x); }, 0.0, 10.0) - std::sin(10.0)) < 1e-14);
  CHECK(composite_integral([](double x) { return x; }, 3.0, 3.0) == 0.0);
}
