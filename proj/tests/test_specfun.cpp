// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "edgegap/error.hpp"
#include "edgegap/specfun.hpp"

#ifdef EDGEGAP_BOOST_ORACLE
#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#endif

using namespace edgegap::specfun;
using edgegap::DomainError;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// Maclaurin series of Ai, adequate for |x| <= 3.
double ai_series(double x) {
  const double c1 = 0.355028053887817239;
  const double c2 = 0.258819403792806798;
  double f = 1.0, g = x, sum_f = 1.0, sum_g = x;
  for (int k = 1; k < 80; ++k) {
    f *= x * x * x / ((3.0 * k - 1.0) * (3.0 * k));
    g *= x * x * x / ((3.0 * k) * (3.0 * k + 1.0));
    sum_f += f;
    sum_g += g;
  }
  return c1 * sum_f - c2 * sum_g;
}

}  // namespace

TEST_CASE("airy_ai closed forms and decay") {
  CHECK(airy_ai(0.0) == doctest::Approx(0.3550280538878172).epsilon(1e-15));
  CHECK(airy_ai(0.0) ==
        doctest::Approx(std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0)).epsilon(1e-15));
  CHECK(airy_ai(10.0) < 1e-9);
  CHECK(airy_ai(10.0) > 0.0);
  const double x = 10.0;
  const double lead = std::exp(-2.0 * std::pow(x, 1.5) / 3.0) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(x, 0.25));
  CHECK(rel(airy_ai(x), lead) < 0.01);
}

TEST_CASE("airy_ai first zero by bisection on the series") {
  double lo = -2.4, hi = -2.3;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (ai_series(mid) > 0 ? hi : lo) = mid;
  }
  CHECK(std::abs(lo - (-2.338107410459767)) < 1e-12);
  CHECK(std::abs(airy_ai(lo)) < 1e-10);
  CHECK(std::abs(airy_ai(-2.338107410459767)) < 1e-10);
}

TEST_CASE("airy_ai matches the Maclaurin series near the origin") {
  for (double x = -3.0; x <= 3.0; x += 0.37) CHECK(std::abs(airy_ai(x) - ai_series(x)) < 1e-13);
}

TEST_CASE("airy_ai_prime") {
  CHECK(airy_ai_prime(0.0) == doctest::Approx(-0.2588194037928068).epsilon(1e-15));
  const double h = 1e-5;
  CHECK(std::abs(airy_ai_prime(5.0) - (airy_ai(5.0 + h) - airy_ai(5.0 - h)) / (2 * h)) < 1e-8);
  for (double x : {-3.0, 0.0, 3.0}) {
    const double d2 = (airy_ai_prime(x + h) - airy_ai_prime(x - h)) / (2 * h);
    CHECK(std::abs(d2 - x * airy_ai(x)) < 1e-9);
  }
}

TEST_CASE("Airy ODE residual on [-10, 10]") {
  const double h = 1e-5;
  double worst = 0.0;
  for (double x = -10.0; x <= 10.0; x += 0.13) {
    const double d2 = (airy_ai_prime(x + h) - airy_ai_prime(x - h)) / (2 * h);
    worst = std::max(worst, std::abs(d2 - x * airy_ai(x)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("airy domain errors") {
  CHECK_THROWS_AS(airy_ai(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(airy_ai(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(airy_ai_prime(-2e3), DomainError);
  CHECK_NOTHROW(airy_ai(1e3));
  CHECK_NOTHROW(airy_ai(-1e3));
}

#ifdef EDGEGAP_BOOST_ORACLE
TEST_CASE("airy against an independent implementation") {
  double worst_rel = 0.0, worst_abs = 0.0;
  for (double x = -60.0; x <= 40.0; x += 0.0731) {
    const double want = boost::math::airy_ai(x);
    const double want_p = boost::math::airy_ai_prime(x);
    if (x >= -20.0) {
      worst_rel = std::max(worst_rel, rel(airy_ai(x), want));
      worst_rel = std::max(worst_rel, rel(airy_ai_prime(x), want_p));
    } else {
      worst_abs = std::max(worst_abs, std::abs(airy_ai(x) - want));
    }
  }
  CHECK(worst_rel < 1e-13);
  CHECK(worst_abs < 1e-13);
}

TEST_CASE("bessel against an independent implementation") {
  for (double a : {-0.75, -0.5, 0.0, 0.5, 1.0, 2.0, 3.5, 20.0}) {
    for (double x = 0.01; x <= 60.0; x += 0.173) {
      const double want = boost::math::cyl_bessel_j(a, x);
      CHECK(std::abs(bessel_j(a, x) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
      const double want_p = boost::math::cyl_bessel_j_prime(a, x);
      CHECK(std::abs(bessel_j_prime(a, x) - want_p) <= 1e-11 * std::max(1.0, std::abs(want_p)));
    }
  }
}
#endif

TEST_CASE("bessel_j special values") {
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(1.0, 0.0) == 0.0);
  CHECK(bessel_j(2.5, 0.0) == 0.0);
  for (double x : {1.0, 10.0}) {
    CHECK(std::abs(bessel_j(0.5, x) - std::sqrt(2.0 / (std::numbers::pi * x)) * std::sin(x)) < 1e-12);
  }
}

TEST_CASE("bessel_j_prime") {
  CHECK(bessel_j_prime(0.0, 0.0) == 0.0);
  CHECK(bessel_j_prime(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  const double h = 1e-5;
  CHECK(std::abs(bessel_j_prime(2.0, 3.0) - (bessel_j(2.0, 3.0 + h) - bessel_j(2.0, 3.0 - h)) / (2 * h)) < 1e-8);
  CHECK_THROWS_AS(bessel_j_prime(0.5, 0.0), DomainError);
}

TEST_CASE("Bessel ODE residual") {
  const double h = 1e-4;
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    for (double x = 0.25; x <= 30.0; x += 0.25) {
      const double d2 = (bessel_j_prime(a, x + h) - bessel_j_prime(a, x - h)) / (2 * h);
      const double res = x * x * d2 + x * bessel_j_prime(a, x) + (x * x - a * a) * bessel_j(a, x);
      CHECK(std::abs(res) < 1e-8 * (1.0 + x * x));
    }
  }
}

TEST_CASE("Bessel small-argument law and recurrence") {
  for (double a : {0.0, 0.5, 1.0, 2.0, 3.7}) {
    const double t = 1e-10;
    const double ratio = bessel_j(a, std::sqrt(t)) * std::pow(2.0, a) * gamma_fn(1.0 + a) / std::pow(t, a / 2.0);
    CHECK(std::abs(ratio - 1.0) < 1e-9);
  }
  for (double a : {0.5, 1.0, 2.0, 4.25}) {
    for (double x : {0.3, 2.0, 7.5, 40.0}) {
      const double lhs = bessel_j(a - 1.0, x) + bessel_j(a + 1.0, x);
      const double rhs = 2.0 * a / x * bessel_j(a, x);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(std::abs(rhs), 1e-3));
    }
  }
}

TEST_CASE("bessel domain errors") {
  CHECK_THROWS_AS(bessel_j(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(-1.5, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(0.0, -0.1), DomainError);
  CHECK_THROWS_AS(bessel_j(0.0, 2e4), DomainError);
  CHECK_THROWS_AS(bessel_j(-0.5, 0.0), DomainError);
  CHECK_NOTHROW(bessel_j(-0.5, 1.0));
}

TEST_CASE("gamma_fn") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel(gamma_fn(0.5), std::sqrt(std::numbers::pi)) < 1e-13);
  CHECK(rel(gamma_fn(5.0), 24.0) < 1e-13);
  CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(gamma_fn(-1.0), DomainError);
  CHECK_THROWS_AS(gamma_fn(171.0), DomainError);
}
