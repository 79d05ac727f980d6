// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <string>

#include "edgegap/error.hpp"
#include "edgegap/specfun.hpp"

namespace edgegap::specfun {
namespace {

void check_bessel_args(double a, double x) {
  if (!std::isfinite(a) || !std::isfinite(x) || a <= -1.0 || x < 0.0 || x > 1e4) {
    throw DomainError("bessel_j: need a > -1 and 0 <= x <= 1e4 (a=" + std::to_string(a) +
                      ", x=" + std::to_string(x) + ")");
  }
}

}  // namespace

double bessel_j(double a, double x) {
  check_bessel_args(a, x);
  if (x == 0.0) {
    if (a == 0.0) return 1.0;
    if (a > 0.0) return 0.0;
    throw DomainError("bessel_j: J_a(0) is unbounded for a < 0");
  }
  if (a < 0.0) {
    // libstdc++ rejects negative orders; use the reflection-free recurrence
    // J_a = (2(a+1)/x) J_{a+1} - J_{a+2}.
    const double j1 = std::cyl_bessel_j(a + 1.0, x);
    const double j2 = std::cyl_bessel_j(a + 2.0, x);
    return 2.0 * (a + 1.0) / x * j1 - j2;
  }
  return std::cyl_bessel_j(a, x);
}

double bessel_j_prime(double a, double x) {
  check_bessel_args(a, x);
  if (x == 0.0) {
    if (a == 0.0) return 0.0;
    if (a == 1.0) return 0.5;
    if (a > 1.0) return 0.0;
    throw DomainError("bessel_j_prime: singular at x = 0 for order " + std::to_string(a));
  }
  // J_a' = (a/x) J_a - J_{a+1}
  return a / x * bessel_j(a, x) - std::cyl_bessel_j(a + 1.0, x);
}

double gamma_fn(double x) {
  if (!(x > 0.0) || x > 170.0) {
    throw DomainError("gamma_fn: argument outside (0, 170]: " + std::to_string(x));
  }
  return std::tgamma(x);
}

}  // namespace edgegap::specfun
