// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace edgegap::specfun {

// Airy function Ai and its derivative.
//
// |x| <= 20 region: Taylor expansion of the Airy ODE about the nearest node of
// a precomputed table (spacing 0.5). The table for x >= 0 is filled by
// stepping backwards from x = 10, where the exponentially small asymptotic
// expansion is exact to rounding; for x < 0 it is stepped forwards from the
// closed-form values at the origin. Outside [-20, 10] the asymptotic series
// are used directly. Non-finite arguments or |x| > 1e3 throw DomainError.
double airy_ai(double x);
double airy_ai_prime(double x);

// Bessel function of the first kind J_a(x), a > -1, 0 <= x <= 1e4.
double bessel_j(double a, double x);

// d/dx J_a(x). At x = 0 only a = 0 (-> 0) and a >= 1 (series limit) are
// admitted; 0 < |a| < 1 has a singular or undefined derivative there.
double bessel_j_prime(double a, double x);

// Gamma function on (0, 170].
double gamma_fn(double x);

}  // namespace edgegap::specfun
