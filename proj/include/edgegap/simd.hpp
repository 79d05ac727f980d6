// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace edgegap::simd {

// Data-parallel inner loops of the Nystrom assembly and the dense LU.
// Every variant computes the same quantity; vector variants may differ from
// the scalar reference by rounding only (FMA contraction, summation order).
struct KernelTable {
  std::string_view name;

  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);

  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  // out[j] = scale * sw[j] * (fi * g[j] - gi * f[j]) / (xi - x[j])
  //
  // One row of a weight-symmetrized difference-quotient kernel
  // (f(x)g(y) - g(x)f(y)) / (x - y). Entries with x[j] == xi come out as
  // inf/nan; the caller patches the diagonal.
  void (*quotient_row)(double fi, double gi, double xi, double scale, const double* f,
                       const double* g, const double* x, const double* sw, double* out,
                       std::size_t n);
};

const KernelTable& scalar_kernels();

/// All variants compiled in and supported by the running CPU, scalar first.
std::span<const KernelTable* const> available_kernels();

/// The widest supported variant; chosen once on first use.
const KernelTable& active_kernels();

}  // namespace edgegap::simd
