// SPDX-License-Identifier: Apache-2.0
#include "edgegap/simd.hpp"

namespace edgegap::simd {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void quotient_row_scalar(double fi, double gi, double xi, double scale, const double* f,
                         const double* g, const double* x, const double* sw, double* out,
                         std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = scale * sw[j] * (fi * g[j] - gi * f[j]) / (xi - x[j]);
  }
}

constexpr KernelTable kScalar{"scalar", dot_scalar, axpy_scalar, quotient_row_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace edgegap::simd
