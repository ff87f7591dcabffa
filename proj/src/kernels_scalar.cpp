#include "srl/kernels.hpp"

// Reference kernels. Plain left-to-right loops; every vector backend is
// tested against these.

namespace srl::kern {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i] * c[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar", dot_scalar, dot3_scalar, axpy_scalar, sum_scalar};
  return b;
}

}  // namespace srl::kern
