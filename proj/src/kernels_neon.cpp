// NEON kernels for aarch64. NEON is baseline on aarch64, so no runtime
// feature check is needed beyond the architecture itself.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "srl/kernels.hpp"

namespace srl::kern {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double dot3_neon(const double* a, const double* b, const double* c, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t ab = vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    acc0 = vfmaq_f64(acc0, ab, vld1q_f64(c + i));
  }
  double acc = vaddvq_f64(acc0);
  for (; i < n; ++i) acc += a[i] * b[i] * c[i];
  return acc;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double sum_neon(const double* a, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc0 = vaddq_f64(acc0, vld1q_f64(a + i));
  double acc = vaddvq_f64(acc0);
  for (; i < n; ++i) acc += a[i];
  return acc;
}

}  // namespace

const Backend* neon_backend_impl() {
  static const Backend b{"neon", dot_neon, dot3_neon, axpy_neon, sum_neon};
  return &b;
}

}  // namespace srl::kern

#endif  // aarch64
