#pragma once
// Double-precision inner-loop kernels with runtime backend selection.
//
// The scalar implementations are the reference semantics. Vector backends
// (AVX2 on x86-64, NEON on aarch64) reassociate the accumulation, so they
// agree with the scalar results only up to rounding; the test suite checks
// that equivalence on random inputs. Backend selection happens once at
// startup (widest supported wins) and can be overridden with set_backend()
// or the SRL_KERNELS environment variable.

#include <cstddef>
#include <string>
#include <vector>

namespace srl::kern {

struct Backend {
  const char* name;
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_i a[i]*b[i]*c[i]
  double (*dot3)(const double* a, const double* b, const double* c, std::size_t n);
  // y[i] += alpha*x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // sum_i a[i]
  double (*sum)(const double* a, std::size_t n);
};

const Backend& scalar_backend();

// Backends compiled into this binary and usable on the current CPU.
std::vector<const Backend*> available_backends();

// Active backend. Defaults to the widest available; "auto" re-detects.
// Unknown or unavailable names throw std::invalid_argument.
const Backend& active_backend();
void set_backend(const std::string& name);

inline double dot(const double* a, const double* b, std::size_t n) {
  return active_backend().dot(a, b, n);
}
inline double dot3(const double* a, const double* b, const double* c, std::size_t n) {
  return active_backend().dot3(a, b, c, n);
}
inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
  active_backend().axpy(alpha, x, y, n);
}
inline double sum(const double* a, std::size_t n) {
  return active_backend().sum(a, n);
}

}  // namespace srl::kern
