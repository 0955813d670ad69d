#include "cliquespec/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace cliquespec::kernels {

namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t yv = vld1q_f64(y + i);
    yv = vfmaq_f64(yv, av, vld1q_f64(x + i));
    vst1q_f64(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scal_neon(double a, double* x, std::size_t n) {
  float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(av, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

void gemv_neon(const double* a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = dot_neon(a + i * n, x, n);
  }
}

constexpr Ops kNeonOps{dot_neon, axpy_neon, scal_neon, gemv_neon, "neon"};

}  // namespace

const Ops& neon_ops() { return kNeonOps; }

}  // namespace cliquespec::kernels

#endif  // aarch64
