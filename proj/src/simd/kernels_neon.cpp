#include "sgspec/simd/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#define SGSPEC_HAVE_NEON 1
#else
#define SGSPEC_HAVE_NEON 0
#endif

namespace sgspec::simd::neon {

#if SGSPEC_HAVE_NEON

void rotate(double* x, double* y, std::size_t n, double c, double s) {
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xi = vld1q_f64(x + i);
    const float64x2_t yi = vld1q_f64(y + i);
    vst1q_f64(x + i, vsubq_f64(vmulq_f64(vc, xi), vmulq_f64(vs, yi)));
    vst1q_f64(y + i, vaddq_f64(vmulq_f64(vs, xi), vmulq_f64(vc, yi)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

#else

void rotate(double* x, double* y, std::size_t n, double c, double s) { scalar::rotate(x, y, n, c, s); }
double dot(const double* x, const double* y, std::size_t n) { return scalar::dot(x, y, n); }

#endif

}  // namespace sgspec::simd::neon
