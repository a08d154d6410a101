#include <arm_neon.h>

#include <algorithm>
#include <cmath>

#include "variants.hpp"

namespace ofdrshape::kernels::detail {
namespace {

constexpr std::size_t kLanes = 2;

void subtract_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void scale_neon(const double* in, double factor, double* out, std::size_t n) {
  const float64x2_t f = vdupq_n_f64(factor);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_f64(out + i, vmulq_f64(vld1q_f64(in + i), f));
  for (; i < n; ++i) out[i] = in[i] * factor;
}

// vmulq + vaddq rather than vfmaq: fused multiply-add would round differently.
void add_scaled_neon(double* out, const double* in, double factor, std::size_t n) {
  const float64x2_t f = vdupq_n_f64(factor);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(out + i), vmulq_f64(f, vld1q_f64(in + i))));
  }
  for (; i < n; ++i) out[i] = out[i] + factor * in[i];
}

void moving_average_neon(const double* in, double* out, std::size_t n, std::size_t half_width) {
  if (n == 0) return;
  const std::size_t width = 2 * half_width + 1;
  const std::size_t end_full = n >= half_width ? n - half_width : 0;
  std::size_t i = 0;
  for (; i < std::min(half_width, n); ++i) out[i] = window_mean(in, n, i, half_width);
  const float64x2_t count = vdupq_n_f64(static_cast<double>(width));
  for (; i + kLanes <= end_full; i += kLanes) {
    float64x2_t sum = vdupq_n_f64(0.0);
    const double* base = in + (i - half_width);
    for (std::size_t j = 0; j < width; ++j) sum = vaddq_f64(sum, vld1q_f64(base + j));
    vst1q_f64(out + i, vdivq_f64(sum, count));
  }
  for (; i < n; ++i) out[i] = window_mean(in, n, i, half_width);
}

void point_distances_neon(const double* ax, const double* ay, const double* bx,
                          const double* by, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(ax + i), vld1q_f64(bx + i));
    const float64x2_t dy = vsubq_f64(vld1q_f64(ay + i), vld1q_f64(by + i));
    vst1q_f64(out + i, vsqrtq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy))));
  }
  for (; i < n; ++i) {
    const double dx = ax[i] - bx[i];
    const double dy = ay[i] - by[i];
    out[i] = std::sqrt(dx * dx + dy * dy);
  }
}

}  // namespace

const KernelTable kNeonTable{
    Isa::kNeon,       &subtract_neon,       &scale_neon,
    &add_scaled_neon, &moving_average_neon, &point_distances_neon,
};

}  // namespace ofdrshape::kernels::detail
