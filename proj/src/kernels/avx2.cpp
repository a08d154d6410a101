// Compiled with -mavx2 only; dispatched after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "variants.hpp"

namespace ofdrshape::kernels::detail {
namespace {

constexpr std::size_t kLanes = 4;

void subtract_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void scale_avx2(const double* in, double factor, double* out, std::size_t n) {
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(in + i), f));
  }
  for (; i < n; ++i) out[i] = in[i] * factor;
}

void add_scaled_avx2(double* out, const double* in, double factor, std::size_t n) {
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d prod = _mm256_mul_pd(f, _mm256_loadu_pd(in + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), prod));
  }
  for (; i < n; ++i) out[i] = out[i] + factor * in[i];
}

// Vectorized across outputs: lane k accumulates the window of output i+k in the
// same left-to-right order as the scalar reference.
void moving_average_avx2(const double* in, double* out, std::size_t n, std::size_t half_width) {
  if (n == 0) return;
  const std::size_t width = 2 * half_width + 1;
  const std::size_t first_full = half_width;
  const std::size_t end_full = n >= half_width ? n - half_width : 0;  // exclusive
  std::size_t i = 0;
  for (; i < std::min(first_full, n); ++i) out[i] = window_mean(in, n, i, half_width);
  const __m256d count = _mm256_set1_pd(static_cast<double>(width));
  for (; i + kLanes <= end_full; i += kLanes) {
    __m256d sum = _mm256_setzero_pd();
    const double* base = in + (i - half_width);
    for (std::size_t j = 0; j < width; ++j) sum = _mm256_add_pd(sum, _mm256_loadu_pd(base + j));
    _mm256_storeu_pd(out + i, _mm256_div_pd(sum, count));
  }
  for (; i < n; ++i) out[i] = window_mean(in, n, i, half_width);
}

void point_distances_avx2(const double* ax, const double* ay, const double* bx,
                          const double* by, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(ax + i), _mm256_loadu_pd(bx + i));
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ay + i), _mm256_loadu_pd(by + i));
    const __m256d sq = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sq));
  }
  for (; i < n; ++i) {
    const double dx = ax[i] - bx[i];
    const double dy = ay[i] - by[i];
    out[i] = std::sqrt(dx * dx + dy * dy);
  }
}

}  // namespace

const KernelTable kAvx2Table{
    Isa::kAvx2,       &subtract_avx2,       &scale_avx2,
    &add_scaled_avx2, &moving_average_avx2, &point_distances_avx2,
};

}  // namespace ofdrshape::kernels::detail
