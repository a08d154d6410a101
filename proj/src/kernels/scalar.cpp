#include <algorithm>
#include <cmath>

#include "variants.hpp"

namespace ofdrshape::kernels::detail {
namespace {

void subtract_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void scale_scalar(const double* in, double factor, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = in[i] * factor;
}

void add_scaled_scalar(double* out, const double* in, double factor, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = out[i] + factor * in[i];
}

void moving_average_scalar(const double* in, double* out, std::size_t n, std::size_t half_width) {
  for (std::size_t i = 0; i < n; ++i) out[i] = window_mean(in, n, i, half_width);
}

void point_distances_scalar(const double* ax, const double* ay, const double* bx,
                            const double* by, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = ax[i] - bx[i];
    const double dy = ay[i] - by[i];
    out[i] = std::sqrt(dx * dx + dy * dy);
  }
}

}  // namespace

double window_mean(const double* in, std::size_t n, std::size_t i, std::size_t half_width) {
  const std::size_t lo = i >= half_width ? i - half_width : 0;
  const std::size_t hi = std::min(n - 1, i + half_width);
  double sum = 0.0;
  for (std::size_t j = lo; j <= hi; ++j) sum += in[j];
  return sum / static_cast<double>(hi - lo + 1);
}

const KernelTable kScalarTable{
    Isa::kScalar,        &subtract_scalar,        &scale_scalar,
    &add_scaled_scalar,  &moving_average_scalar,  &point_distances_scalar,
};

}  // namespace ofdrshape::kernels::detail
