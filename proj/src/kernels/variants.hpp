#pragma once

#include "ofdrshape/kernels/kernels.hpp"

namespace ofdrshape::kernels::detail {

extern const KernelTable kScalarTable;
#if defined(OFDRSHAPE_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(__aarch64__)
extern const KernelTable kNeonTable;
#endif

// Shared by the SIMD variants for clipped edge windows.
double window_mean(const double* in, std::size_t n, std::size_t i, std::size_t half_width);

}  // namespace ofdrshape::kernels::detail
