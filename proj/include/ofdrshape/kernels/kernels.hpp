#pragma once

// Data-parallel inner loops used by the pipeline.
//
// Every kernel has a scalar reference implementation and optional SIMD variants.
// The variants are required to be bit-identical to the reference: they perform the
// same IEEE operations in the same order per output element (no FMA contraction,
// no reassociated reductions), so results never depend on the host CPU.

#include <cstddef>
#include <span>
#include <string_view>

namespace ofdrshape::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  /// out[i] = a[i] - b[i]
  void (*subtract)(const double* a, const double* b, double* out, std::size_t n);
  /// out[i] = in[i] * factor
  void (*scale)(const double* in, double factor, double* out, std::size_t n);
  /// out[i] = out[i] + factor * in[i]
  void (*add_scaled)(double* out, const double* in, double factor, std::size_t n);
  /// Centered mean over [i-h, i+h] clipped to [0, n). Each output sums its window
  /// left to right, then divides by the window count.
  void (*moving_average)(const double* in, double* out, std::size_t n, std::size_t half_width);
  /// out[i] = sqrt(dx*dx + dy*dy) for dx = ax[i]-bx[i], dy = ay[i]-by[i]
  void (*point_distances)(const double* ax, const double* ay, const double* bx,
                          const double* by, double* out, std::size_t n);
};

const KernelTable& scalar_table();

/// Table for `isa`, or nullptr when that variant is not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa);

/// Best available table. `OFDRSHAPE_ISA=scalar|avx2|neon` overrides detection
/// (falls back to scalar when the requested variant is unavailable).
const KernelTable& active();

// Span conveniences over active(). Sizes must match; mismatches are a DomainError.
void subtract(std::span<const double> a, std::span<const double> b, std::span<double> out);
void scale(std::span<const double> in, double factor, std::span<double> out);
void add_scaled(std::span<double> out, std::span<const double> in, double factor);
void moving_average(std::span<const double> in, std::span<double> out, std::size_t half_width);
void point_distances(std::span<const double> ax, std::span<const double> ay,
                     std::span<const double> bx, std::span<const double> by,
                     std::span<double> out);

}  // namespace ofdrshape::kernels
