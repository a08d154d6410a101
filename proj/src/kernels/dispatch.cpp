#include <cstdlib>
#include <string>

#include "ofdrshape/error.hpp"
#include "variants.hpp"

namespace ofdrshape::kernels {
namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(OFDRSHAPE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select() {
  if (const char* env = std::getenv("OFDRSHAPE_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (want == to_string(isa)) {
        if (const KernelTable* t = table_for(isa)) return *t;
      }
    }
    return detail::kScalarTable;
  }
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (const KernelTable* t = table_for(isa)) return *t;
  }
  return detail::kScalarTable;
}

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DomainError(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
  }
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_table() { return detail::kScalarTable; }

const KernelTable* table_for(Isa isa) {
  if (!cpu_has(isa)) return nullptr;
  switch (isa) {
    case Isa::kScalar:
      return &detail::kScalarTable;
    case Isa::kAvx2:
#if defined(OFDRSHAPE_HAVE_AVX2)
      return &detail::kAvx2Table;
#else
      return nullptr;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return &detail::kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

void subtract(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  require_same(a.size(), b.size(), "subtract");
  require_same(a.size(), out.size(), "subtract");
  active().subtract(a.data(), b.data(), out.data(), a.size());
}

void scale(std::span<const double> in, double factor, std::span<double> out) {
  require_same(in.size(), out.size(), "scale");
  active().scale(in.data(), factor, out.data(), in.size());
}

void add_scaled(std::span<double> out, std::span<const double> in, double factor) {
  require_same(in.size(), out.size(), "add_scaled");
  active().add_scaled(out.data(), in.data(), factor, in.size());
}

void moving_average(std::span<const double> in, std::span<double> out, std::size_t half_width) {
  require_same(in.size(), out.size(), "moving_average");
  active().moving_average(in.data(), out.data(), in.size(), half_width);
}

void point_distances(std::span<const double> ax, std::span<const double> ay,
                     std::span<const double> bx, std::span<const double> by,
                     std::span<double> out) {
  require_same(ax.size(), ay.size(), "point_distances");
  require_same(ax.size(), bx.size(), "point_distances");
  require_same(ax.size(), by.size(), "point_distances");
  require_same(ax.size(), out.size(), "point_distances");
  active().point_distances(ax.data(), ay.data(), bx.data(), by.data(), out.data(), ax.size());
}

}  // namespace ofdrshape::kernels
