#include <gtest/gtest.h>

#include <cstring>
#include <random>
#include <vector>

#include "ofdrshape/error.hpp"
#include "ofdrshape/kernels/kernels.hpp"

using namespace ofdrshape;
using kernels::Isa;
using kernels::KernelTable;

namespace {

std::vector<const KernelTable*> simd_tables() {
  std::vector<const KernelTable*> out;
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (const auto* t = kernels::table_for(isa)) out.push_back(t);
  }
  return out;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-5000.0, 5000.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST(Kernels, ScalarAlwaysAvailable) {
  ASSERT_NE(kernels::table_for(Isa::kScalar), nullptr);
  EXPECT_EQ(kernels::scalar_table().isa, Isa::kScalar);
}

TEST(Kernels, ScalarReferenceValues) {
  const auto& t = kernels::scalar_table();
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0, 5.0};
  const std::vector<double> b{0.5, 0.5, 0.5, 0.5, 0.5};
  std::vector<double> out(5);
  t.subtract(a.data(), b.data(), out.data(), 5);
  EXPECT_EQ(out, (std::vector<double>{0.5, 1.5, 2.5, 3.5, 4.5}));
  t.scale(a.data(), 2.0, out.data(), 5);
  EXPECT_EQ(out, (std::vector<double>{2, 4, 6, 8, 10}));
  t.moving_average(a.data(), out.data(), 5, 1);
  EXPECT_EQ(out, (std::vector<double>{1.5, 2.0, 3.0, 4.0, 4.5}));
  std::vector<double> zeros(5, 0.0);
  const std::vector<double> threes(5, 3.0), fours(5, 4.0);
  t.point_distances(threes.data(), fours.data(), zeros.data(), zeros.data(), out.data(), 5);
  EXPECT_EQ(out, std::vector<double>(5, 5.0));
}

// Every SIMD variant must reproduce the scalar reference bit for bit, over sizes
// covering empty input, partial vectors and tails, and all window widths.
TEST(Kernels, SimdVariantsBitIdenticalToScalar) {
  const auto& ref = kernels::scalar_table();
  std::mt19937_64 rng(1234);
  for (const KernelTable* simd : simd_tables()) {
    SCOPED_TRACE(std::string(kernels::to_string(simd->isa)));
    for (std::size_t n = 0; n <= 67; ++n) {
      const auto a = random_vector(rng, n);
      const auto b = random_vector(rng, n);
      const auto c = random_vector(rng, n);
      const auto d = random_vector(rng, n);
      std::vector<double> r(n), s(n);

      ref.subtract(a.data(), b.data(), r.data(), n);
      simd->subtract(a.data(), b.data(), s.data(), n);
      EXPECT_TRUE(bit_equal(r, s)) << "subtract n=" << n;

      ref.scale(a.data(), 0.65, r.data(), n);
      simd->scale(a.data(), 0.65, s.data(), n);
      EXPECT_TRUE(bit_equal(r, s)) << "scale n=" << n;

      r = b;
      s = b;
      ref.add_scaled(r.data(), a.data(), 19.7, n);
      simd->add_scaled(s.data(), a.data(), 19.7, n);
      EXPECT_TRUE(bit_equal(r, s)) << "add_scaled n=" << n;

      ref.point_distances(a.data(), b.data(), c.data(), d.data(), r.data(), n);
      simd->point_distances(a.data(), b.data(), c.data(), d.data(), s.data(), n);
      EXPECT_TRUE(bit_equal(r, s)) << "point_distances n=" << n;

      for (std::size_t h = 0; h <= 9; ++h) {
        ref.moving_average(a.data(), r.data(), n, h);
        simd->moving_average(a.data(), s.data(), n, h);
        EXPECT_TRUE(bit_equal(r, s)) << "moving_average n=" << n << " h=" << h;
      }
    }
  }
}

TEST(Kernels, InPlaceAliasingMatchesOutOfPlace) {
  std::mt19937_64 rng(99);
  const auto a = random_vector(rng, 37);
  const auto b = random_vector(rng, 37);
  std::vector<double> expected(37);
  kernels::subtract(a, b, expected);
  std::vector<double> inplace = a;
  kernels::subtract(inplace, b, inplace);
  EXPECT_TRUE(bit_equal(expected, inplace));
}

TEST(Kernels, SpanWrappersRejectLengthMismatch) {
  std::vector<double> a(4), b(5), out(4);
  EXPECT_THROW(kernels::subtract(a, b, out), DomainError);
  EXPECT_THROW(kernels::scale(a, 1.0, b), DomainError);
  EXPECT_THROW(kernels::moving_average(a, b, 1), DomainError);
}
