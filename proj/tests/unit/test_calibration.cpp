#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ofdrshape/calibration.hpp"
#include "ofdrshape/error.hpp"

using namespace ofdrshape;
using namespace ofdrshape::calibration;

namespace {

std::vector<StrainRadius> jig_samples(const PowerLaw& law) {
  std::vector<StrainRadius> out;
  for (int r = 35; r <= 100; r += 5) out.push_back({law.strain(r), static_cast<double>(r)});
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(PowerLaw, RejectsInvalidParameters) {
  EXPECT_THROW(PowerLaw(0.0, -1.0), DomainError);
  EXPECT_THROW(PowerLaw(-3.0, -1.0), DomainError);
  EXPECT_THROW(PowerLaw(100.0, 0.0), DomainError);
  EXPECT_THROW(PowerLaw(100.0, 0.5), DomainError);
  EXPECT_THROW(PowerLaw(NAN, -1.0), DomainError);
}

TEST(CalibrationModel, RequiresPositiveDeadZone) {
  EXPECT_THROW(CalibrationModel(PowerLaw(1, -1), PowerLaw(1, -1), 0.0), DomainError);
  EXPECT_THROW(CalibrationModel(PowerLaw(1, -1), PowerLaw(1, -1), -2.0), DomainError);
}

TEST(FitPowerLaw, TwoPointsExactThroughBoth) {
  // mpmath oracle (tests/oracles/compute_oracles.py).
  const std::vector<StrainRadius> pts{{1000.0, 163.43}, {3770.0, 39.0}};
  const PowerLaw law = fit_power_law(pts);
  EXPECT_NEAR(law.coefficient(), 283391.68832307558, 1e-6);
  EXPECT_NEAR(law.exponent(), -1.0796851092809878, 1e-12);
  EXPECT_NEAR(law.radius(1000.0), 163.43, 1e-10);
  EXPECT_NEAR(law.radius(3770.0), 39.0, 1e-10);
}

TEST(FitPowerLaw, RecoversReferenceLawsFromJigRadii) {
  for (const PowerLaw& truth : {PowerLaw(284000.0, -1.08), PowerLaw(150000.0, -0.999)}) {
    const auto samples = jig_samples(truth);
    ASSERT_EQ(samples.size(), 14u);
    const PowerLaw fit = fit_power_law(samples);
    EXPECT_LE(rel(fit.coefficient(), truth.coefficient()), 1e-10);
    EXPECT_LE(rel(fit.exponent(), truth.exponent()), 1e-10);
  }
}

TEST(FitPowerLaw, ErrorPaths) {
  EXPECT_THROW(fit_power_law(std::vector<StrainRadius>{}), InsufficientDataError);
  EXPECT_THROW(fit_power_law(std::vector<StrainRadius>{{1000, 100}}), InsufficientDataError);
  EXPECT_THROW(fit_power_law(std::vector<StrainRadius>{{1000, 100}, {0, 50}}), DomainError);
  EXPECT_THROW(fit_power_law(std::vector<StrainRadius>{{1000, 100}, {2000, -50}}), DomainError);
  EXPECT_THROW(fit_power_law(std::vector<StrainRadius>{{1000, 100}, {2000, INFINITY}}), DomainError);
  EXPECT_THROW(fit_power_law(std::vector<StrainRadius>{{1500, 100}, {1500, 50}, {1500, 70}}),
               RankDeficiencyError);
  // Radius increasing with strain is not a valid calibration.
  EXPECT_THROW(fit_power_law(std::vector<StrainRadius>{{1000, 50}, {2000, 100}}), DomainError);
}

TEST(FitCalibration, PoolsTrialsAndSkipsStraightSlot) {
  const auto ref = CalibrationModel::reference();
  std::vector<CalibrationSample> samples;
  samples.push_back({INFINITY, BendDirection::kPositive, 2.0, 0});
  for (int trial = 0; trial < 3; ++trial) {
    for (int r = 35; r <= 100; r += 5) {
      samples.push_back({double(r), BendDirection::kPositive, ref.positive().strain(r), trial});
      samples.push_back({double(r), BendDirection::kNegative, ref.negative().strain(r), trial});
    }
  }
  const auto model = fit_calibration(samples, 12.0);
  EXPECT_LE(rel(model.positive().coefficient(), 284000.0), 1e-10);
  EXPECT_LE(rel(model.negative().exponent(), -0.999), 1e-10);
  EXPECT_EQ(model.dead_zone(), 12.0);
}

TEST(RadiusFromStrain, Examples) {
  const auto model = CalibrationModel::reference();
  EXPECT_NEAR(radius_from_strain(model, 1000.0).mm, 163.42494220375257, 1e-9);
  EXPECT_NEAR(radius_from_strain(model, -1500.0).mm, -100.73400272917276, 1e-9);
  const CalibrationModel dz10(PowerLaw(284000, -1.08), PowerLaw(150000, -0.999), 10.0);
  EXPECT_TRUE(radius_from_strain(dz10, 3.0).is_straight());
  EXPECT_TRUE(radius_from_strain(dz10, -10.0).is_straight());
  EXPECT_EQ(curvature_from_strain(dz10, 3.0), 0.0);
  EXPECT_THROW(radius_from_strain(model, NAN), DomainError);
  EXPECT_THROW(radius_from_strain(model, INFINITY), DomainError);
}

TEST(StrainFromRadius, Examples) {
  const auto model = CalibrationModel::reference();
  EXPECT_NEAR(strain_from_radius(model, 39.0).strain_ue, 3768.4335698425847, 1e-8);
  EXPECT_NEAR(strain_from_radius(model, 117.0).strain_ue, 1362.6424816587302, 1e-8);
  EXPECT_NEAR(strain_from_radius(model, -100.7).strain_ue, -1500.5070025574523, 1e-8);
  EXPECT_EQ(strain_from_radius(model, INFINITY).strain_ue, 0.0);
  EXPECT_THROW(strain_from_radius(model, 0.0), DomainError);
  EXPECT_THROW(strain_from_radius(model, NAN), DomainError);
  // ~1.4 m radius maps to a strain inside the dead-zone.
  const auto tiny = strain_from_radius(model, 1e6);
  EXPECT_EQ(tiny.strain_ue, 0.0);
  EXPECT_TRUE(tiny.below_dead_zone);
}

// Round trip, monotonicity and sign preservation over a log-spaced sweep.
TEST(CalibrationProperties, RoundTripMonotoneSigned) {
  const auto model = CalibrationModel::reference();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> log_strain(std::log(10.5), std::log(20000.0));
  for (int i = 0; i < 5000; ++i) {
    const double mag = std::exp(log_strain(rng));
    for (double eps : {mag, -mag}) {
      const SignedRadius r = radius_from_strain(model, eps);
      ASSERT_FALSE(r.is_straight());
      EXPECT_EQ(std::signbit(r.mm), std::signbit(eps));
      const double back = strain_from_radius(model, r.mm).strain_ue;
      EXPECT_LE(std::abs(back - eps) / std::abs(eps), 1e-9);
    }
    const double bigger = mag * 1.01;
    EXPECT_GT(radius_from_strain(model, mag).mm, radius_from_strain(model, bigger).mm);
    EXPECT_LT(radius_from_strain(model, -mag).mm, radius_from_strain(model, -bigger).mm);
  }
}

TEST(FitResiduals, ExactDataHasZeroResiduals) {
  const PowerLaw law(284000.0, -1.08);
  const auto stats = fit_residuals(law, jig_samples(law));
  EXPECT_LT(stats.rmse_radius, 1e-10);
  EXPECT_LT(stats.rmse_log, 1e-12);
  EXPECT_LT(stats.max_abs_radius, 1e-10);
  EXPECT_EQ(stats.samples.size(), 14u);
}

TEST(FitResiduals, OnePercentRadiusPerturbation) {
  const PowerLaw law(284000.0, -1.08);
  auto samples = jig_samples(law);
  for (auto& s : samples) s.radius_mm *= 1.01;
  const auto stats = fit_residuals(law, samples);
  // Oracle: 1% of the RMS jig radius; mean jig radius is 67.5 mm.
  EXPECT_NEAR(stats.rmse_radius, 0.70445014018026854, 1e-9);
  EXPECT_NEAR(stats.rmse_radius / 67.5, 0.0104, 2e-4);
  EXPECT_NEAR(stats.rmse_log, std::log(1.01), 1e-12);
  EXPECT_NEAR(stats.max_abs_radius, 1.0, 1e-9);
}

TEST(FitResiduals, InsufficientData) {
  const PowerLaw law(284000.0, -1.08);
  EXPECT_THROW(fit_residuals(law, std::vector<StrainRadius>{}), InsufficientDataError);
  EXPECT_THROW(fit_residuals(law, std::vector<StrainRadius>{{1000, 163}}), InsufficientDataError);
}
