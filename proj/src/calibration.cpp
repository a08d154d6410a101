#include "ofdrshape/calibration.hpp"

#include <algorithm>
#include <string>

#include "ofdrshape/error.hpp"

namespace ofdrshape::calibration {

PowerLaw::PowerLaw(double coefficient, double exponent)
    : coefficient_(coefficient), exponent_(exponent) {
  if (!std::isfinite(coefficient) || coefficient <= 0.0) {
    throw DomainError("power law coefficient must be finite and > 0, got " +
                      std::to_string(coefficient));
  }
  if (!std::isfinite(exponent) || exponent >= 0.0) {
    throw DomainError("power law exponent must be finite and < 0, got " +
                      std::to_string(exponent));
  }
}

double PowerLaw::radius(double strain_magnitude) const {
  return coefficient_ * std::pow(strain_magnitude, exponent_);
}

double PowerLaw::strain(double radius_magnitude) const {
  return std::pow(radius_magnitude / coefficient_, 1.0 / exponent_);
}

CalibrationModel::CalibrationModel(PowerLaw positive, PowerLaw negative, double dead_zone_ue)
    : positive_(positive), negative_(negative), dead_zone_(dead_zone_ue) {
  if (!std::isfinite(dead_zone_ue) || dead_zone_ue <= 0.0) {
    throw DomainError("dead zone must be finite and > 0 microstrain");
  }
}

CalibrationModel CalibrationModel::reference() {
  return CalibrationModel(PowerLaw(284000.0, -1.08), PowerLaw(150000.0, -0.999));
}

PowerLaw fit_power_law(std::span<const StrainRadius> samples) {
  if (samples.size() < 2) {
    throw InsufficientDataError("power-law fit needs at least 2 samples, got " +
                                std::to_string(samples.size()));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!std::isfinite(s.strain_ue) || s.strain_ue <= 0.0 || !std::isfinite(s.radius_mm) ||
        s.radius_mm <= 0.0) {
      throw DomainError("power-law fit sample " + std::to_string(i) +
                        " needs finite strain > 0 and radius > 0");
    }
  }
  const auto [lo, hi] = std::minmax_element(
      samples.begin(), samples.end(),
      [](const StrainRadius& a, const StrainRadius& b) { return a.strain_ue < b.strain_ue; });
  if (lo->strain_ue == hi->strain_ue) {
    throw RankDeficiencyError("power-law fit: all strains are identical");
  }

  const auto n = static_cast<double>(samples.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& s : samples) {
    mean_x += std::log(s.strain_ue);
    mean_y += std::log(s.radius_mm);
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& s : samples) {
    const double dx = std::log(s.strain_ue) - mean_x;
    const double dy = std::log(s.radius_mm) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  if (sxx <= 0.0) throw RankDeficiencyError("power-law fit: degenerate strain spread");

  const double exponent = sxy / sxx;
  if (exponent >= 0.0) {
    throw DomainError("power-law fit: radius does not decrease with strain (exponent " +
                      std::to_string(exponent) + ")");
  }
  return PowerLaw(std::exp(mean_y - exponent * mean_x), exponent);
}

CalibrationModel fit_calibration(std::span<const CalibrationSample> samples, double dead_zone_ue) {
  std::vector<StrainRadius> positive;
  std::vector<StrainRadius> negative;
  for (const auto& s : samples) {
    if (s.is_straight()) continue;
    auto& bucket = s.direction == BendDirection::kPositive ? positive : negative;
    bucket.push_back({s.strain_ue, s.radius_mm});
  }
  return CalibrationModel(fit_power_law(positive), fit_power_law(negative), dead_zone_ue);
}

SignedRadius radius_from_strain(const CalibrationModel& model, double strain_ue) {
  if (!std::isfinite(strain_ue)) throw DomainError("strain must be finite");
  const double magnitude = std::abs(strain_ue);
  if (magnitude <= model.dead_zone()) return SignedRadius::straight();
  if (strain_ue > 0.0) return {model.positive().radius(magnitude)};
  return {-model.negative().radius(magnitude)};
}

double curvature_from_strain(const CalibrationModel& model, double strain_ue) {
  return radius_from_strain(model, strain_ue).curvature();
}

StrainEstimate strain_from_radius(const CalibrationModel& model, double radius_mm) {
  if (std::isnan(radius_mm) || radius_mm == 0.0) {
    throw DomainError("radius must be nonzero and not NaN");
  }
  if (std::isinf(radius_mm)) return {};
  const auto& law = radius_mm > 0.0 ? model.positive() : model.negative();
  const double magnitude = law.strain(std::abs(radius_mm));
  if (magnitude <= model.dead_zone()) return {0.0, true};
  return {radius_mm > 0.0 ? magnitude : -magnitude, false};
}

ResidualStats fit_residuals(const PowerLaw& law, std::span<const StrainRadius> samples) {
  if (samples.size() < 2) {
    throw InsufficientDataError("residual statistics need at least 2 samples");
  }
  ResidualStats stats;
  stats.samples.reserve(samples.size());
  double sum_log = 0.0;
  double sum_radius = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!(s.strain_ue > 0.0) || !(s.radius_mm > 0.0) || !std::isfinite(s.strain_ue) ||
        !std::isfinite(s.radius_mm)) {
      throw DomainError("residual sample " + std::to_string(i) + " is not a valid fit sample");
    }
    const double predicted = law.radius(s.strain_ue);
    SampleResidual r{s.strain_ue, s.radius_mm, predicted,
                     std::log(s.radius_mm) - std::log(predicted), s.radius_mm - predicted};
    sum_log += r.log_residual * r.log_residual;
    sum_radius += r.radius_residual * r.radius_residual;
    stats.max_abs_radius = std::max(stats.max_abs_radius, std::abs(r.radius_residual));
    stats.samples.push_back(r);
  }
  const auto n = static_cast<double>(samples.size());
  stats.rmse_log = std::sqrt(sum_log / n);
  stats.rmse_radius = std::sqrt(sum_radius / n);
  return stats;
}

}  // namespace ofdrshape::calibration
