#pragma once

// Strain <-> bend-radius calibration of the shape sensing assembly.
//
// Each bending direction follows a power law  radius = a * strain^b  (b < 0) with
// strain given as a magnitude in microstrain. Below `dead_zone` the law diverges, so
// those strains are reported as straight (zero curvature).

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace ofdrshape::calibration {

enum class BendDirection { kPositive, kNegative };

/// One calibration-jig measurement. Straight-slot samples carry an infinite radius
/// and are excluded from fitting.
struct CalibrationSample {
  double radius_mm = std::numeric_limits<double>::infinity();
  BendDirection direction = BendDirection::kPositive;
  double strain_ue = 0.0;  // magnitude
  int trial_id = 0;

  [[nodiscard]] bool is_straight() const { return std::isinf(radius_mm); }
};

/// (strain, radius) pair used for fitting; both strictly positive.
struct StrainRadius {
  double strain_ue;
  double radius_mm;
};

class PowerLaw {
 public:
  /// Throws DomainError unless coefficient > 0 and exponent < 0 (both finite).
  PowerLaw(double coefficient, double exponent);

  [[nodiscard]] double coefficient() const { return coefficient_; }
  [[nodiscard]] double exponent() const { return exponent_; }

  /// a * strain^b for strain > 0.
  [[nodiscard]] double radius(double strain_magnitude) const;
  /// Algebraic inverse: (radius / a)^(1/b) for radius > 0.
  [[nodiscard]] double strain(double radius_magnitude) const;

  friend bool operator==(const PowerLaw&, const PowerLaw&) = default;

 private:
  double coefficient_;
  double exponent_;
};

inline constexpr double kDefaultDeadZoneUe = 10.0;

class CalibrationModel {
 public:
  /// Throws DomainError unless dead_zone is finite and > 0.
  CalibrationModel(PowerLaw positive, PowerLaw negative, double dead_zone_ue = kDefaultDeadZoneUe);

  /// Coefficients as reported for the assembly: positive 284000 * e^-1.08,
  /// negative 150000 * e^-0.999.
  static CalibrationModel reference();

  [[nodiscard]] const PowerLaw& positive() const { return positive_; }
  [[nodiscard]] const PowerLaw& negative() const { return negative_; }
  [[nodiscard]] double dead_zone() const { return dead_zone_; }
  [[nodiscard]] const PowerLaw& branch(BendDirection d) const {
    return d == BendDirection::kPositive ? positive_ : negative_;
  }

  friend bool operator==(const CalibrationModel&, const CalibrationModel&) = default;

 private:
  PowerLaw positive_;
  PowerLaw negative_;
  double dead_zone_;
};

/// Signed bend radius; an infinite value marks a straight section.
struct SignedRadius {
  double mm = std::numeric_limits<double>::infinity();

  [[nodiscard]] bool is_straight() const { return std::isinf(mm); }
  [[nodiscard]] double curvature() const { return is_straight() ? 0.0 : 1.0 / mm; }
  static SignedRadius straight() { return {}; }
};

struct StrainEstimate {
  double strain_ue = 0.0;
  /// Set when the inverse strain fell inside the dead-zone and was clamped to zero.
  bool below_dead_zone = false;
};

struct SampleResidual {
  double strain_ue;
  double radius_mm;
  double predicted_radius_mm;
  double log_residual;     // ln(measured) - ln(predicted)
  double radius_residual;  // measured - predicted
};

struct ResidualStats {
  std::vector<SampleResidual> samples;
  double rmse_log = 0.0;
  double rmse_radius = 0.0;
  double max_abs_radius = 0.0;
};

/// Ordinary least squares of ln(radius) = ln(a) + b ln(strain).
///
/// Throws InsufficientDataError for < 2 samples, DomainError for nonpositive or
/// non-finite values (and for a nonnegative fitted exponent), RankDeficiencyError
/// when all strains coincide.
PowerLaw fit_power_law(std::span<const StrainRadius> samples);

/// Splits jig samples by direction, drops straight-slot entries and fits each branch.
CalibrationModel fit_calibration(std::span<const CalibrationSample> samples,
                                 double dead_zone_ue = kDefaultDeadZoneUe);

SignedRadius radius_from_strain(const CalibrationModel& model, double strain_ue);

/// Curvature in 1/mm; zero inside the dead-zone.
double curvature_from_strain(const CalibrationModel& model, double strain_ue);

/// Signed strain for a signed radius. Infinite radius gives 0; zero or NaN radius
/// is a DomainError.
StrainEstimate strain_from_radius(const CalibrationModel& model, double radius_mm);

ResidualStats fit_residuals(const PowerLaw& law, std::span<const StrainRadius> samples);

}  // namespace ofdrshape::calibration
