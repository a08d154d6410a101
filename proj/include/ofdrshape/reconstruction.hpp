#pragma once

// Strain profile -> curvature profile -> planar shape.

#include "ofdrshape/calibration.hpp"
#include "ofdrshape/types.hpp"

namespace ofdrshape::reconstruction {

inline constexpr double kDefaultSmoothingWindowMm = 2.0;

/// Throws DomainError when pitch <= 0, the profile is empty, or a sample is non-finite
/// (the message names the gauge index).
void validate(const StrainProfile& profile);
void validate(const CurvatureProfile& profile);

/// Per-gauge signed curvature; zero inside the calibration dead-zone.
CurvatureProfile strain_to_curvature(const StrainProfile& profile,
                                     const calibration::CalibrationModel& model);

/// Gauges on each side of the center for a smoothing window given in mm.
std::size_t smoothing_half_width(double window_mm, double gauge_pitch);

/// Centered moving average over a window of `window_mm`; 0 is the identity.
/// Throws DomainError for negative windows or windows >= the sensed length.
StrainProfile smooth_strain(const StrainProfile& profile, double window_mm);

/// Keeps the distal gauges covering `sensing_length_mm` (the flexible section);
/// proximal gauges in the rigid section are dropped. A profile already shorter is
/// returned unchanged.
StrainProfile select_sensing_window(const StrainProfile& profile, double sensing_length_mm);

/// Integrates curvature along arc length from `start`.
///
/// Step j (gauge j -> j+1) turns by dtheta = kappa_j' * ds with kappa_j' the mean of the
/// two gauge curvatures and advances a chord of length ds along the midpoint heading
/// theta + dtheta / 2. The first pose equals `start`; arc positions follow the profile grid.
PlanarShape integrate_shape(const CurvatureProfile& curvature, const Pose2D& start);

struct ReconstructionOptions {
  double smoothing_window_mm = kDefaultSmoothingWindowMm;
  /// Length of the integrated (flexible) section; <= 0 integrates every gauge.
  double sensing_length_mm = 0.0;
};

/// select_sensing_window -> smooth_strain -> strain_to_curvature -> integrate_shape.
PlanarShape reconstruct_frame(const StrainProfile& profile,
                              const calibration::CalibrationModel& model,
                              const ReconstructionOptions& options, const Pose2D& start);

/// Same with the window given directly and no sensing-window selection.
PlanarShape reconstruct_frame(const StrainProfile& profile,
                              const calibration::CalibrationModel& model, double window_mm,
                              const Pose2D& start);

}  // namespace ofdrshape::reconstruction
