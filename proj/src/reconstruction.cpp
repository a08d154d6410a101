#include "ofdrshape/reconstruction.hpp"

#include <cmath>
#include <string>

#include "ofdrshape/error.hpp"
#include "ofdrshape/kernels/kernels.hpp"

namespace ofdrshape::reconstruction {
namespace {

template <typename Profile>
void validate_grid(const Profile& profile, const char* what) {
  if (!(profile.gauge_pitch > 0.0) || !std::isfinite(profile.gauge_pitch)) {
    throw DomainError(std::string(what) + ": gauge pitch must be finite and > 0");
  }
  if (!std::isfinite(profile.origin_offset)) {
    throw DomainError(std::string(what) + ": origin offset must be finite");
  }
  if (profile.samples.empty()) throw DomainError(std::string(what) + ": no samples");
  for (std::size_t i = 0; i < profile.samples.size(); ++i) {
    if (!std::isfinite(profile.samples[i])) {
      throw DomainError(std::string(what) + ": non-finite sample at gauge " + std::to_string(i));
    }
  }
}

}  // namespace

void validate(const StrainProfile& profile) { validate_grid(profile, "strain profile"); }
void validate(const CurvatureProfile& profile) { validate_grid(profile, "curvature profile"); }

CurvatureProfile strain_to_curvature(const StrainProfile& profile,
                                     const calibration::CalibrationModel& model) {
  validate(profile);
  CurvatureProfile out{profile.gauge_pitch, profile.origin_offset, {}};
  out.samples.reserve(profile.size());
  for (double strain : profile.samples) {
    out.samples.push_back(calibration::curvature_from_strain(model, strain));
  }
  return out;
}

std::size_t smoothing_half_width(double window_mm, double gauge_pitch) {
  if (window_mm <= 0.0) return 0;
  // Tolerance absorbs representation error in window = k * pitch.
  const auto gauges = static_cast<std::size_t>(std::ceil(window_mm / gauge_pitch - 1e-9));
  return gauges / 2;
}

StrainProfile smooth_strain(const StrainProfile& profile, double window_mm) {
  validate(profile);
  if (!std::isfinite(window_mm) || window_mm < 0.0) {
    throw DomainError("smoothing window must be finite and >= 0");
  }
  if (window_mm == 0.0) return profile;
  if (window_mm >= profile.sensed_length()) {
    throw DomainError("smoothing window " + std::to_string(window_mm) +
                      " mm is not shorter than the sensed length " +
                      std::to_string(profile.sensed_length()) + " mm");
  }
  StrainProfile out = profile;
  kernels::moving_average(profile.samples, out.samples,
                          smoothing_half_width(window_mm, profile.gauge_pitch));
  return out;
}

StrainProfile select_sensing_window(const StrainProfile& profile, double sensing_length_mm) {
  validate(profile);
  if (!(sensing_length_mm > 0.0)) throw DomainError("sensing length must be > 0");
  const auto keep =
      static_cast<std::size_t>(std::floor(sensing_length_mm / profile.gauge_pitch + 1e-9)) + 1;
  if (keep >= profile.size()) return profile;
  const std::size_t drop = profile.size() - keep;
  StrainProfile out;
  out.gauge_pitch = profile.gauge_pitch;
  out.origin_offset = profile.position(drop);
  out.timestamp = profile.timestamp;
  out.samples.assign(profile.samples.begin() + static_cast<std::ptrdiff_t>(drop),
                     profile.samples.end());
  return out;
}

PlanarShape integrate_shape(const CurvatureProfile& curvature, const Pose2D& start) {
  validate(curvature);
  if (!std::isfinite(start.x) || !std::isfinite(start.y) || !std::isfinite(start.theta)) {
    throw DomainError("start pose must be finite");
  }
  const std::size_t n = curvature.size();
  const double ds = curvature.gauge_pitch;
  PlanarShape shape;
  shape.points.reserve(n);
  shape.arc_positions.reserve(n);
  shape.points.push_back(start);
  shape.arc_positions.push_back(curvature.origin_offset);

  Pose2D pose = start;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double kappa = 0.5 * (curvature.samples[j] + curvature.samples[j + 1]);
    const double dtheta = kappa * ds;
    const double heading = pose.theta + 0.5 * dtheta;
    pose.x += std::cos(heading) * ds;
    pose.y += std::sin(heading) * ds;
    pose.theta += dtheta;
    shape.points.push_back(pose);
    shape.arc_positions.push_back(curvature.position(j + 1));
  }
  return shape;
}

PlanarShape reconstruct_frame(const StrainProfile& profile,
                              const calibration::CalibrationModel& model,
                              const ReconstructionOptions& options, const Pose2D& start) {
  const StrainProfile windowed = options.sensing_length_mm > 0.0
                                     ? select_sensing_window(profile, options.sensing_length_mm)
                                     : profile;
  return integrate_shape(
      strain_to_curvature(smooth_strain(windowed, options.smoothing_window_mm), model), start);
}

PlanarShape reconstruct_frame(const StrainProfile& profile,
                              const calibration::CalibrationModel& model, double window_mm,
                              const Pose2D& start) {
  return reconstruct_frame(profile, model, ReconstructionOptions{window_mm, 0.0}, start);
}

}  // namespace ofdrshape::reconstruction
