#pragma once

#include <cstddef>
#include <vector>

namespace ofdrshape {

/// Default arc-length spacing between strain gauges of the interrogator, in mm.
inline constexpr double kDefaultGaugePitchMm = 0.65;
/// Length of the flexible instrument section that is reconstructed and evaluated, in mm.
inline constexpr double kDefaultSensingLengthMm = 45.0;
/// Interrogator acquisition rate, in Hz.
inline constexpr double kDefaultFrameRateHz = 31.25;

/// Signed microstrain samples on a uniform arc-length grid.
///
/// `origin_offset` is the arc position (mm) of the first gauge. In simulated and
/// evaluated data this is measured along the ground-truth trajectory, so gauge `i`
/// sits at `origin_offset + i * gauge_pitch`.
struct StrainProfile {
  double gauge_pitch = kDefaultGaugePitchMm;
  double origin_offset = 0.0;
  std::vector<double> samples;
  double timestamp = 0.0;

  [[nodiscard]] std::size_t size() const { return samples.size(); }
  [[nodiscard]] double sensed_length() const {
    return samples.empty() ? 0.0 : static_cast<double>(samples.size() - 1) * gauge_pitch;
  }
  [[nodiscard]] double position(std::size_t i) const {
    return origin_offset + static_cast<double>(i) * gauge_pitch;
  }
};

/// Signed curvature (1/mm) per gauge, same grid convention as StrainProfile.
struct CurvatureProfile {
  double gauge_pitch = kDefaultGaugePitchMm;
  double origin_offset = 0.0;
  std::vector<double> samples;

  [[nodiscard]] std::size_t size() const { return samples.size(); }
  [[nodiscard]] double position(std::size_t i) const {
    return origin_offset + static_cast<double>(i) * gauge_pitch;
  }
};

/// Planar pose. `theta` is cumulative heading and is never wrapped.
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  friend bool operator==(const Pose2D&, const Pose2D&) = default;
};

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Arc-length parameterized planar polyline with per-point heading.
struct PlanarShape {
  std::vector<Pose2D> points;
  std::vector<double> arc_positions;

  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] bool empty() const { return points.empty(); }
  [[nodiscard]] double start_position() const { return arc_positions.front(); }
  [[nodiscard]] double end_position() const { return arc_positions.back(); }
  [[nodiscard]] double span() const { return arc_positions.back() - arc_positions.front(); }
  [[nodiscard]] const Pose2D& tip() const { return points.back(); }
};

}  // namespace ofdrshape
