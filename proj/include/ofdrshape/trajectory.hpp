#pragma once

// Ground-truth centerlines built from straight and constant-curvature segments.
//
// Arc position s runs from 0 at the trajectory entry to total_length() at the end.
// Positions s < 0 lie inside the straight guide tube: the centerline continues
// backward along the initial heading with zero curvature.

#include <string>
#include <vector>

#include "ofdrshape/types.hpp"

namespace ofdrshape::trajectory {

enum class SegmentKind { kStraight, kArc };

struct Segment {
  SegmentKind kind = SegmentKind::kStraight;
  double length_mm = 0.0;
  /// Arcs only. Positive bends toward +y (counter-clockwise).
  double signed_radius_mm = 0.0;

  static Segment straight(double length_mm) { return {SegmentKind::kStraight, length_mm, 0.0}; }
  static Segment arc(double length_mm, double signed_radius_mm) {
    return {SegmentKind::kArc, length_mm, signed_radius_mm};
  }
  [[nodiscard]] double curvature() const {
    return kind == SegmentKind::kArc ? 1.0 / signed_radius_mm : 0.0;
  }

  friend bool operator==(const Segment&, const Segment&) = default;
};

class TrajectorySpec {
 public:
  /// Throws DomainError for empty specs, nonpositive lengths, or arcs with zero or
  /// non-finite radius.
  TrajectorySpec(std::string label, std::vector<Segment> segments);

  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] const std::vector<Segment>& segments() const { return segments_; }
  [[nodiscard]] double total_length() const { return total_length_; }

  /// Exact pose at arc position s (s < 0 extends the entry straight backward,
  /// s > total_length() extends the final tangent forward).
  [[nodiscard]] Pose2D pose_at(double s) const;
  /// Curvature at s; zero outside [0, total_length()]. A position exactly on a joint
  /// (including the entry at s = 0) reads the mean of the curvatures on either side;
  /// the end point reads the final segment.
  [[nodiscard]] double curvature_at(double s) const;

  friend bool operator==(const TrajectorySpec&, const TrajectorySpec&) = default;

 private:
  std::string label_;
  std::vector<Segment> segments_;
  std::vector<Pose2D> segment_starts_;
  std::vector<double> segment_offsets_;
  double total_length_ = 0.0;
};

/// Straight run followed by one constant-curvature arc.
TrajectorySpec j_shape(std::string label, double straight_mm, double arc_length_mm,
                       double radius_mm);

inline constexpr double kPresetStraightMm = 15.0;
inline constexpr double kPresetArcMm = 50.0;

/// Bundled presets: "R39", "R50", "R117" (guide tubes), "R46", "R53", "R121"
/// (drilled trajectories), "Rinf" (straight, also accepted as "R_inf" and "R∞").
/// All J-shapes are 15 mm straight + 50 mm arc; Rinf is 65 mm straight.
TrajectorySpec preset(const std::string& label);
std::vector<std::string> preset_labels();

struct InsertionSchedule {
  double increment_mm = 10.0;
  double speed_mm_s = 1.5;
  std::vector<double> depths;
};

/// Depths increment, 2*increment, ... below total_length, then total_length.
InsertionSchedule make_schedule(const TrajectorySpec& spec, double increment_mm = 10.0,
                                double speed_mm_s = 1.5);

/// Analytic centerline sampled every `step` mm from 0; the final point is the exact
/// end of the trajectory (the last spacing may be shorter than `step`).
PlanarShape centerline(const TrajectorySpec& spec, double step_mm);

/// Exact centerline poses at arbitrary arc positions.
PlanarShape sample_poses(const TrajectorySpec& spec, const std::vector<double>& positions);

/// Number of gauges spanning a sensing window: floor(length / pitch) + 1.
std::size_t gauge_count(double sensing_length_mm, double gauge_pitch_mm);

/// Ideal curvature seen by a sensing window whose distal gauge sits at `depth`.
/// Gauges are spaced `gauge_pitch` backward from the tip. Each reads the mean
/// curvature over its cell [s - pitch/2, s + pitch/2], clipped at the tip; the
/// tube before the trajectory entry is straight.
CurvatureProfile curvature_at_depth(const TrajectorySpec& spec, double depth_mm,
                                    double sensing_length_mm,
                                    double gauge_pitch_mm = kDefaultGaugePitchMm);

}  // namespace ofdrshape::trajectory
