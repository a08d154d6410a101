#include "ofdrshape/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "ofdrshape/error.hpp"

namespace ofdrshape::trajectory {
namespace {

Pose2D advance(const Pose2D& from, const Segment& seg, double ds) {
  if (seg.kind == SegmentKind::kStraight) {
    return {from.x + std::cos(from.theta) * ds, from.y + std::sin(from.theta) * ds, from.theta};
  }
  const double r = seg.signed_radius_mm;
  const double dtheta = ds / r;
  const double theta = from.theta + dtheta;
  return {from.x + r * (std::sin(theta) - std::sin(from.theta)),
          from.y - r * (std::cos(theta) - std::cos(from.theta)), theta};
}

}  // namespace

TrajectorySpec::TrajectorySpec(std::string label, std::vector<Segment> segments)
    : label_(std::move(label)), segments_(std::move(segments)) {
  if (segments_.empty()) throw DomainError("trajectory '" + label_ + "' has no segments");
  Pose2D pose;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& seg = segments_[i];
    if (!std::isfinite(seg.length_mm) || seg.length_mm <= 0.0) {
      throw DomainError("trajectory '" + label_ + "' segment " + std::to_string(i) +
                        " needs a finite length > 0");
    }
    if (seg.kind == SegmentKind::kArc &&
        (!std::isfinite(seg.signed_radius_mm) || seg.signed_radius_mm == 0.0)) {
      throw DomainError("trajectory '" + label_ + "' arc segment " + std::to_string(i) +
                        " needs a finite nonzero radius");
    }
    segment_starts_.push_back(pose);
    segment_offsets_.push_back(total_length_);
    pose = advance(pose, seg, seg.length_mm);
    total_length_ += seg.length_mm;
  }
}

Pose2D TrajectorySpec::pose_at(double s) const {
  if (s <= 0.0) return advance(segment_starts_.front(), Segment::straight(1.0), s);
  const auto it = std::upper_bound(segment_offsets_.begin(), segment_offsets_.end(), s);
  const auto idx = static_cast<std::size_t>(std::distance(segment_offsets_.begin(), it)) - 1;
  const Segment& seg = segments_[idx];
  const double local = s - segment_offsets_[idx];
  if (local <= seg.length_mm) return advance(segment_starts_[idx], seg, local);
  // Beyond the end: follow the final tangent.
  const Pose2D end = advance(segment_starts_[idx], seg, seg.length_mm);
  return advance(end, Segment::straight(1.0), local - seg.length_mm);
}

double TrajectorySpec::curvature_at(double s) const {
  if (s < 0.0 || s > total_length_) return 0.0;
  if (s == total_length_) return segments_.back().curvature();
  const auto it = std::upper_bound(segment_offsets_.begin(), segment_offsets_.end(), s);
  const auto idx = static_cast<std::size_t>(std::distance(segment_offsets_.begin(), it)) - 1;
  if (s == segment_offsets_[idx]) {
    // Exactly on a joint: mean of the one-sided limits (the guide tube is straight before 0).
    const double before = idx == 0 ? 0.0 : segments_[idx - 1].curvature();
    return 0.5 * (before + segments_[idx].curvature());
  }
  return segments_[idx].curvature();
}

TrajectorySpec j_shape(std::string label, double straight_mm, double arc_length_mm,
                       double radius_mm) {
  return TrajectorySpec(std::move(label),
                        {Segment::straight(straight_mm), Segment::arc(arc_length_mm, radius_mm)});
}

TrajectorySpec preset(const std::string& label) {
  if (label == "Rinf" || label == "R_inf" || label == "R∞" || label == "R0") {
    return TrajectorySpec("Rinf", {Segment::straight(kPresetStraightMm + kPresetArcMm)});
  }
  for (int radius : {39, 50, 117, 46, 53, 121}) {
    if (label == "R" + std::to_string(radius)) {
      return j_shape(label, kPresetStraightMm, kPresetArcMm, radius);
    }
  }
  throw DomainError("unknown trajectory preset '" + label + "'");
}

std::vector<std::string> preset_labels() {
  return {"R39", "R50", "R117", "R46", "R53", "R121", "Rinf"};
}

InsertionSchedule make_schedule(const TrajectorySpec& spec, double increment_mm,
                                double speed_mm_s) {
  if (!std::isfinite(increment_mm) || increment_mm <= 0.0) {
    throw DomainError("insertion increment must be > 0");
  }
  if (!std::isfinite(speed_mm_s) || speed_mm_s <= 0.0) {
    throw DomainError("insertion speed must be > 0");
  }
  InsertionSchedule sched{increment_mm, speed_mm_s, {}};
  const double total = spec.total_length();
  for (int k = 1;; ++k) {
    const double depth = k * increment_mm;
    if (depth >= total - 1e-9) break;
    sched.depths.push_back(depth);
  }
  sched.depths.push_back(total);
  return sched;
}

PlanarShape centerline(const TrajectorySpec& spec, double step_mm) {
  if (!std::isfinite(step_mm) || step_mm <= 0.0) throw DomainError("centerline step must be > 0");
  const double total = spec.total_length();
  if (step_mm > total) {
    throw DomainError("centerline step " + std::to_string(step_mm) +
                      " mm exceeds trajectory length " + std::to_string(total) + " mm");
  }
  std::vector<double> positions;
  for (std::size_t k = 0;; ++k) {
    const double s = static_cast<double>(k) * step_mm;
    if (s >= total - 1e-9) break;
    positions.push_back(s);
  }
  positions.push_back(total);
  return sample_poses(spec, positions);
}

PlanarShape sample_poses(const TrajectorySpec& spec, const std::vector<double>& positions) {
  PlanarShape shape;
  shape.arc_positions = positions;
  shape.points.reserve(positions.size());
  for (double s : positions) shape.points.push_back(spec.pose_at(s));
  return shape;
}

std::size_t gauge_count(double sensing_length_mm, double gauge_pitch_mm) {
  return static_cast<std::size_t>(std::floor(sensing_length_mm / gauge_pitch_mm + 1e-9)) + 1;
}

CurvatureProfile curvature_at_depth(const TrajectorySpec& spec, double depth_mm,
                                    double sensing_length_mm, double gauge_pitch_mm) {
  if (!std::isfinite(sensing_length_mm) || sensing_length_mm <= 0.0) {
    throw DomainError("sensing length must be > 0");
  }
  if (!std::isfinite(gauge_pitch_mm) || gauge_pitch_mm <= 0.0) {
    throw DomainError("gauge pitch must be > 0");
  }
  if (!(depth_mm >= 0.0) || depth_mm > spec.total_length() + 1e-9) {
    throw DomainError("depth " + std::to_string(depth_mm) + " mm outside [0, " +
                      std::to_string(spec.total_length()) + "]");
  }
  const std::size_t n = gauge_count(sensing_length_mm, gauge_pitch_mm);
  CurvatureProfile profile;
  profile.gauge_pitch = gauge_pitch_mm;
  profile.origin_offset = depth_mm - static_cast<double>(n - 1) * gauge_pitch_mm;
  profile.samples.reserve(n);
  const double half = 0.5 * gauge_pitch_mm;
  for (std::size_t i = 0; i < n; ++i) {
    // Measured back from the tip so the distal gauge sits exactly at `depth`.
    const double s = depth_mm - static_cast<double>(n - 1 - i) * gauge_pitch_mm;
    // Each gauge reads the mean curvature over its cell; the fiber ends at the tip.
    const double lo = s - half;
    const double hi = std::min(s + half, depth_mm);
    profile.samples.push_back((spec.pose_at(hi).theta - spec.pose_at(lo).theta) / (hi - lo));
  }
  return profile;
}

}  // namespace ofdrshape::trajectory
