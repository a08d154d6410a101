#pragma once

// On-disk formats. All floats are written with 12 significant digits.
//
//   calibration samples CSV  radius_mm,direction,strain_ue,trial   (direction pos|neg, radius inf allowed)
//   calibration model JSON   {"positive":{"a","b"},"negative":{"a","b"},"dead_zone_ue"}
//   trajectory JSON          {"label","segments":[{"kind","length_mm","radius_mm"?}]}
//   frame series CSV         frame_idx,depth_mm,s_mm,strain_ue   (+ <stem>.json sidecar)
//   shape CSV                s_mm,x_mm,y_mm,theta_rad
//   report CSV               label,tip_mm,tip_pct,shape_mm,shape_pct,trials

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ofdrshape/calibration.hpp"
#include "ofdrshape/metrics.hpp"
#include "ofdrshape/simulator.hpp"
#include "ofdrshape/trajectory.hpp"
#include "ofdrshape/types.hpp"

namespace ofdrshape::io {

inline constexpr const char* kSamplesHeader = "radius_mm,direction,strain_ue,trial";
inline constexpr const char* kFramesHeader = "frame_idx,depth_mm,s_mm,strain_ue";
inline constexpr const char* kShapeHeader = "s_mm,x_mm,y_mm,theta_rad";
inline constexpr const char* kReportHeader = "label,tip_mm,tip_pct,shape_mm,shape_pct,trials";

std::vector<calibration::CalibrationSample> read_samples(const std::filesystem::path& path);
std::string samples_to_csv(const std::vector<calibration::CalibrationSample>& samples);

nlohmann::ordered_json model_to_json(const calibration::CalibrationModel& model);
calibration::CalibrationModel model_from_json(const nlohmann::json& j);
calibration::CalibrationModel read_model(const std::filesystem::path& path);
void write_model(const std::filesystem::path& path, const calibration::CalibrationModel& model);

nlohmann::ordered_json trajectory_to_json(const trajectory::TrajectorySpec& spec);
trajectory::TrajectorySpec trajectory_from_json(const nlohmann::json& j);
/// Accepts a JSON file path or a bundled preset label (R39, R50, ..., Rinf).
trajectory::TrajectorySpec load_trajectory(const std::string& path_or_preset);

/// Sidecar metadata for a frame series.
struct FrameMetadata {
  double rate_hz = kDefaultFrameRateHz;
  double gauge_pitch_mm = kDefaultGaugePitchMm;
  double sensing_length_mm = kDefaultSensingLengthMm;
  std::optional<std::uint64_t> seed;
  std::optional<double> sigma_ue;
  std::optional<simulator::ComplianceModel> compliance;
  std::optional<calibration::CalibrationModel> model;
  std::string trajectory_label;
};

std::string frames_to_csv(const simulator::FrameSeries& series);
nlohmann::ordered_json metadata_to_json(const FrameMetadata& meta);
FrameMetadata metadata_from_json(const nlohmann::json& j);
/// `<dir>/<stem>.json` next to a frames CSV.
std::filesystem::path sidecar_path(const std::filesystem::path& frames_csv);
void write_frames(const std::filesystem::path& path, const simulator::FrameSeries& series,
                  const FrameMetadata& meta);
/// Reads the CSV; rate and pitch come from the sidecar when present, otherwise the
/// pitch is taken from the gauge positions and the rate defaults to 31.25 Hz.
simulator::FrameSeries read_frames(const std::filesystem::path& path);

std::string shape_to_csv(const PlanarShape& shape);
PlanarShape read_shape(const std::filesystem::path& path);

std::string reports_to_csv(const std::vector<metrics::EvaluationReport>& reports);
std::vector<metrics::EvaluationReport> read_reports(const std::filesystem::path& path,
                                                    double instrument_length_mm = kDefaultSensingLengthMm);

/// Per-gauge subtraction of `baseline` from every frame. Throws DomainError when the
/// gauge grids differ.
simulator::FrameSeries tare(const simulator::FrameSeries& frames, const StrainProfile& baseline);

}  // namespace ofdrshape::io
