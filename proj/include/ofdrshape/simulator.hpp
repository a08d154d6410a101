#pragma once

// Synthetic interrogator frames for a trajectory and insertion schedule.
//
// Per frame: ideal curvature of the sensing window -> ideal strain through the
// inverse calibration -> compliance (attenuation plus ramped transitions) ->
// zero-mean Gaussian gauge noise.

#include <cstdint>
#include <vector>

#include "ofdrshape/calibration.hpp"
#include "ofdrshape/trajectory.hpp"
#include "ofdrshape/types.hpp"

namespace ofdrshape::simulator {

/// Strain lost to clearance between the sensor, instrument channel and guide tube.
struct ComplianceModel {
  double attenuation = 0.65;
  double ramp_length_mm = 15.0;

  static ComplianceModel none() { return {1.0, 0.0}; }
};

struct NoiseModel {
  double sigma_ue = 20.0;
  std::uint64_t seed = 0;

  static NoiseModel none() { return {0.0, 0}; }
};

struct Frame {
  double depth_mm = 0.0;
  StrainProfile profile;
};

struct FrameSeries {
  std::vector<Frame> frames;
  double rate_hz = kDefaultFrameRateHz;
};

/// Throws DomainError when attenuation is outside (0, 1] or the ramp is negative.
void validate(const ComplianceModel& c);
void validate(const NoiseModel& n);
/// Depths strictly increasing; every profile shares pitch and length.
void validate(const FrameSeries& series);

/// Per-gauge strain whose calibrated curvature equals `curv` (zero where kappa is zero
/// or the inverse falls inside the dead-zone).
StrainProfile ideal_strain(const CurvatureProfile& curv,
                           const calibration::CalibrationModel& model);

/// Scales by the attenuation and replaces each step with a centered linear ramp of
/// `ramp_length_mm`: the profile is treated as piecewise constant per gauge cell and
/// averaged exactly over a box of that length (values past either end are held).
StrainProfile apply_compliance(const StrainProfile& profile, const ComplianceModel& c);

struct SimulationConfig {
  double sensing_length_mm = kDefaultSensingLengthMm;
  double gauge_pitch_mm = kDefaultGaugePitchMm;
  double rate_hz = kDefaultFrameRateHz;
  /// Worker threads for frame generation; output does not depend on it.
  unsigned threads = 1;
};

FrameSeries simulate_series(const trajectory::TrajectorySpec& spec,
                            const trajectory::InsertionSchedule& schedule,
                            const calibration::CalibrationModel& model,
                            const ComplianceModel& compliance, const NoiseModel& noise,
                            const SimulationConfig& config = {});

/// One frame of simulate_series, frame index `index` of the schedule.
Frame simulate_frame(const trajectory::TrajectorySpec& spec, double depth_mm, std::size_t index,
                     const calibration::CalibrationModel& model,
                     const ComplianceModel& compliance, const NoiseModel& noise,
                     const SimulationConfig& config);

}  // namespace ofdrshape::simulator
