#pragma once

// End-to-end runs: simulate -> reconstruct -> evaluate, and the seven bundled
// free-bending / drilling configurations.

#include <cstdint>
#include <string>
#include <vector>

#include "ofdrshape/calibration.hpp"
#include "ofdrshape/metrics.hpp"
#include "ofdrshape/reconstruction.hpp"
#include "ofdrshape/simulator.hpp"
#include "ofdrshape/trajectory.hpp"

namespace ofdrshape::pipeline {

/// Ground-truth pose at the first gauge of `profile`; reconstructions start here.
Pose2D registered_start(const trajectory::TrajectorySpec& spec, const StrainProfile& profile);

/// Reconstructs every frame. With a trajectory, each shape starts at the registered
/// pose; without one, at (origin_offset, 0, 0) heading along +x.
std::vector<PlanarShape> reconstruct_series(const simulator::FrameSeries& series,
                                            const calibration::CalibrationModel& model,
                                            const reconstruction::ReconstructionOptions& options,
                                            const trajectory::TrajectorySpec* spec);

struct FrameError {
  double tip_mm = 0.0;
  double shape_mm = 0.0;
};

/// Tip and shape error of one reconstructed frame against the exact centerline
/// sampled on the frame's own gauge grid.
FrameError evaluate_frame(const PlanarShape& measured, const trajectory::TrajectorySpec& spec);

/// One trial: errors averaged over all frames of the insertion run.
metrics::EvaluationReport evaluate_run(const std::string& label,
                                       const std::vector<PlanarShape>& shapes,
                                       const trajectory::TrajectorySpec& spec,
                                       double instrument_length_mm = kDefaultSensingLengthMm);

struct RunSettings {
  simulator::ComplianceModel compliance{};
  simulator::NoiseModel noise{};
  simulator::SimulationConfig simulation{};
  reconstruction::ReconstructionOptions reconstruction{};
  double increment_mm = 10.0;
  double speed_mm_s = 1.5;
};

struct RunResult {
  simulator::FrameSeries series;
  std::vector<PlanarShape> shapes;
  metrics::EvaluationReport report;
};

RunResult run_trial(const trajectory::TrajectorySpec& spec,
                    const calibration::CalibrationModel& model, const RunSettings& settings);

enum class Experiment { kFreeBending, kDrilling };

struct TableConfig {
  std::string label;  // trajectory preset
  Experiment experiment;
  double sigma_ue;
};

inline constexpr double kFreeBendingSigmaUe = 20.0;
inline constexpr double kDrillingSigmaUe = 30.0;
inline constexpr int kTrialsPerConfig = 3;

/// R117, R50, R39 free bending; Rinf, R121, R53, R46 drilling.
std::vector<TableConfig> table_configs();

/// Noise seed for trial `trial` of configuration `config_index` under a run seed.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t config_index, int trial);

struct ConfigResult {
  TableConfig config;
  metrics::EvaluationReport report;  // aggregated over trials
  RunResult first_trial;
};

ConfigResult run_config(const TableConfig& config, std::size_t config_index, std::uint64_t seed,
                        const calibration::CalibrationModel& model, RunSettings base = {});

}  // namespace ofdrshape::pipeline
