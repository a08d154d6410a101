#include "ofdrshape/pipeline.hpp"

#include "ofdrshape/error.hpp"

namespace ofdrshape::pipeline {

Pose2D registered_start(const trajectory::TrajectorySpec& spec, const StrainProfile& profile) {
  return spec.pose_at(profile.origin_offset);
}

std::vector<PlanarShape> reconstruct_series(const simulator::FrameSeries& series,
                                            const calibration::CalibrationModel& model,
                                            const reconstruction::ReconstructionOptions& options,
                                            const trajectory::TrajectorySpec* spec) {
  std::vector<PlanarShape> shapes;
  shapes.reserve(series.frames.size());
  for (const auto& frame : series.frames) {
    const StrainProfile windowed =
        options.sensing_length_mm > 0.0
            ? reconstruction::select_sensing_window(frame.profile, options.sensing_length_mm)
            : frame.profile;
    const Pose2D start =
        spec ? registered_start(*spec, windowed) : Pose2D{windowed.origin_offset, 0.0, 0.0};
    shapes.push_back(reconstruction::reconstruct_frame(windowed, model,
                                                       options.smoothing_window_mm, start));
  }
  return shapes;
}

FrameError evaluate_frame(const PlanarShape& measured, const trajectory::TrajectorySpec& spec) {
  const PlanarShape truth = trajectory::sample_poses(spec, measured.arc_positions);
  return {metrics::tip_error(measured, truth), metrics::shape_error(measured, truth)};
}

metrics::EvaluationReport evaluate_run(const std::string& label,
                                       const std::vector<PlanarShape>& shapes,
                                       const trajectory::TrajectorySpec& spec,
                                       double instrument_length_mm) {
  if (shapes.empty()) throw DomainError("evaluate: no shapes");
  double tip = 0.0;
  double shape = 0.0;
  for (const auto& s : shapes) {
    const FrameError e = evaluate_frame(s, spec);
    tip += e.tip_mm;
    shape += e.shape_mm;
  }
  const auto n = static_cast<double>(shapes.size());
  return metrics::make_report(label, tip / n, shape / n, instrument_length_mm, 1);
}

RunResult run_trial(const trajectory::TrajectorySpec& spec,
                    const calibration::CalibrationModel& model, const RunSettings& settings) {
  const auto schedule = trajectory::make_schedule(spec, settings.increment_mm, settings.speed_mm_s);
  RunResult result;
  result.series = simulator::simulate_series(spec, schedule, model, settings.compliance,
                                             settings.noise, settings.simulation);
  result.shapes = reconstruct_series(result.series, model, settings.reconstruction, &spec);
  result.report = evaluate_run(spec.label(), result.shapes, spec,
                               settings.simulation.sensing_length_mm);
  return result;
}

std::vector<TableConfig> table_configs() {
  return {
      {"R117", Experiment::kFreeBending, kFreeBendingSigmaUe},
      {"R50", Experiment::kFreeBending, kFreeBendingSigmaUe},
      {"R39", Experiment::kFreeBending, kFreeBendingSigmaUe},
      {"Rinf", Experiment::kDrilling, kDrillingSigmaUe},
      {"R121", Experiment::kDrilling, kDrillingSigmaUe},
      {"R53", Experiment::kDrilling, kDrillingSigmaUe},
      {"R46", Experiment::kDrilling, kDrillingSigmaUe},
  };
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t config_index, int trial) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(config_index) * 101ULL +
         static_cast<std::uint64_t>(trial);
}

ConfigResult run_config(const TableConfig& config, std::size_t config_index, std::uint64_t seed,
                        const calibration::CalibrationModel& model, RunSettings base) {
  const auto spec = trajectory::preset(config.label);
  ConfigResult out;
  out.config = config;
  std::vector<metrics::EvaluationReport> reports;
  for (int trial = 0; trial < kTrialsPerConfig; ++trial) {
    RunSettings settings = base;
    settings.noise.sigma_ue = config.sigma_ue;
    settings.noise.seed = trial_seed(seed, config_index, trial);
    RunResult run = run_trial(spec, model, settings);
    reports.push_back(run.report);
    if (trial == 0) out.first_trial = std::move(run);
  }
  out.report = metrics::aggregate_trials(reports);
  return out;
}

}  // namespace ofdrshape::pipeline
