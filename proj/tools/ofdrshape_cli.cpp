// ofdrshape: calibration, simulation, reconstruction and evaluation pipeline.
//
// Exit codes: 0 success, 1 usage error, 2 data/domain error, 3 I/O error.

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "ofdrshape/calibration.hpp"
#include "ofdrshape/error.hpp"
#include "ofdrshape/io/csv.hpp"
#include "ofdrshape/io/demo.hpp"
#include "ofdrshape/io/formats.hpp"
#include "ofdrshape/io/log.hpp"
#include "ofdrshape/io/plots.hpp"
#include "ofdrshape/io/replay.hpp"
#include "ofdrshape/io/run_config.hpp"
#include "ofdrshape/kernels/kernels.hpp"
#include "ofdrshape/pipeline.hpp"

namespace fs = std::filesystem;
using namespace ofdrshape;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitIo = 3;

struct SimulateOptions {
  double sigma_ue = 20.0;
  double attenuation = 0.65;
  double ramp_mm = 15.0;
  double increment_mm = 10.0;
  double speed_mm_s = 1.5;
  double rate_hz = kDefaultFrameRateHz;
};

calibration::CalibrationModel load_model(const io::RunConfig& cfg) {
  if (cfg.calibration_path.empty()) return calibration::CalibrationModel::reference();
  return io::read_model(cfg.calibration_path);
}

std::string residuals_csv(const char* branch, const calibration::ResidualStats& stats) {
  std::string out;
  for (const auto& r : stats.samples) {
    out += std::string(branch) + "," + io::format_double(r.strain_ue) + "," +
           io::format_double(r.radius_mm) + "," + io::format_double(r.predicted_radius_mm) + "," +
           io::format_double(r.log_residual) + "," + io::format_double(r.radius_residual) + "\n";
  }
  return out;
}

int cmd_calibrate(const io::RunConfig& cfg, double dead_zone) {
  if (cfg.calibration_path.empty()) throw CLI::RequiredError("--calibration");
  const auto samples = io::read_samples(cfg.calibration_path);
  const auto model = calibration::fit_calibration(samples, dead_zone);
  io::write_model(cfg.output_dir / "model.json", model);

  std::string residuals = "branch,strain_ue,radius_mm,predicted_mm,log_residual,radius_residual\n";
  for (auto dir : {calibration::BendDirection::kPositive, calibration::BendDirection::kNegative}) {
    std::vector<calibration::StrainRadius> pts;
    for (const auto& s : samples) {
      if (!s.is_straight() && s.direction == dir) pts.push_back({s.strain_ue, s.radius_mm});
    }
    const auto stats = calibration::fit_residuals(model.branch(dir), pts);
    const char* name = dir == calibration::BendDirection::kPositive ? "pos" : "neg";
    residuals += residuals_csv(name, stats);
    fmt::print("{}: radius = {:.6g} * strain^{:.6g}  (rmse {:.4g} mm, log-rmse {:.4g}, n={})\n",
               name, model.branch(dir).coefficient(), model.branch(dir).exponent(),
               stats.rmse_radius, stats.rmse_log, pts.size());
  }
  io::write_text(cfg.output_dir / "residuals.csv", residuals);
  return kExitOk;
}

int cmd_simulate(const io::RunConfig& cfg, const SimulateOptions& opt) {
  if (cfg.trajectory_path.empty()) throw CLI::RequiredError("--trajectory");
  const auto spec = io::load_trajectory(cfg.trajectory_path);
  const auto model = load_model(cfg);
  const auto schedule = trajectory::make_schedule(spec, opt.increment_mm, opt.speed_mm_s);
  const simulator::ComplianceModel compliance{opt.attenuation, opt.ramp_mm};
  const simulator::NoiseModel noise{opt.sigma_ue, cfg.seed};
  simulator::SimulationConfig sim;
  sim.sensing_length_mm = cfg.sensing_length_mm;
  sim.gauge_pitch_mm = cfg.gauge_pitch_mm;
  sim.rate_hz = opt.rate_hz;
  const auto series = simulator::simulate_series(spec, schedule, model, compliance, noise, sim);

  io::FrameMetadata meta;
  meta.rate_hz = opt.rate_hz;
  meta.gauge_pitch_mm = cfg.gauge_pitch_mm;
  meta.sensing_length_mm = cfg.sensing_length_mm;
  meta.seed = cfg.seed;
  meta.sigma_ue = opt.sigma_ue;
  meta.compliance = compliance;
  meta.model = model;
  meta.trajectory_label = spec.label();
  io::write_frames(cfg.output_dir / "frames.csv", series, meta);
  io::emit_strain_plot(cfg.output_dir / "strain.svg", series, spec.label() + ": simulated strain");
  fmt::print("wrote {} frames to {}\n", series.frames.size(), (cfg.output_dir / "frames.csv").string());
  return kExitOk;
}

int cmd_reconstruct(const io::RunConfig& cfg, const std::string& baseline_path) {
  if (cfg.frames_path.empty()) throw CLI::RequiredError("--frames");
  auto series = io::read_frames(cfg.frames_path);
  if (!baseline_path.empty()) {
    const auto baseline = io::read_frames(baseline_path);
    if (baseline.frames.empty()) throw DomainError("baseline file has no frames");
    series = io::tare(series, baseline.frames.front().profile);
  }
  const auto model = load_model(cfg);
  std::optional<trajectory::TrajectorySpec> spec;
  if (!cfg.trajectory_path.empty()) spec = io::load_trajectory(cfg.trajectory_path);

  const reconstruction::ReconstructionOptions options{cfg.smoothing_window_mm,
                                                      cfg.sensing_length_mm};
  const auto shapes = pipeline::reconstruct_series(series, model, options, spec ? &*spec : nullptr);
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    io::write_text(cfg.output_dir / fmt::format("shape_{:04d}.csv", k), io::shape_to_csv(shapes[k]));
  }
  if (spec) {
    io::emit_shape_plot(cfg.output_dir / "shapes.svg", shapes,
                        trajectory::centerline(*spec, cfg.gauge_pitch_mm),
                        spec->label() + ": reconstructed shapes");
  }
  fmt::print("wrote {} shapes to {}\n", shapes.size(), cfg.output_dir.string());
  return kExitOk;
}

int cmd_evaluate(const io::RunConfig& cfg, const std::string& shapes_dir, std::string label) {
  if (cfg.trajectory_path.empty()) throw CLI::RequiredError("--trajectory");
  if (shapes_dir.empty()) throw CLI::RequiredError("--shapes");
  if (!fs::is_directory(shapes_dir)) throw IoError("shapes directory '" + shapes_dir + "' not found");
  const auto spec = io::load_trajectory(cfg.trajectory_path);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(shapes_dir)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("shape_", 0) == 0 && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw DomainError("no shape_*.csv files in '" + shapes_dir + "'");
  std::vector<PlanarShape> shapes;
  for (const auto& f : files) shapes.push_back(io::read_shape(f));
  if (label.empty()) label = spec.label();
  const auto report = pipeline::evaluate_run(label, shapes, spec, cfg.sensing_length_mm);
  io::write_text(cfg.output_dir / "report.csv", io::reports_to_csv({report}));
  fmt::print("{}: tip {:.3f} mm [{:.2f} %], shape {:.3f} mm [{:.2f} %] over {} frames\n", label,
             report.tip_error_mm, report.tip_error_pct, report.shape_error_mm,
             report.shape_error_pct, shapes.size());
  return kExitOk;
}

int cmd_replay(const io::RunConfig& cfg, double rate_hz) {
  if (cfg.frames_path.empty()) throw CLI::RequiredError("--frames");
  const auto series = io::read_frames(cfg.frames_path);
  std::optional<calibration::CalibrationModel> model;
  if (!cfg.calibration_path.empty()) model = io::read_model(cfg.calibration_path);
  const io::FrameSink sink = [&](std::size_t idx, const simulator::Frame& frame) {
    if (model) {
      const auto shape = reconstruction::reconstruct_frame(
          frame.profile, *model, cfg.smoothing_window_mm,
          Pose2D{frame.profile.origin_offset, 0.0, 0.0});
      fmt::print("frame {} depth {:g} tip ({:.3f}, {:.3f})\n", idx, frame.depth_mm,
                 shape.tip().x, shape.tip().y);
    } else {
      fmt::print("frame {} depth {:g}\n", idx, frame.depth_mm);
    }
  };
  const auto report = io::replay(series, rate_hz, sink);
  fmt::print("emitted {} dropped {} wall {:.3f} s jitter mean {:.3f} ms max {:.3f} ms\n",
             report.emitted, report.dropped, report.wall_time_s, report.mean_jitter_ms,
             report.max_jitter_ms);
  if (report.aborted) throw DomainError("replay aborted: " + report.error);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  io::init_logging();

  CLI::App app{"Shape sensing pipeline: calibrate, simulate, reconstruct, evaluate, replay"};
  app.require_subcommand(1);

  io::RunConfig cfg;
  SimulateOptions sim;
  double dead_zone = calibration::kDefaultDeadZoneUe;
  double rate_hz = kDefaultFrameRateHz;
  std::string baseline_path;
  std::string shapes_dir;
  std::string label;
  std::string out = ".";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "Output directory")->capture_default_str();
    cmd->add_option("--gauge-pitch-mm", cfg.gauge_pitch_mm, "Gauge pitch (mm)")->capture_default_str();
    cmd->add_option("--sensing-length-mm", cfg.sensing_length_mm, "Flexible sensing length (mm)")
        ->capture_default_str();
  };

  auto* calibrate = app.add_subcommand("calibrate", "Fit the strain/radius power laws from jig samples");
  calibrate->add_option("--calibration", cfg.calibration_path, "Calibration samples CSV")->required();
  calibrate->add_option("--dead-zone-ue", dead_zone, "Dead-zone threshold (microstrain)")->capture_default_str();
  add_common(calibrate);

  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic frame series");
  simulate->add_option("--trajectory", cfg.trajectory_path, "Trajectory JSON or preset label")->required();
  simulate->add_option("--calibration", cfg.calibration_path, "Model JSON (default: reference model)");
  simulate->add_option("--seed", cfg.seed, "Noise seed")->capture_default_str();
  simulate->add_option("--sigma-ue", sim.sigma_ue, "Gauge noise sigma (microstrain)")->capture_default_str();
  simulate->add_option("--attenuation", sim.attenuation, "Compliance attenuation in (0,1]")->capture_default_str();
  simulate->add_option("--ramp-mm", sim.ramp_mm, "Compliance ramp length (mm)")->capture_default_str();
  simulate->add_option("--increment-mm", sim.increment_mm, "Insertion increment (mm)")->capture_default_str();
  simulate->add_option("--rate", sim.rate_hz, "Frame rate metadata (Hz)")->capture_default_str();
  add_common(simulate);

  auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct shapes from a frame series");
  reconstruct->add_option("--frames", cfg.frames_path, "Frame series CSV")->required();
  reconstruct->add_option("--calibration", cfg.calibration_path, "Model JSON (default: reference model)");
  reconstruct->add_option("--trajectory", cfg.trajectory_path, "Register shapes to this trajectory");
  reconstruct->add_option("--window-mm", cfg.smoothing_window_mm, "Smoothing window (mm), 0 disables")
      ->capture_default_str();
  reconstruct->add_option("--baseline", baseline_path, "Frame CSV whose first frame is subtracted (taring)");
  add_common(reconstruct);

  auto* evaluate = app.add_subcommand("evaluate", "Tip/shape errors of reconstructed shapes");
  evaluate->add_option("--shapes", shapes_dir, "Directory of shape_*.csv files")->required();
  evaluate->add_option("--trajectory", cfg.trajectory_path, "Ground-truth trajectory JSON or preset")->required();
  evaluate->add_option("--label", label, "Report label (default: trajectory label)");
  add_common(evaluate);

  auto* replay_cmd = app.add_subcommand("replay", "Replay frames at a fixed rate");
  replay_cmd->add_option("--frames", cfg.frames_path, "Frame series CSV")->required();
  replay_cmd->add_option("--rate", rate_hz, "Replay rate (Hz)")->capture_default_str();
  replay_cmd->add_option("--calibration", cfg.calibration_path, "Reconstruct each frame with this model");
  replay_cmd->add_option("--window-mm", cfg.smoothing_window_mm, "Smoothing window (mm)")->capture_default_str();
  add_common(replay_cmd);

  auto* demo = app.add_subcommand("demo", "Reproduce the seven free-bending/drilling configurations");
  demo->add_option("--seed", cfg.seed, "Run seed")->capture_default_str();
  add_common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.output_dir = out;
    io::validate(cfg);
    spdlog::debug("kernels: {}", kernels::to_string(kernels::active().isa));
    if (*calibrate) return cmd_calibrate(cfg, dead_zone);
    if (*simulate) return cmd_simulate(cfg, sim);
    if (*reconstruct) return cmd_reconstruct(cfg, baseline_path);
    if (*evaluate) return cmd_evaluate(cfg, shapes_dir, label);
    if (*replay_cmd) return cmd_replay(cfg, rate_hz);
    if (*demo) {
      const auto reports = io::run_demo(cfg.seed, cfg.output_dir);
      std::cout << io::reports_to_csv(reports);
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const IoError& e) {
    spdlog::error("{}", e.what());
    return kExitIo;
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return kExitData;
  } catch (const nlohmann::json::exception& e) {
    spdlog::error("{}", e.what());
    return kExitData;
  }
  return kExitUsage;
}
