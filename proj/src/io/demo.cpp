#include "ofdrshape/io/demo.hpp"

#include <spdlog/spdlog.h>

#include "ofdrshape/error.hpp"
#include "ofdrshape/io/csv.hpp"
#include "ofdrshape/io/formats.hpp"
#include "ofdrshape/io/plots.hpp"
#include "ofdrshape/pipeline.hpp"

namespace ofdrshape::io {

std::vector<metrics::EvaluationReport> run_demo(std::uint64_t seed,
                                                const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir.string() + "'");

  const auto model = calibration::CalibrationModel::reference();
  const auto configs = pipeline::table_configs();
  std::vector<metrics::EvaluationReport> reports;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& cfg = configs[i];
    const auto result = pipeline::run_config(cfg, i, seed, model);
    reports.push_back(result.report);
    spdlog::info("{}: tip {:.3f} mm, shape {:.3f} mm", cfg.label, result.report.tip_error_mm,
                 result.report.shape_error_mm);

    const auto spec = trajectory::preset(cfg.label);
    FrameMetadata meta;
    meta.seed = pipeline::trial_seed(seed, i, 0);
    meta.sigma_ue = cfg.sigma_ue;
    meta.compliance = simulator::ComplianceModel{};
    meta.model = model;
    meta.trajectory_label = cfg.label;
    write_frames(out_dir / ("frames_" + cfg.label + ".csv"), result.first_trial.series, meta);

    const char* kind =
        cfg.experiment == pipeline::Experiment::kFreeBending ? "free bending" : "drilling";
    emit_strain_plot(out_dir / ("strain_" + cfg.label + ".svg"), result.first_trial.series,
                     cfg.label + " " + kind + ": strain along the sensor");
    const PlanarShape expected = trajectory::centerline(spec, kDefaultGaugePitchMm);
    emit_shape_plot(out_dir / ("shape_" + cfg.label + ".svg"),
                    {result.first_trial.shapes.back()}, expected,
                    cfg.label + " " + kind + ": reconstructed vs expected");
  }
  write_text(out_dir / "table1.csv", reports_to_csv(reports));
  return reports;
}

}  // namespace ofdrshape::io
