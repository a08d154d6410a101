#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "ofdrshape/calibration.hpp"
#include "ofdrshape/error.hpp"
#include "ofdrshape/io/csv.hpp"
#include "ofdrshape/io/formats.hpp"
#include "ofdrshape/io/plots.hpp"
#include "ofdrshape/io/run_config.hpp"
#include "ofdrshape/simulator.hpp"
#include "ofdrshape/trajectory.hpp"

using namespace ofdrshape;
using namespace ofdrshape::io;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("ofdrshape_io_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  [[nodiscard]] fs::path operator/(const std::string& name) const { return path_ / name; }
  [[nodiscard]] const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

simulator::FrameSeries noisy_series(std::uint64_t seed) {
  const auto spec = trajectory::preset("R53");
  return simulator::simulate_series(spec, trajectory::make_schedule(spec),
                                    calibration::CalibrationModel::reference(), {}, {20.0, seed});
}

simulator::FrameSeries constant_series(double value, std::size_t frames) {
  simulator::FrameSeries s;
  for (std::size_t k = 0; k < frames; ++k) {
    s.frames.push_back({10.0 * (k + 1), StrainProfile{0.65, 0.0, std::vector<double>(20, value), 0.0}});
  }
  return s;
}

void expect_close(double a, double b) { EXPECT_LE(std::abs(a - b), 1e-9 * std::max(1.0, std::abs(b))); }

}  // namespace

TEST(Csv, FormatDouble) {
  EXPECT_EQ(format_double(1.5), "1.5");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(INFINITY), "inf");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(parse_double("inf", "t"), INFINITY);
  EXPECT_THROW(parse_double("abc", "t"), DomainError);
  EXPECT_THROW(parse_int("1.5", "t"), DomainError);
}

TEST(Csv, HeaderAndFieldChecks) {
  TempDir dir;
  write_text(dir / "bad.csv", "a,b\n1,2\n");
  EXPECT_THROW(read_csv(dir / "bad.csv", "a,c"), DomainError);
  write_text(dir / "short.csv", "a,b\n1\n");
  EXPECT_THROW(read_csv(dir / "short.csv", "a,b"), DomainError);
  EXPECT_THROW(read_csv(dir / "missing.csv", "a,b"), IoError);
}

TEST(Formats, SamplesRoundTrip) {
  TempDir dir;
  std::vector<calibration::CalibrationSample> samples{
      {35.0, calibration::BendDirection::kPositive, 4312.25, 1},
      {INFINITY, calibration::BendDirection::kPositive, 3.5, 1},
      {100.0, calibration::BendDirection::kNegative, 1493.0, 2}};
  write_text(dir / "s.csv", samples_to_csv(samples));
  const auto back = read_samples(dir / "s.csv");
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back[i].radius_mm, samples[i].radius_mm);
    EXPECT_EQ(back[i].direction, samples[i].direction);
    EXPECT_EQ(back[i].strain_ue, samples[i].strain_ue);
    EXPECT_EQ(back[i].trial_id, samples[i].trial_id);
  }
  write_text(dir / "d.csv", std::string(kSamplesHeader) + "\n50,up,100,1\n");
  EXPECT_THROW(read_samples(dir / "d.csv"), DomainError);
}

TEST(Formats, ModelRoundTrip) {
  TempDir dir;
  const calibration::CalibrationModel model({283391.68832307558, -1.0796851092809878},
                                            {150000.0, -0.999}, 12.5);
  write_model(dir / "m.json", model);
  const auto back = read_model(dir / "m.json");
  expect_close(back.positive().coefficient(), model.positive().coefficient());
  expect_close(back.positive().exponent(), model.positive().exponent());
  EXPECT_EQ(back.negative(), model.negative());
  EXPECT_EQ(back.dead_zone(), 12.5);
  write_text(dir / "bad.json", "{\"positive\": {}}");
  EXPECT_THROW(read_model(dir / "bad.json"), DomainError);
  write_text(dir / "garbage.json", "{{");
  EXPECT_THROW(read_model(dir / "garbage.json"), DomainError);
}

TEST(Formats, TrajectoryRoundTripAndPresets) {
  TempDir dir;
  const auto spec = trajectory::j_shape("J", 12.5, 40.0, -77.0);
  write_text(dir / "t.json", trajectory_to_json(spec).dump(2));
  EXPECT_EQ(load_trajectory((dir / "t.json").string()), spec);
  EXPECT_EQ(load_trajectory("R46"), trajectory::preset("R46"));
  EXPECT_THROW(load_trajectory((dir / "none.json").string()), IoError);
  EXPECT_THROW(load_trajectory("R7"), DomainError);
}

TEST(Formats, FramesRoundTrip) {
  TempDir dir;
  const auto series = noisy_series(4);
  FrameMetadata meta;
  meta.seed = 4;
  meta.sigma_ue = 20.0;
  meta.compliance = simulator::ComplianceModel{};
  meta.model = calibration::CalibrationModel::reference();
  meta.trajectory_label = "R53";
  write_frames(dir / "frames.csv", series, meta);
  EXPECT_TRUE(fs::exists(dir / "frames.json"));
  const auto back = read_frames(dir / "frames.csv");
  ASSERT_EQ(back.frames.size(), series.frames.size());
  EXPECT_EQ(back.rate_hz, series.rate_hz);
  for (std::size_t k = 0; k < series.frames.size(); ++k) {
    const auto& a = series.frames[k].profile;
    const auto& b = back.frames[k].profile;
    EXPECT_EQ(back.frames[k].depth_mm, series.frames[k].depth_mm);
    EXPECT_EQ(b.gauge_pitch, a.gauge_pitch);
    expect_close(b.origin_offset, a.origin_offset);
    expect_close(b.timestamp, a.timestamp);
    ASSERT_EQ(b.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) expect_close(b.samples[i], a.samples[i]);
  }
  const auto meta_back = metadata_from_json(metadata_to_json(meta));
  EXPECT_EQ(meta_back.seed, meta.seed);
  EXPECT_EQ(meta_back.trajectory_label, "R53");
  EXPECT_EQ(meta_back.model, meta.model);
}

TEST(Formats, FramesWithoutSidecarInferPitch) {
  TempDir dir;
  write_text(dir / "f.csv", frames_to_csv(noisy_series(1)));
  const auto back = read_frames(dir / "f.csv");
  expect_close(back.frames[0].profile.gauge_pitch, 0.65);
  EXPECT_EQ(back.rate_hz, kDefaultFrameRateHz);
}

TEST(Formats, FramesRejectBadIndexing) {
  TempDir dir;
  write_text(dir / "f.csv", std::string(kFramesHeader) + "\n1,10,0,5\n");
  EXPECT_THROW(read_frames(dir / "f.csv"), DomainError);
  write_text(dir / "g.csv", std::string(kFramesHeader) + "\n0,10,0,5\n0,10,0.65,nan\n");
  EXPECT_THROW(read_frames(dir / "g.csv"), DomainError);
}

TEST(Formats, ShapeAndReportRoundTrip) {
  TempDir dir;
  PlanarShape shape;
  for (int i = 0; i < 10; ++i) {
    shape.arc_positions.push_back(-2.0 + 0.65 * i);
    shape.points.push_back({std::sin(i * 0.3) * 7.1, std::cos(i * 0.2) / 3.0, 0.01 * i});
  }
  write_text(dir / "shape.csv", shape_to_csv(shape));
  const auto back = read_shape(dir / "shape.csv");
  ASSERT_EQ(back.size(), shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    expect_close(back.arc_positions[i], shape.arc_positions[i]);
    expect_close(back.points[i].x, shape.points[i].x);
    expect_close(back.points[i].y, shape.points[i].y);
    expect_close(back.points[i].theta, shape.points[i].theta);
  }

  const std::vector<metrics::EvaluationReport> reports{metrics::make_report("R39", 1.32, 0.41, 45.0, 3),
                                                       metrics::make_report("Rinf", 0.2, 0.07)};
  write_text(dir / "r.csv", reports_to_csv(reports));
  const auto rb = read_reports(dir / "r.csv");
  ASSERT_EQ(rb.size(), 2u);
  EXPECT_EQ(rb[0].label, "R39");
  expect_close(rb[0].tip_error_pct, reports[0].tip_error_pct);
  expect_close(rb[1].shape_error_mm, 0.07);
  EXPECT_EQ(rb[0].trials, 3);
}

TEST(Tare, Examples) {
  const auto frames = noisy_series(9);
  const auto first = tare(frames, frames.frames[0].profile);
  for (double v : first.frames[0].profile.samples) EXPECT_EQ(v, 0.0);

  StrainProfile zero = frames.frames[0].profile;
  std::fill(zero.samples.begin(), zero.samples.end(), 0.0);
  const auto same = tare(frames, zero);
  for (std::size_t k = 0; k < frames.frames.size(); ++k) {
    EXPECT_EQ(same.frames[k].profile.samples, frames.frames[k].profile.samples);
  }

  const auto c = tare(constant_series(3770.0, 3), StrainProfile{0.65, 0.0, std::vector<double>(20, 50.0), 0.0});
  for (const auto& f : c.frames) {
    for (double v : f.profile.samples) EXPECT_EQ(v, 3720.0);
  }
  EXPECT_THROW(tare(constant_series(1.0, 2), StrainProfile{0.65, 0.0, {1.0, 2.0}, 0.0}),
               DomainError);
}

TEST(Plots, StrainPlot) {
  EXPECT_THROW(strain_plot_svg({}, "empty"), DomainError);
  TempDir dir;
  EXPECT_THROW(emit_strain_plot(dir / "e.svg", {}, "empty"), DomainError);
  EXPECT_FALSE(fs::exists(dir / "e.svg"));

  const auto straight = constant_series(0.0, 1);
  const std::string svg = strain_plot_svg(straight, "straight");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_EQ(svg, strain_plot_svg(straight, "straight"));
}

TEST(Plots, ShapePlotIsDeterministic) {
  const auto spec = trajectory::preset("R39");
  const auto line = trajectory::centerline(spec, 0.65);
  const std::string a = shape_plot_svg({line}, line, kTubeInnerRadiusMm, "R39");
  EXPECT_EQ(a, shape_plot_svg({line}, line, kTubeInnerRadiusMm, "R39"));
  EXPECT_NE(a.find("stroke-dasharray"), std::string::npos);
}

TEST(RunConfig, Validation) {
  TempDir dir;
  RunConfig ok;
  ok.output_dir = dir / "out" / "nested";
  EXPECT_NO_THROW(validate(ok));
  EXPECT_TRUE(fs::is_directory(ok.output_dir));

  RunConfig bad = ok;
  bad.smoothing_window_mm = -1.0;
  EXPECT_THROW(validate(bad), DomainError);
  bad = ok;
  bad.gauge_pitch_mm = 0.0;
  EXPECT_THROW(validate(bad), DomainError);
  bad = ok;
  bad.sensing_length_mm = NAN;
  EXPECT_THROW(validate(bad), DomainError);
  bad = ok;
  bad.calibration_path = (dir / "nope.json").string();
  EXPECT_THROW(validate(bad), IoError);
}
