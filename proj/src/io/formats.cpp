#include "ofdrshape/io/formats.hpp"

#include <cmath>
#include <map>

#include "ofdrshape/error.hpp"
#include "ofdrshape/io/csv.hpp"
#include "ofdrshape/kernels/kernels.hpp"
#include "ofdrshape/reconstruction.hpp"

namespace ofdrshape::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <typename T>
T json_get(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(where + ": missing key '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(where + ": bad value for '" + key + "': " + e.what());
  }
}

json parse_json_file(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(path.string() + ": invalid JSON: " + e.what());
  }
}

// JSON numbers written through the same 12-digit formatting as the CSVs.
ordered_json number(double value) { return ordered_json::parse(format_double(value)); }

}  // namespace

std::vector<calibration::CalibrationSample> read_samples(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path, kSamplesHeader);
  std::vector<calibration::CalibrationSample> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string where = path.string() + ":" + std::to_string(table.lines[r]);
    calibration::CalibrationSample s;
    s.radius_mm = parse_double(row[0], where);
    if (row[1] == "pos") {
      s.direction = calibration::BendDirection::kPositive;
    } else if (row[1] == "neg") {
      s.direction = calibration::BendDirection::kNegative;
    } else {
      throw DomainError(where + ": direction must be 'pos' or 'neg'");
    }
    s.strain_ue = parse_double(row[2], where);
    s.trial_id = static_cast<int>(parse_int(row[3], where));
    if (!(s.radius_mm > 0.0)) throw DomainError(where + ": radius must be > 0 (or inf)");
    if (!(s.strain_ue >= 0.0) || !std::isfinite(s.strain_ue)) {
      throw DomainError(where + ": strain magnitude must be finite and >= 0");
    }
    out.push_back(s);
  }
  return out;
}

std::string samples_to_csv(const std::vector<calibration::CalibrationSample>& samples) {
  std::string out = std::string(kSamplesHeader) + "\n";
  for (const auto& s : samples) {
    out += format_double(s.radius_mm) + "," +
           (s.direction == calibration::BendDirection::kPositive ? "pos" : "neg") + "," +
           format_double(s.strain_ue) + "," + std::to_string(s.trial_id) + "\n";
  }
  return out;
}

ordered_json model_to_json(const calibration::CalibrationModel& model) {
  ordered_json j;
  j["positive"] = {{"a", number(model.positive().coefficient())},
                   {"b", number(model.positive().exponent())}};
  j["negative"] = {{"a", number(model.negative().coefficient())},
                   {"b", number(model.negative().exponent())}};
  j["dead_zone_ue"] = number(model.dead_zone());
  return j;
}

calibration::CalibrationModel model_from_json(const json& j) {
  const std::string where = "calibration model";
  const json pos = json_get<json>(j, "positive", where);
  const json neg = json_get<json>(j, "negative", where);
  return calibration::CalibrationModel(
      calibration::PowerLaw(json_get<double>(pos, "a", where + ".positive"),
                            json_get<double>(pos, "b", where + ".positive")),
      calibration::PowerLaw(json_get<double>(neg, "a", where + ".negative"),
                            json_get<double>(neg, "b", where + ".negative")),
      json_get<double>(j, "dead_zone_ue", where));
}

calibration::CalibrationModel read_model(const std::filesystem::path& path) {
  return model_from_json(parse_json_file(path));
}

void write_model(const std::filesystem::path& path, const calibration::CalibrationModel& model) {
  write_text(path, model_to_json(model).dump(2) + "\n");
}

ordered_json trajectory_to_json(const trajectory::TrajectorySpec& spec) {
  ordered_json j;
  j["label"] = spec.label();
  j["segments"] = ordered_json::array();
  for (const auto& seg : spec.segments()) {
    ordered_json s;
    s["kind"] = seg.kind == trajectory::SegmentKind::kArc ? "arc" : "straight";
    s["length_mm"] = number(seg.length_mm);
    if (seg.kind == trajectory::SegmentKind::kArc) s["radius_mm"] = number(seg.signed_radius_mm);
    j["segments"].push_back(s);
  }
  return j;
}

trajectory::TrajectorySpec trajectory_from_json(const json& j) {
  const std::string label = json_get<std::string>(j, "label", "trajectory");
  const json segs = json_get<json>(j, "segments", "trajectory '" + label + "'");
  if (!segs.is_array()) throw DomainError("trajectory '" + label + "': segments must be an array");
  std::vector<trajectory::Segment> segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string where = "trajectory '" + label + "' segment " + std::to_string(i);
    const auto kind = json_get<std::string>(segs[i], "kind", where);
    const double length = json_get<double>(segs[i], "length_mm", where);
    if (kind == "straight") {
      segments.push_back(trajectory::Segment::straight(length));
    } else if (kind == "arc") {
      segments.push_back(trajectory::Segment::arc(length, json_get<double>(segs[i], "radius_mm", where)));
    } else {
      throw DomainError(where + ": kind must be 'straight' or 'arc'");
    }
  }
  return trajectory::TrajectorySpec(label, std::move(segments));
}

trajectory::TrajectorySpec load_trajectory(const std::string& path_or_preset) {
  if (std::filesystem::exists(path_or_preset)) {
    return trajectory_from_json(parse_json_file(path_or_preset));
  }
  if (path_or_preset.find('/') == std::string::npos &&
      path_or_preset.find(".json") == std::string::npos) {
    return trajectory::preset(path_or_preset);
  }
  throw IoError("cannot open trajectory '" + path_or_preset + "'");
}

std::string frames_to_csv(const simulator::FrameSeries& series) {
  std::string out = std::string(kFramesHeader) + "\n";
  for (std::size_t k = 0; k < series.frames.size(); ++k) {
    const auto& f = series.frames[k];
    const std::string prefix = std::to_string(k) + "," + format_double(f.depth_mm) + ",";
    for (std::size_t i = 0; i < f.profile.size(); ++i) {
      out += prefix + format_double(f.profile.position(i)) + "," +
             format_double(f.profile.samples[i]) + "\n";
    }
  }
  return out;
}

ordered_json metadata_to_json(const FrameMetadata& meta) {
  ordered_json j;
  j["rate_hz"] = number(meta.rate_hz);
  j["gauge_pitch_mm"] = number(meta.gauge_pitch_mm);
  j["sensing_length_mm"] = number(meta.sensing_length_mm);
  if (meta.seed) j["seed"] = *meta.seed;
  if (meta.sigma_ue) j["sigma_ue"] = number(*meta.sigma_ue);
  if (meta.compliance) {
    j["compliance"] = {{"attenuation", number(meta.compliance->attenuation)},
                       {"ramp_length_mm", number(meta.compliance->ramp_length_mm)}};
  }
  if (meta.model) j["model"] = model_to_json(*meta.model);
  if (!meta.trajectory_label.empty()) j["trajectory"] = meta.trajectory_label;
  return j;
}

FrameMetadata metadata_from_json(const json& j) {
  const std::string where = "frame metadata";
  FrameMetadata meta;
  meta.rate_hz = json_get<double>(j, "rate_hz", where);
  meta.gauge_pitch_mm = json_get<double>(j, "gauge_pitch_mm", where);
  if (j.contains("sensing_length_mm")) meta.sensing_length_mm = json_get<double>(j, "sensing_length_mm", where);
  if (j.contains("seed")) meta.seed = json_get<std::uint64_t>(j, "seed", where);
  if (j.contains("sigma_ue")) meta.sigma_ue = json_get<double>(j, "sigma_ue", where);
  if (j.contains("compliance")) {
    const json& c = j.at("compliance");
    meta.compliance = simulator::ComplianceModel{json_get<double>(c, "attenuation", where),
                                                 json_get<double>(c, "ramp_length_mm", where)};
  }
  if (j.contains("model")) meta.model = model_from_json(j.at("model"));
  if (j.contains("trajectory")) meta.trajectory_label = json_get<std::string>(j, "trajectory", where);
  return meta;
}

std::filesystem::path sidecar_path(const std::filesystem::path& frames_csv) {
  auto p = frames_csv;
  return p.replace_extension(".json");
}

void write_frames(const std::filesystem::path& path, const simulator::FrameSeries& series,
                  const FrameMetadata& meta) {
  write_text(path, frames_to_csv(series));
  write_text(sidecar_path(path), metadata_to_json(meta).dump(2) + "\n");
}

simulator::FrameSeries read_frames(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path, kFramesHeader);
  std::optional<FrameMetadata> meta;
  if (const auto side = sidecar_path(path); std::filesystem::exists(side)) {
    meta = metadata_from_json(parse_json_file(side));
  }

  simulator::FrameSeries series;
  series.rate_hz = meta ? meta->rate_hz : kDefaultFrameRateHz;
  std::vector<std::vector<double>> positions;
  long long current = -1;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string where = path.string() + ":" + std::to_string(table.lines[r]);
    const long long idx = parse_int(row[0], where);
    if (idx != current) {
      if (idx != current + 1) {
        throw DomainError(where + ": frame_idx must start at 0 and increase by 1");
      }
      current = idx;
      series.frames.emplace_back();
      series.frames.back().depth_mm = parse_double(row[1], where);
      positions.emplace_back();
    }
    positions.back().push_back(parse_double(row[2], where));
    series.frames.back().profile.samples.push_back(parse_double(row[3], where));
  }

  for (std::size_t k = 0; k < series.frames.size(); ++k) {
    auto& profile = series.frames[k].profile;
    const auto& s = positions[k];
    profile.origin_offset = s.front();
    if (meta) {
      profile.gauge_pitch = meta->gauge_pitch_mm;
    } else if (s.size() >= 2) {
      profile.gauge_pitch = (s.back() - s.front()) / static_cast<double>(s.size() - 1);
    }
    profile.timestamp = static_cast<double>(k) / series.rate_hz;
  }
  simulator::validate(series);
  return series;
}

std::string shape_to_csv(const PlanarShape& shape) {
  std::string out = std::string(kShapeHeader) + "\n";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const auto& p = shape.points[i];
    out += format_double(shape.arc_positions[i]) + "," + format_double(p.x) + "," +
           format_double(p.y) + "," + format_double(p.theta) + "\n";
  }
  return out;
}

PlanarShape read_shape(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path, kShapeHeader);
  PlanarShape shape;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string where = path.string() + ":" + std::to_string(table.lines[r]);
    shape.arc_positions.push_back(parse_double(row[0], where));
    shape.points.push_back(
        {parse_double(row[1], where), parse_double(row[2], where), parse_double(row[3], where)});
    if (r > 0 && !(shape.arc_positions[r] > shape.arc_positions[r - 1])) {
      throw DomainError(where + ": s_mm must be strictly increasing");
    }
  }
  if (shape.empty()) throw DomainError(path.string() + ": shape has no points");
  return shape;
}

std::string reports_to_csv(const std::vector<metrics::EvaluationReport>& reports) {
  std::string out = std::string(kReportHeader) + "\n";
  for (const auto& r : reports) {
    out += r.label + "," + format_double(r.tip_error_mm) + "," + format_double(r.tip_error_pct) +
           "," + format_double(r.shape_error_mm) + "," + format_double(r.shape_error_pct) + "," +
           std::to_string(r.trials) + "\n";
  }
  return out;
}

std::vector<metrics::EvaluationReport> read_reports(const std::filesystem::path& path,
                                                    double instrument_length_mm) {
  const CsvTable table = read_csv(path, kReportHeader);
  std::vector<metrics::EvaluationReport> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string where = path.string() + ":" + std::to_string(table.lines[r]);
    metrics::EvaluationReport rep;
    rep.label = row[0];
    rep.tip_error_mm = parse_double(row[1], where);
    rep.tip_error_pct = parse_double(row[2], where);
    rep.shape_error_mm = parse_double(row[3], where);
    rep.shape_error_pct = parse_double(row[4], where);
    rep.trials = static_cast<int>(parse_int(row[5], where));
    rep.instrument_length_mm = instrument_length_mm;
    out.push_back(rep);
  }
  return out;
}

simulator::FrameSeries tare(const simulator::FrameSeries& frames, const StrainProfile& baseline) {
  reconstruction::validate(baseline);
  simulator::FrameSeries out = frames;
  for (std::size_t k = 0; k < out.frames.size(); ++k) {
    auto& profile = out.frames[k].profile;
    if (profile.size() != baseline.size() || profile.gauge_pitch != baseline.gauge_pitch) {
      throw DomainError("tare: baseline grid (" + std::to_string(baseline.size()) + " gauges @ " +
                        format_double(baseline.gauge_pitch) + " mm) does not match frame " +
                        std::to_string(k) + " (" + std::to_string(profile.size()) + " gauges @ " +
                        format_double(profile.gauge_pitch) + " mm)");
    }
    kernels::subtract(profile.samples, baseline.samples, profile.samples);
  }
  return out;
}

}  // namespace ofdrshape::io
