#include "ofdrshape/io/run_config.hpp"

#include <cmath>

#include "ofdrshape/error.hpp"

namespace ofdrshape::io {
namespace {

void require_file(const std::string& path, const char* what) {
  if (path.empty()) return;
  if (!std::filesystem::is_regular_file(path)) {
    throw IoError(std::string(what) + " file '" + path + "' does not exist");
  }
}

}  // namespace

void validate(const RunConfig& config) {
  if (!std::isfinite(config.smoothing_window_mm) || config.smoothing_window_mm < 0.0) {
    throw DomainError("--window-mm must be >= 0");
  }
  if (!std::isfinite(config.sensing_length_mm) || config.sensing_length_mm <= 0.0) {
    throw DomainError("--sensing-length-mm must be > 0");
  }
  if (!std::isfinite(config.gauge_pitch_mm) || config.gauge_pitch_mm <= 0.0) {
    throw DomainError("--gauge-pitch-mm must be > 0");
  }
  require_file(config.calibration_path, "calibration");
  require_file(config.frames_path, "frames");
  // Trajectories may also be preset labels; resolved by load_trajectory.
  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec || !std::filesystem::is_directory(config.output_dir)) {
    throw IoError("cannot create output directory '" + config.output_dir.string() + "'");
  }
}

}  // namespace ofdrshape::io
