#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "ofdrshape/reconstruction.hpp"
#include "ofdrshape/types.hpp"

namespace ofdrshape::io {

/// Settings shared by the CLI subcommands. Empty paths mean "not given".
struct RunConfig {
  std::string calibration_path;
  std::string trajectory_path;  // JSON file or preset label
  std::string frames_path;
  double smoothing_window_mm = reconstruction::kDefaultSmoothingWindowMm;
  double sensing_length_mm = kDefaultSensingLengthMm;
  double gauge_pitch_mm = kDefaultGaugePitchMm;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = ".";
};

/// Numeric checks (DomainError) and existence of every given input path (IoError).
/// The output directory is created when missing.
void validate(const RunConfig& config);

}  // namespace ofdrshape::io
