#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "ofdrshape/metrics.hpp"

namespace ofdrshape::io {

/// Reproduces the seven free-bending / drilling configurations from simulated data
/// and writes into `out_dir`:
///   table1.csv                       aggregated report rows
///   frames_<label>.csv / .json       first-trial frame series
///   strain_<label>.svg, shape_<label>.svg
/// Output bytes depend only on `seed`.
std::vector<metrics::EvaluationReport> run_demo(std::uint64_t seed,
                                                const std::filesystem::path& out_dir);

}  // namespace ofdrshape::io
