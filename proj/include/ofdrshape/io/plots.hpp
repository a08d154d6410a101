#pragma once

// Deterministic SVG plots: identical inputs produce identical bytes.

#include <filesystem>
#include <string>
#include <vector>

#include "ofdrshape/simulator.hpp"
#include "ofdrshape/types.hpp"

namespace ofdrshape::io {

/// Inner radius of the guide tube drawn around the expected midline, in mm.
inline constexpr double kTubeInnerRadiusMm = 1.55;

/// Strain (µε) against gauge arc position (mm), one polyline per frame.
/// Throws DomainError for an empty series.
std::string strain_plot_svg(const simulator::FrameSeries& series, const std::string& title);

/// Measured shapes over the expected midline and the tube's inner/outer walls
/// (midline offset by +-tube_radius_mm along its normal).
std::string shape_plot_svg(const std::vector<PlanarShape>& measured, const PlanarShape& expected,
                           double tube_radius_mm, const std::string& title);

/// Render then write; no file is created when rendering fails. IoError when the
/// path is not writable.
void emit_strain_plot(const std::filesystem::path& path, const simulator::FrameSeries& series,
                      const std::string& title);
void emit_shape_plot(const std::filesystem::path& path, const std::vector<PlanarShape>& measured,
                     const PlanarShape& expected, const std::string& title,
                     double tube_radius_mm = kTubeInnerRadiusMm);

}  // namespace ofdrshape::io
