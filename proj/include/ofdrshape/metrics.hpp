#pragma once

// Tip and shape error between a reconstructed and a ground-truth centerline.
// Both are absolute-frame metrics in mm; no registration is applied here.

#include <span>
#include <string>
#include <vector>

#include "ofdrshape/types.hpp"

namespace ofdrshape::metrics {

/// Linear interpolation of (x, y) along the shape's arc positions. Existing sample
/// positions return the stored points exactly. Throws DomainError outside the span.
std::vector<Point2D> resample_by_arclength(const PlanarShape& shape,
                                           std::span<const double> positions);

/// Euclidean distance between the final points.
double tip_error(const PlanarShape& measured, const PlanarShape& truth);

/// Mean point-pair distance over the measured shape's own gauge grid; `truth` is
/// resampled at those arc positions.
double shape_error(const PlanarShape& measured, const PlanarShape& truth);

/// Mean point-pair distance over `n_points` evenly spaced positions spanning the
/// measured shape. Throws DomainError naming the shape that does not cover the window.
double shape_error(const PlanarShape& measured, const PlanarShape& truth, std::size_t n_points);

/// Largest point-pair distance on the same grid as shape_error(measured, truth).
double max_pointwise_error(const PlanarShape& measured, const PlanarShape& truth);

/// error / instrument_length * 100.
double normalize_error(double error_mm, double instrument_length_mm);

/// Radius of the least-squares circle through the shape points (algebraic fit on
/// centered coordinates). Infinite for collinear points.
double best_fit_radius(const PlanarShape& shape);

struct EvaluationReport {
  std::string label;
  double tip_error_mm = 0.0;
  double shape_error_mm = 0.0;
  double tip_error_pct = 0.0;
  double shape_error_pct = 0.0;
  double instrument_length_mm = kDefaultSensingLengthMm;
  int trials = 1;
};

EvaluationReport make_report(std::string label, double tip_error_mm, double shape_error_mm,
                             double instrument_length_mm = kDefaultSensingLengthMm, int trials = 1);

/// Mean of the absolute errors, re-normalized; `trials` is the total trial count.
/// Throws DomainError for an empty list or mixed labels/lengths.
EvaluationReport aggregate_trials(std::span<const EvaluationReport> reports);

}  // namespace ofdrshape::metrics
