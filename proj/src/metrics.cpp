#include "ofdrshape/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ofdrshape/error.hpp"
#include "ofdrshape/kernels/kernels.hpp"

namespace ofdrshape::metrics {
namespace {

constexpr double kSpanTolerance = 1e-9;

void require_nonempty(const PlanarShape& shape, const char* name) {
  if (shape.empty()) throw DomainError(std::string(name) + " shape is empty");
  if (shape.arc_positions.size() != shape.points.size()) {
    throw DomainError(std::string(name) + " shape has mismatched point/arc-position counts");
  }
}

struct Columns {
  std::vector<double> x;
  std::vector<double> y;
};

Columns to_columns(std::span<const Point2D> points) {
  Columns c;
  c.x.reserve(points.size());
  c.y.reserve(points.size());
  for (const auto& p : points) {
    c.x.push_back(p.x);
    c.y.push_back(p.y);
  }
  return c;
}

std::vector<double> pair_distances(const PlanarShape& measured, const PlanarShape& truth,
                                   std::span<const double> grid) {
  const Columns a = to_columns(resample_by_arclength(measured, grid));
  const Columns b = to_columns(resample_by_arclength(truth, grid));
  std::vector<double> d(grid.size());
  kernels::point_distances(a.x, a.y, b.x, b.y, d);
  return d;
}

void require_covers(const PlanarShape& truth, double lo, double hi) {
  if (truth.start_position() > lo + kSpanTolerance || truth.end_position() < hi - kSpanTolerance) {
    throw DomainError("truth shape [" + std::to_string(truth.start_position()) + ", " +
                      std::to_string(truth.end_position()) +
                      "] mm is shorter than the measured comparison window [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "] mm");
  }
}

double mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

std::vector<Point2D> resample_by_arclength(const PlanarShape& shape,
                                           std::span<const double> positions) {
  require_nonempty(shape, "input");
  const auto& s = shape.arc_positions;
  std::vector<Point2D> out;
  out.reserve(positions.size());
  for (double q : positions) {
    if (!(q >= s.front() - kSpanTolerance && q <= s.back() + kSpanTolerance)) {
      throw DomainError("arc position " + std::to_string(q) + " mm outside shape span [" +
                        std::to_string(s.front()) + ", " + std::to_string(s.back()) + "]");
    }
    const auto it = std::lower_bound(s.begin(), s.end(), q);
    if (it == s.end()) {
      out.push_back({shape.points.back().x, shape.points.back().y});
      continue;
    }
    const auto hi = static_cast<std::size_t>(std::distance(s.begin(), it));
    if (*it == q || hi == 0) {
      out.push_back({shape.points[hi].x, shape.points[hi].y});
      continue;
    }
    const std::size_t lo = hi - 1;
    const double t = (q - s[lo]) / (s[hi] - s[lo]);
    const Pose2D& a = shape.points[lo];
    const Pose2D& b = shape.points[hi];
    out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
  }
  return out;
}

double tip_error(const PlanarShape& measured, const PlanarShape& truth) {
  require_nonempty(measured, "measured");
  require_nonempty(truth, "truth");
  const double dx = measured.tip().x - truth.tip().x;
  const double dy = measured.tip().y - truth.tip().y;
  return std::sqrt(dx * dx + dy * dy);
}

double shape_error(const PlanarShape& measured, const PlanarShape& truth) {
  require_nonempty(measured, "measured");
  require_nonempty(truth, "truth");
  require_covers(truth, measured.start_position(), measured.end_position());
  return mean(pair_distances(measured, truth, measured.arc_positions));
}

double shape_error(const PlanarShape& measured, const PlanarShape& truth, std::size_t n_points) {
  require_nonempty(measured, "measured");
  require_nonempty(truth, "truth");
  if (n_points < 2) throw DomainError("shape error needs at least 2 comparison points");
  const double lo = measured.start_position();
  const double hi = measured.end_position();
  require_covers(truth, lo, hi);
  std::vector<double> grid(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_points - 1);
  }
  grid.back() = hi;
  return mean(pair_distances(measured, truth, grid));
}

double max_pointwise_error(const PlanarShape& measured, const PlanarShape& truth) {
  require_nonempty(measured, "measured");
  require_nonempty(truth, "truth");
  require_covers(truth, measured.start_position(), measured.end_position());
  const auto d = pair_distances(measured, truth, measured.arc_positions);
  return *std::max_element(d.begin(), d.end());
}

double normalize_error(double error_mm, double instrument_length_mm) {
  if (!std::isfinite(instrument_length_mm) || instrument_length_mm <= 0.0) {
    throw DomainError("instrument length must be > 0");
  }
  return error_mm / instrument_length_mm * 100.0;
}

double best_fit_radius(const PlanarShape& shape) {
  if (shape.size() < 3) throw DomainError("circle fit needs at least 3 points");
  double cx = 0.0;
  double cy = 0.0;
  for (const auto& p : shape.points) {
    cx += p.x;
    cy += p.y;
  }
  const auto n = static_cast<double>(shape.size());
  cx /= n;
  cy /= n;
  // Kasa fit: u^2 + v^2 = 2 a u + 2 b v + c in centered coordinates.
  double suu = 0, svv = 0, suv = 0, suz = 0, svz = 0, sz = 0;
  for (const auto& p : shape.points) {
    const double u = p.x - cx;
    const double v = p.y - cy;
    const double z = u * u + v * v;
    suu += u * u;
    svv += v * v;
    suv += u * v;
    suz += u * z;
    svz += v * z;
    sz += z;
  }
  const double det = suu * svv - suv * suv;
  if (std::abs(det) <= 1e-12 * (suu * svv + 1e-300)) return std::numeric_limits<double>::infinity();
  const double a = 0.5 * (suz * svv - svz * suv) / det;
  const double b = 0.5 * (svz * suu - suz * suv) / det;
  const double c = sz / n;
  return std::sqrt(a * a + b * b + c);
}

EvaluationReport make_report(std::string label, double tip_error_mm, double shape_error_mm,
                             double instrument_length_mm, int trials) {
  if (!(tip_error_mm >= 0.0) || !(shape_error_mm >= 0.0)) {
    throw DomainError("errors must be >= 0");
  }
  EvaluationReport r;
  r.label = std::move(label);
  r.tip_error_mm = tip_error_mm;
  r.shape_error_mm = shape_error_mm;
  r.instrument_length_mm = instrument_length_mm;
  r.tip_error_pct = normalize_error(tip_error_mm, instrument_length_mm);
  r.shape_error_pct = normalize_error(shape_error_mm, instrument_length_mm);
  r.trials = trials;
  return r;
}

EvaluationReport aggregate_trials(std::span<const EvaluationReport> reports) {
  if (reports.empty()) throw DomainError("no reports to aggregate");
  const auto& first = reports.front();
  double tip = 0.0;
  double shape = 0.0;
  int trials = 0;
  for (const auto& r : reports) {
    if (r.label != first.label) {
      throw DomainError("cannot aggregate reports with labels '" + first.label + "' and '" +
                        r.label + "'");
    }
    if (r.instrument_length_mm != first.instrument_length_mm) {
      throw DomainError("cannot aggregate reports with different instrument lengths");
    }
    tip += r.tip_error_mm;
    shape += r.shape_error_mm;
    trials += r.trials;
  }
  const auto n = static_cast<double>(reports.size());
  return make_report(first.label, tip / n, shape / n, first.instrument_length_mm, trials);
}

}  // namespace ofdrshape::metrics
