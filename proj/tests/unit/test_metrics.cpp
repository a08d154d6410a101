#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ofdrshape/error.hpp"
#include "ofdrshape/metrics.hpp"
#include "ofdrshape/trajectory.hpp"

using namespace ofdrshape;
using namespace ofdrshape::metrics;

namespace {

PlanarShape straight(double length, double pitch, double y = 0.0) {
  PlanarShape s;
  const auto n = static_cast<std::size_t>(std::llround(length / pitch)) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = static_cast<double>(i) * pitch;
    s.points.push_back({p, y, 0.0});
    s.arc_positions.push_back(p);
  }
  return s;
}

PlanarShape arc(double radius, double length, std::size_t n) {
  PlanarShape s;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = length * static_cast<double>(i) / static_cast<double>(n - 1);
    s.points.push_back({radius * std::sin(p / radius), radius * (1 - std::cos(p / radius)),
                        p / radius});
    s.arc_positions.push_back(p);
  }
  return s;
}

PlanarShape random_shape(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 5.0);
  PlanarShape s;
  for (std::size_t i = 0; i < n; ++i) {
    s.points.push_back({g(rng), g(rng), 0.0});
    s.arc_positions.push_back(0.65 * static_cast<double>(i));
  }
  return s;
}

}  // namespace

TEST(Resample, StraightMidpoint) {
  const std::vector<double> q{22.5};
  const auto p = resample_by_arclength(straight(45.0, 0.65), q);
  EXPECT_NEAR(p[0].x, 22.5, 1e-12);
  EXPECT_EQ(p[0].y, 0.0);
}

TEST(Resample, GridPositionsAreExact) {
  std::mt19937_64 rng(1);
  const auto s = random_shape(rng, 30);
  const auto p = resample_by_arclength(s, s.arc_positions);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(p[i].x, s.points[i].x);
    EXPECT_EQ(p[i].y, s.points[i].y);
  }
}

TEST(Resample, FineArcMatchesAnalytic) {
  const auto shape = trajectory::centerline(
      trajectory::TrajectorySpec("a", {trajectory::Segment::arc(50.0, 50.0)}), 0.01);
  const std::vector<double> q{25.0};
  const auto p = resample_by_arclength(shape, q);
  EXPECT_NEAR(p[0].x, 23.97127693021015, 1e-5);
  EXPECT_NEAR(p[0].y, 6.120871905481364, 1e-5);
}

TEST(Resample, OutOfSpanIsDomainError) {
  const std::vector<double> q{46.0};
  EXPECT_THROW(resample_by_arclength(straight(45.0, 0.65), q), DomainError);
  EXPECT_THROW(resample_by_arclength(PlanarShape{}, q), DomainError);
}

TEST(TipError, Examples) {
  const auto a = straight(10.0, 1.0);
  EXPECT_EQ(tip_error(a, a), 0.0);
  auto b = a;
  b.points.back().x += 3.0;
  b.points.back().y += 4.0;
  EXPECT_DOUBLE_EQ(tip_error(a, b), 5.0);
  EXPECT_NEAR(tip_error(arc(50.0, 50.0, 11), straight(50.0, 5.0)), 24.313238094088144, 1e-12);
}

TEST(ShapeError, Examples) {
  const auto a = straight(45.0, 0.65);
  EXPECT_EQ(shape_error(a, a), 0.0);
  EXPECT_NEAR(shape_error(straight(45.0, 0.65, 0.5), a), 0.5, 1e-12);
  EXPECT_NEAR(shape_error(straight(10.0, 2.5), arc(100.0, 10.0, 5)), 0.18746159222623292,
              1e-12);
  EXPECT_NEAR(shape_error(straight(10.0, 2.5), arc(100.0, 10.0, 5), 5), 0.18746159222623292,
              1e-12);
}

TEST(ShapeError, TruthMustCoverMeasured) {
  EXPECT_THROW(shape_error(straight(45.0, 0.65), straight(30.0, 0.65)), DomainError);
  EXPECT_THROW(shape_error(straight(45.0, 0.65), straight(45.0, 0.65), 1), DomainError);
}

TEST(Normalize, TableValues) {
  EXPECT_NEAR(normalize_error(1.73, 45.0), 3.84, 5e-3);
  EXPECT_NEAR(normalize_error(0.46, 45.0), 1.02, 5e-3);
  EXPECT_EQ(normalize_error(0.0, 12.0), 0.0);
  EXPECT_THROW(normalize_error(1.0, 0.0), DomainError);
}

TEST(Aggregate, MeansOverTrials) {
  const std::vector<EvaluationReport> one{make_report("R39", 1.5, 0.4)};
  const auto same = aggregate_trials(one);
  EXPECT_EQ(same.tip_error_mm, 1.5);
  EXPECT_EQ(same.trials, 1);

  std::vector<EvaluationReport> three;
  for (auto [tip, shape] : {std::pair{1.0, 0.3}, std::pair{2.0, 0.4}, std::pair{3.0, 0.5}}) {
    three.push_back(make_report("R39", tip, shape));
  }
  const auto agg = aggregate_trials(three);
  EXPECT_DOUBLE_EQ(agg.tip_error_mm, 2.0);
  EXPECT_DOUBLE_EQ(agg.shape_error_mm, 0.4);
  EXPECT_NEAR(agg.shape_error_pct, 0.89, 5e-3);
  EXPECT_EQ(agg.trials, 3);
}

TEST(Aggregate, Errors) {
  EXPECT_THROW(aggregate_trials({}), DomainError);
  const std::vector<EvaluationReport> mixed{make_report("R39", 1, 1), make_report("R50", 1, 1)};
  EXPECT_THROW(aggregate_trials(mixed), DomainError);
  const std::vector<EvaluationReport> lengths{make_report("R39", 1, 1, 45.0),
                                              make_report("R39", 1, 1, 50.0)};
  EXPECT_THROW(aggregate_trials(lengths), DomainError);
  EXPECT_THROW(make_report("x", -1.0, 0.0), DomainError);
}

TEST(BestFitRadius, RecoversArcAndStraight) {
  EXPECT_NEAR(best_fit_radius(arc(46.0, 45.0, 70)), 46.0, 1e-9);
  EXPECT_NEAR(best_fit_radius(arc(121.0, 20.0, 31)), 121.0, 1e-6);
  EXPECT_TRUE(std::isinf(best_fit_radius(straight(45.0, 0.65))));
  EXPECT_THROW(best_fit_radius(straight(1.0, 1.0)), DomainError);
}

TEST(MetricProperties, RandomPairs) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> shift(0.0, 2.0);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 2 + rng() % 40;
    const auto a = random_shape(rng, n);
    const auto b = random_shape(rng, n);
    const double tab = tip_error(a, b);
    const double sab = shape_error(a, b);
    EXPECT_GE(tab, 0.0);
    EXPECT_GT(sab, 0.0);
    EXPECT_EQ(tab, tip_error(b, a));
    EXPECT_EQ(sab, shape_error(b, a));
    EXPECT_EQ(shape_error(a, a), 0.0);
    EXPECT_LE(sab, max_pointwise_error(a, b) * (1 + 1e-15));

    auto moved = a;
    const double dx = shift(rng), dy = shift(rng);
    for (auto& p : moved.points) {
      p.x += dx;
      p.y += dy;
    }
    if (dx != 0.0 || dy != 0.0) {
      EXPECT_GT(tip_error(moved, a), 0.0);
      EXPECT_GT(shape_error(moved, a), 0.0);
    }
  }
}
