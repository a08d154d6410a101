#include "ofdrshape/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <string>
#include <thread>

#include "ofdrshape/error.hpp"
#include "ofdrshape/kernels/kernels.hpp"
#include "ofdrshape/reconstruction.hpp"

namespace ofdrshape::simulator {
namespace {

// Integral, in gauge-cell units, of the piecewise-constant signal from the left edge
// of cell 0 to u. Cells are [k, k+1); the end values extend past both ends.
double cell_integral(const std::vector<double>& values, const std::vector<double>& prefix,
                     double u) {
  const auto n = static_cast<double>(values.size());
  if (u <= 0.0) return values.front() * u;
  if (u >= n) return prefix.back() + values.back() * (u - n);
  const double cell = std::floor(u);
  const auto k = static_cast<std::size_t>(cell);
  return prefix[k] + values[k] * (u - cell);
}

std::mt19937_64 frame_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

void validate(const ComplianceModel& c) {
  if (!(c.attenuation > 0.0 && c.attenuation <= 1.0)) {
    throw DomainError("compliance attenuation must lie in (0, 1]");
  }
  if (!std::isfinite(c.ramp_length_mm) || c.ramp_length_mm < 0.0) {
    throw DomainError("compliance ramp length must be finite and >= 0");
  }
}

void validate(const NoiseModel& n) {
  if (!std::isfinite(n.sigma_ue) || n.sigma_ue < 0.0) {
    throw DomainError("noise sigma must be finite and >= 0");
  }
}

void validate(const FrameSeries& series) {
  if (!(series.rate_hz > 0.0)) throw DomainError("frame rate must be > 0");
  for (std::size_t k = 0; k < series.frames.size(); ++k) {
    const auto& f = series.frames[k];
    reconstruction::validate(f.profile);
    if (k == 0) continue;
    const auto& prev = series.frames[k - 1];
    if (!(f.depth_mm > prev.depth_mm)) {
      throw DomainError("frame depths must be strictly increasing (frame " + std::to_string(k) +
                        ")");
    }
    if (f.profile.gauge_pitch != prev.profile.gauge_pitch ||
        f.profile.size() != prev.profile.size()) {
      throw DomainError("frame " + std::to_string(k) + " has a different gauge grid");
    }
  }
}

StrainProfile ideal_strain(const CurvatureProfile& curv,
                           const calibration::CalibrationModel& model) {
  reconstruction::validate(curv);
  StrainProfile out;
  out.gauge_pitch = curv.gauge_pitch;
  out.origin_offset = curv.origin_offset;
  out.samples.reserve(curv.size());
  for (double kappa : curv.samples) {
    out.samples.push_back(kappa == 0.0 ? 0.0
                                       : calibration::strain_from_radius(model, 1.0 / kappa).strain_ue);
  }
  return out;
}

StrainProfile apply_compliance(const StrainProfile& profile, const ComplianceModel& c) {
  reconstruction::validate(profile);
  validate(c);
  StrainProfile out = profile;
  if (c.ramp_length_mm > 0.0) {
    const auto& v = profile.samples;
    std::vector<double> prefix(v.size() + 1, 0.0);
    for (std::size_t k = 0; k < v.size(); ++k) prefix[k + 1] = prefix[k] + v[k];
    const double half = 0.5 * c.ramp_length_mm / profile.gauge_pitch;
    const double width = 2.0 * half;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double center = static_cast<double>(i) + 0.5;
      out.samples[i] =
          (cell_integral(v, prefix, center + half) - cell_integral(v, prefix, center - half)) /
          width;
    }
  }
  kernels::scale(out.samples, c.attenuation, out.samples);
  return out;
}

Frame simulate_frame(const trajectory::TrajectorySpec& spec, double depth_mm, std::size_t index,
                     const calibration::CalibrationModel& model,
                     const ComplianceModel& compliance, const NoiseModel& noise,
                     const SimulationConfig& config) {
  const std::size_t n = trajectory::gauge_count(config.sensing_length_mm, config.gauge_pitch_mm);
  // Proximal padding keeps the window edge from being smoothed like a transition.
  const auto pad = static_cast<std::size_t>(
      std::ceil(0.5 * compliance.ramp_length_mm / config.gauge_pitch_mm)) + 1;
  const double padded_length =
      static_cast<double>(n - 1 + pad) * config.gauge_pitch_mm;
  const CurvatureProfile curv =
      trajectory::curvature_at_depth(spec, depth_mm, padded_length, config.gauge_pitch_mm);
  const StrainProfile complied = apply_compliance(ideal_strain(curv, model), compliance);

  Frame frame;
  frame.depth_mm = depth_mm;
  StrainProfile& out = frame.profile;
  out.gauge_pitch = config.gauge_pitch_mm;
  const std::size_t drop = complied.size() - n;
  out.origin_offset = depth_mm - static_cast<double>(n - 1) * config.gauge_pitch_mm;
  out.timestamp = static_cast<double>(index) / config.rate_hz;
  out.samples.assign(complied.samples.begin() + static_cast<std::ptrdiff_t>(drop),
                     complied.samples.end());

  if (noise.sigma_ue > 0.0) {
    auto rng = frame_rng(noise.seed, index);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> z(n);
    for (double& value : z) value = gauss(rng);
    kernels::add_scaled(out.samples, z, noise.sigma_ue);
  }
  return frame;
}

FrameSeries simulate_series(const trajectory::TrajectorySpec& spec,
                            const trajectory::InsertionSchedule& schedule,
                            const calibration::CalibrationModel& model,
                            const ComplianceModel& compliance, const NoiseModel& noise,
                            const SimulationConfig& config) {
  validate(compliance);
  validate(noise);
  if (!(config.rate_hz > 0.0)) throw DomainError("frame rate must be > 0");
  if (!(config.sensing_length_mm > 0.0)) throw DomainError("sensing length must be > 0");
  if (!(config.gauge_pitch_mm > 0.0)) throw DomainError("gauge pitch must be > 0");
  for (std::size_t k = 1; k < schedule.depths.size(); ++k) {
    if (!(schedule.depths[k] > schedule.depths[k - 1])) {
      throw DomainError("schedule depths must be strictly increasing");
    }
  }

  FrameSeries series;
  series.rate_hz = config.rate_hz;
  series.frames.resize(schedule.depths.size());
  const std::size_t count = schedule.depths.size();
  const unsigned workers =
      std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(count)));

  auto run = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t k = begin; k < count; k += stride) {
      series.frames[k] = simulate_frame(spec, schedule.depths[k], k, model, compliance, noise, config);
    }
  };
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            run(w, workers);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return series;
}

}  // namespace ofdrshape::simulator
