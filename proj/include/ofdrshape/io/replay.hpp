#pragma once

// Fixed-rate replay of a frame series into a consumer.
//
// A timer-paced producer thread pushes frame k at start + k / rate into a 3-slot
// drop-oldest queue; a consumer thread pops and calls the sink. Frames reach the sink
// in increasing index order; frames evicted while the sink is busy count as drops.

#include <cstddef>
#include <functional>
#include <string>

#include "ofdrshape/simulator.hpp"

namespace ofdrshape::io {

inline constexpr std::size_t kReplayBufferFrames = 3;

/// Called once per delivered frame. Throwing aborts the replay.
using FrameSink = std::function<void(std::size_t frame_idx, const simulator::Frame& frame)>;

struct ReplayReport {
  std::size_t produced = 0;
  std::size_t emitted = 0;  // delivered to the sink
  std::size_t dropped = 0;
  double wall_time_s = 0.0;  // first scheduled push to last sink return
  double mean_jitter_ms = 0.0;  // |actual - scheduled| push time
  double max_jitter_ms = 0.0;
  bool aborted = false;
  std::string error;
};

/// Throws DomainError when rate <= 0. Sink failures do not throw: the report comes
/// back with `aborted` set and the partial counts.
ReplayReport replay(const simulator::FrameSeries& frames, double rate_hz, const FrameSink& sink,
                    std::size_t buffer_frames = kReplayBufferFrames);

}  // namespace ofdrshape::io
