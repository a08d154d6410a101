#include "ofdrshape/io/replay.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "ofdrshape/error.hpp"
#include "ofdrshape/io/bounded_queue.hpp"

namespace ofdrshape::io {

ReplayReport replay(const simulator::FrameSeries& frames, double rate_hz, const FrameSink& sink,
                    std::size_t buffer_frames) {
  if (!std::isfinite(rate_hz) || rate_hz <= 0.0) throw DomainError("replay rate must be > 0");

  using Clock = std::chrono::steady_clock;
  const auto period = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(1.0 / rate_hz));

  DropOldestQueue<std::size_t> queue(buffer_frames);
  std::atomic<bool> abort{false};
  ReplayReport report;
  Clock::time_point last_delivery{};

  const Clock::time_point start = Clock::now();
  std::thread consumer([&] {
    while (auto idx = queue.pop()) {
      try {
        sink(*idx, frames.frames[*idx]);
      } catch (const std::exception& e) {
        report.error = e.what();
        abort = true;
        queue.close();
        return;
      } catch (...) {
        report.error = "unknown sink failure";
        abort = true;
        queue.close();
        return;
      }
      ++report.emitted;
      last_delivery = Clock::now();
    }
  });

  double jitter_sum = 0.0;
  for (std::size_t k = 0; k < frames.frames.size() && !abort; ++k) {
    const auto due = start + period * static_cast<long long>(k);
    std::this_thread::sleep_until(due);
    const double late_ms = std::chrono::duration<double, std::milli>(Clock::now() - due).count();
    jitter_sum += std::abs(late_ms);
    report.max_jitter_ms = std::max(report.max_jitter_ms, std::abs(late_ms));
    report.dropped += queue.push(k);
    ++report.produced;
  }
  queue.close();
  consumer.join();

  report.aborted = abort;
  if (report.produced > 0) report.mean_jitter_ms = jitter_sum / static_cast<double>(report.produced);
  if (report.emitted > 0) {
    report.wall_time_s = std::chrono::duration<double>(last_delivery - start).count();
  }
  return report;
}

}  // namespace ofdrshape::io
